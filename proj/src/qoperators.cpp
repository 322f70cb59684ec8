#include "qid/qoperators.hpp"

#include <stdexcept>

#include "qid/errors.hpp"
#include "qid/qkernel.hpp"

namespace qid {

namespace {

void require_polynomial_in(const MultiPoly& p, Symbol var)
{
    if (const auto range = p.degree_range(var); range && range->first < 0)
        throw InvariantViolation("operator applied to '" + p.to_string() + "' which has negative powers of " +
                                 var.name());
}

MultiPoly sign(int k)
{
    return MultiPoly(k % 2 == 0 ? 1 : -1);
}

// Largest number of nonzero powers T^k{p} before T^k{p} must vanish.
int iteration_bound(const OperatorKind& op, const MultiPoly& p)
{
    int bound = 0;
    for (const auto& [m, c] : p.terms()) {
        int d = 0;
        for (Symbol v : op.acting_vars())
            d += m.exponent(v);
        bound = std::max(bound, d);
    }
    return bound + 1;
}

}  // namespace

OperatorKind OperatorKind::theta_xy(Symbol xvar, Symbol yvar)
{
    if (xvar == yvar)
        throw InvariantViolation("theta_xy needs two distinct symbols");
    return OperatorKind(OperatorTag::ThetaXY, {xvar, yvar});
}

MultiPoly OperatorKind::apply(const MultiPoly& p, const QValue& q) const
{
    switch (tag_) {
    case OperatorTag::Dq:
        return d_q(p, vars_[0], q);
    case OperatorTag::ThetaSingle:
        return qid::theta_single(p, vars_[0], q);
    case OperatorTag::ThetaXY:
        return qid::theta_xy(p, vars_[0], vars_[1], q);
    }
    throw InvariantViolation("unknown operator tag");
}

MultiPoly d_q(const MultiPoly& p, Symbol var, const QValue& q)
{
    require_polynomial_in(p, var);
    const MultiPoly x = MultiPoly::var(var);
    const MultiPoly numerator = p - substitute(p, var, q.poly() * x);
    return divide_exact(numerator, var, x);
}

MultiPoly theta_xy(const MultiPoly& p, Symbol xvar, Symbol yvar, const QValue& q)
{
    const MultiPoly x = MultiPoly::var(xvar);
    const MultiPoly y = MultiPoly::var(yvar);
    const MultiPoly shifted_x = q.pow(-1) * x;
    const MultiPoly numerator = substitute(p, xvar, shifted_x) - substitute(p, yvar, q.poly() * y);
    try {
        return divide_exact_linear(numerator, xvar, shifted_x - y);
    } catch (const NonZeroRemainder& e) {
        throw OutsideDomain("theta_xy{" + p.to_string() + "} is not a polynomial: " + e.what());
    }
}

MultiPoly theta_single(const MultiPoly& p, Symbol var, const QValue& q)
{
    require_polynomial_in(p, var);
    const MultiPoly x = MultiPoly::var(var);
    const MultiPoly shifted_x = q.pow(-1) * x;
    const MultiPoly numerator = substitute(p, var, shifted_x) - p;
    return divide_exact(numerator, var, shifted_x);
}

MultiPoly apply_operator_series(const OperatorKind& op, const MultiPoly& b, const MultiPoly& p,
                                const std::function<MultiPoly(int)>& weight, const QValue& q)
{
    for (Symbol v : op.acting_vars()) {
        require_polynomial_in(p, v);
        if (b.contains(v))
            throw InvariantViolation("operator coefficient '" + b.to_string() + "' depends on " + v.name());
    }
    const int bound = iteration_bound(op, p);
    const Symbol qs = sym::q();

    MultiPoly result;
    MultiPoly power = p;  // T^k{p}
    MultiPoly b_power(1);
    for (int k = 0; !power.is_zero(); ++k) {
        if (k > bound)
            throw InvariantViolation("operator powers did not terminate on '" + p.to_string() + "'");
        MultiPoly scaled = power;
        if (q.is_symbolic()) {
            for (int j = 1; j <= k; ++j) {
                try {
                    scaled = divide_exact(scaled, qs, MultiPoly(1) - MultiPoly::var(qs, j));
                } catch (const NonZeroRemainder&) {
                    throw InvariantViolation("T^" + std::to_string(k) + "{p} is not divisible by (q;q)_" +
                                             std::to_string(k));
                }
            }
        } else {
            scaled = scaled * MultiPoly(q.qfactorial(k).constant_term().inverse());
        }
        result += weight(k) * b_power * scaled;
        power = op.apply(power, q);
        b_power *= b;
    }
    return result;
}

MultiPoly apply_R(const MultiPoly& b, const MultiPoly& p, Symbol var, const QValue& q)
{
    return apply_operator_series(
        OperatorKind::dq(var), b, p, [&](int k) { return sign(k) * q.pow(binom2(k)); }, q);
}

MultiPoly apply_E_frak(const MultiPoly& b, const MultiPoly& p, Symbol var, const QValue& q)
{
    return apply_operator_series(
        OperatorKind::theta_single(var), b, p, [&](int k) { return q.pow(binom2(k)); }, q);
}

MultiPoly apply_E_tilde(const MultiPoly& a, const MultiPoly& b, const MultiPoly& p, Symbol var, const QValue& q)
{
    return apply_operator_series(
        OperatorKind::dq(var), b, p,
        [&](int k) { return sign(k) * q.pow(binom2(k)) * q_pochhammer(a, k, q); }, q);
}

MultiPoly apply_L_tilde(const MultiPoly& a, const MultiPoly& b, const MultiPoly& p, Symbol xvar, Symbol yvar,
                        const QValue& q)
{
    return apply_operator_series(
        OperatorKind::theta_xy(xvar, yvar), b, p,
        [&](int k) { return q.pow(binom2(k)) * q_pochhammer(a, k, q); }, q);
}

}  // namespace qid
