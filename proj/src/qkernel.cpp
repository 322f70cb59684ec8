#include "qid/qkernel.hpp"

#include <stdexcept>

#include "qid/errors.hpp"

namespace qid {

QValue QValue::numeric(const Rational& value)
{
    QValue q;
    q.value_ = value;
    return q;
}

MultiPoly QValue::pow(int exponent) const
{
    if (is_symbolic())
        return MultiPoly::var(sym::q(), exponent);
    return MultiPoly(value_->pow(exponent));
}

MultiPoly QValue::qfactorial(int n) const
{
    return q_pochhammer(poly(), n, *this);
}

MultiPoly QValue::apply(const MultiPoly& p) const
{
    if (is_symbolic())
        return p;
    return substitute(p, sym::q(), MultiPoly(*value_));
}

MultiPoly q_pochhammer(const MultiPoly& base, int n, const QValue& q)
{
    if (n < 0)
        throw InvariantViolation("q_pochhammer: negative length");
    MultiPoly out(1);
    for (int k = 0; k < n; ++k)
        out *= MultiPoly(1) - base * q.pow(k);
    return out;
}

MultiPoly gaussian_binomial(int n, int k, const QValue& q)
{
    if (n < 0 || k < 0 || k > n)
        return MultiPoly();
    std::vector<MultiPoly> row{MultiPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<MultiPoly> next(static_cast<std::size_t>(m) + 1);
        next[0] = MultiPoly(1);
        next[static_cast<std::size_t>(m)] = MultiPoly(1);
        for (int j = 1; j < m; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j) - 1] + q.pow(j) * row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

MultiPoly cauchy_poly(int n, const MultiPoly& x, const MultiPoly& y, const QValue& q)
{
    if (n < 0)
        throw InvariantViolation("cauchy_poly: negative degree");
    MultiPoly out(1);
    for (int k = 0; k < n; ++k)
        out *= x - q.pow(k) * y;
    return out;
}

MultiPoly cauchy_poly(int n)
{
    return cauchy_poly(n, MultiPoly::var(sym::x()), MultiPoly::var(sym::y()));
}

MultiPoly generalized_cauchy_poly(int n, const MultiPoly& x, const MultiPoly& y, const MultiPoly& a,
                                  const QValue& q)
{
    if (n < 0)
        throw InvariantViolation("generalized_cauchy_poly: negative degree");
    MultiPoly out;
    MultiPoly poch(1);  // (a; q)_k
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            poch *= MultiPoly(1) - a * q.pow(k - 1);
        MultiPoly term = gaussian_binomial(n, k, q) * q.pow(binom2(k)) * poch * x.pow(n - k) * y.pow(k);
        if (k % 2 == 1)
            out -= term;
        else
            out += term;
    }
    return out;
}

MultiPoly generalized_cauchy_poly(int n)
{
    return generalized_cauchy_poly(n, MultiPoly::var(sym::x()), MultiPoly::var(sym::y()),
                                   MultiPoly::var(sym::a()));
}

MultiPoly hahn_poly(int n, const MultiPoly& param, const MultiPoly& x, const QValue& q)
{
    if (n < 0)
        throw InvariantViolation("hahn_poly: negative degree");
    MultiPoly out;
    MultiPoly poch(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            poch *= MultiPoly(1) - param * q.pow(k - 1);
        out += gaussian_binomial(n, k, q) * poch * x.pow(k);
    }
    return out;
}

MultiPoly hahn_poly(int n, Symbol param)
{
    return hahn_poly(n, MultiPoly::var(param), MultiPoly::var(sym::x()));
}

MultiPoly CauchyExpansion::reconstruct() const
{
    const MultiPoly x = MultiPoly::var(xvar);
    const MultiPoly y = MultiPoly::var(yvar);
    MultiPoly out;
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        if (!coeffs[n].is_zero())
            out += coeffs[n] * generalized_cauchy_poly(static_cast<int>(n), x, y, param_a);
    return out;
}

CauchyExpansion expand_in_cauchy_basis(const MultiPoly& p, Symbol xvar, Symbol yvar, const MultiPoly& param_a)
{
    CauchyExpansion out{{}, param_a, xvar, yvar};
    if (p.is_zero())
        return out;
    const auto xr = *p.degree_range(xvar);
    const auto yr = *p.degree_range(yvar);
    if (xr.first < 0 || yr.first < 0)
        throw NotInSpan("'" + p.to_string() + "' has negative powers of " + xvar.name() + " or " + yvar.name());

    const MultiPoly x = MultiPoly::var(xvar);
    const MultiPoly y = MultiPoly::var(yvar);
    const int top = std::max(xr.second, yr.second);
    out.coeffs.assign(static_cast<std::size_t>(top) + 1, MultiPoly());
    MultiPoly residual = p;
    for (int n = top; n >= 0; --n) {
        const MultiPoly c = residual.coefficient(yvar, 0).coefficient(xvar, n);
        if (c.is_zero())
            continue;
        out.coeffs[static_cast<std::size_t>(n)] = c;
        residual -= c * generalized_cauchy_poly(n, x, y, param_a);
    }
    if (!residual.is_zero())
        throw NotInSpan("'" + p.to_string() + "' is not in the span of p_n(" + xvar.name() + "," + yvar.name() +
                        ",a); residual " + residual.to_string());
    while (!out.coeffs.empty() && out.coeffs.back().is_zero())
        out.coeffs.pop_back();
    return out;
}

}  // namespace qid
