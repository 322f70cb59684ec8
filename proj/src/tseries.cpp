#include "qid/tseries.hpp"

#include <sstream>

#include "qid/errors.hpp"
#include "qid/qkernel.hpp"

namespace qid {

namespace {

MultiPoly constant_part(const MultiPoly& p, Symbol var)
{
    return p.coefficient(var, 0);
}

void require_free_of(const MultiPoly& u, Symbol var, const char* what)
{
    if (u.contains(var))
        throw InvariantViolation(std::string(what) + ": '" + u.to_string() + "' contains the series variable");
}

// t^shift * a, truncated.
TruncatedSeries shift_up(const TruncatedSeries& a, int shift)
{
    std::vector<MultiPoly> out(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k + shift <= a.order(); ++k)
        out[static_cast<std::size_t>(k + shift)] = a[k];
    return TruncatedSeries(a.context(), std::move(out));
}

}  // namespace

// ---------------------------------------------------------------- SeriesContext

SeriesContext::SeriesContext(Symbol series_var, int order, Rational q_value)
    : var_(series_var), order_(order), q_value_(std::move(q_value))
{
    if (order_ < 0)
        throw InvalidContext("truncation order must be nonnegative");
    if (series_var == sym::q())
        throw InvalidContext("q cannot be the series variable");
    if (q_value_.is_zero() || q_value_.abs().is_one())
        throw InvalidContext("q must not be 0, 1 or -1 (got " + q_value_.to_string() + ")");
    Rational qfact(1);
    inv_qfactorials_.reserve(static_cast<std::size_t>(order_) + 1);
    for (int n = 0; n <= order_; ++n) {
        if (n > 0)
            qfact *= Rational(1) - q_value_.pow(n);
        if (qfact.is_zero())
            throw InvalidContext("(q;q)_" + std::to_string(n) + " vanishes at q = " + q_value_.to_string());
        inv_qfactorials_.push_back(qfact.inverse());
    }
}

const Rational& SeriesContext::inv_qfactorial(int n) const
{
    static const Rational zero;
    if (n < 0)
        return zero;
    return inv_qfactorials_.at(static_cast<std::size_t>(n));
}

// ---------------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(const SeriesContext& ctx)
    : ctx_(ctx), coeffs_(static_cast<std::size_t>(ctx.order()) + 1)
{
}

TruncatedSeries::TruncatedSeries(const SeriesContext& ctx, std::vector<MultiPoly> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs))
{
    coeffs_.resize(static_cast<std::size_t>(ctx_.order()) + 1);
    for (const auto& c : coeffs_)
        if (c.contains(ctx_.var()) || c.contains(sym::q()))
            throw InvariantViolation("series coefficient '" + c.to_string() + "' contains " + ctx_.var().name() +
                                     " or q");
}

TruncatedSeries TruncatedSeries::from_poly(const SeriesContext& ctx, const MultiPoly& p)
{
    const MultiPoly numeric = ctx.q().apply(p);
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(ctx.order()) + 1);
    for (auto& [e, c] : numeric.collect(ctx.var())) {
        if (e < 0)
            throw InvariantViolation("negative power of the series variable in '" + p.to_string() + "'");
        if (e <= ctx.order())
            coeffs[static_cast<std::size_t>(e)] = std::move(c);
    }
    return TruncatedSeries(ctx, std::move(coeffs));
}

std::optional<int> TruncatedSeries::first_mismatch(const TruncatedSeries& other) const
{
    check_same_context(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != other.coeffs_[k])
            return static_cast<int>(k);
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncate(int order) const
{
    if (order > ctx_.order())
        throw ContextMismatch("cannot truncate to a higher order");
    SeriesContext ctx(ctx_.var(), order, ctx_.q_value());
    return TruncatedSeries(ctx, std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

void TruncatedSeries::check_same_context(const TruncatedSeries& rhs) const
{
    if (!(ctx_ == rhs.ctx_))
        throw ContextMismatch("series built in different contexts");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    check_same_context(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    check_same_context(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const MultiPoly& scalar)
{
    const MultiPoly s = ctx_.q().apply(scalar);
    require_free_of(s, ctx_.var(), "scalar factor");
    for (auto& c : coeffs_)
        c = c * s;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    lhs.check_same_context(rhs);
    const std::size_t n = lhs.coeffs_.size();
    std::vector<MultiPoly> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!rhs.coeffs_[j].is_zero())
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return TruncatedSeries(lhs.ctx_, std::move(out));
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        os << ctx_.var().name() << '^' << k << ": " << coeffs_[k] << '\n';
    return os.str();
}

// ---------------------------------------------------------------- builders

TruncatedSeries invert(const TruncatedSeries& a)
{
    const MultiPoly& c0 = a[0];
    if (c0.is_zero() || !c0.is_constant())
        throw NonUnitConstantTerm("constant coefficient '" + c0.to_string() + "' is not a nonzero rational");
    const MultiPoly inv0(c0.constant_term().inverse());
    std::vector<MultiPoly> out(static_cast<std::size_t>(a.order()) + 1);
    out[0] = inv0;
    for (int n = 1; n <= a.order(); ++n) {
        MultiPoly acc;
        for (int k = 1; k <= n; ++k)
            if (!a[k].is_zero())
                acc += a[k] * out[static_cast<std::size_t>(n - k)];
        out[static_cast<std::size_t>(n)] = -(acc * inv0);
    }
    return TruncatedSeries(a.context(), std::move(out));
}

TruncatedSeries euler_inv_pochhammer(const MultiPoly& u, const SeriesContext& ctx)
{
    const MultiPoly base = ctx.q().apply(u);
    require_free_of(base, ctx.var(), "euler_inv_pochhammer");
    std::vector<MultiPoly> out(static_cast<std::size_t>(ctx.order()) + 1);
    out[0] = MultiPoly(1);
    for (int k = 1; k <= ctx.order(); ++k) {
        const Rational denom = Rational(1) - ctx.q_value().pow(k);
        out[static_cast<std::size_t>(k)] = base * out[static_cast<std::size_t>(k) - 1] * MultiPoly(denom.inverse());
    }
    return TruncatedSeries(ctx, std::move(out));
}

TruncatedSeries euler_pochhammer(const MultiPoly& u, const SeriesContext& ctx)
{
    const MultiPoly base = ctx.q().apply(u);
    require_free_of(base, ctx.var(), "euler_pochhammer");
    std::vector<MultiPoly> out(static_cast<std::size_t>(ctx.order()) + 1);
    out[0] = MultiPoly(1);
    for (int k = 1; k <= ctx.order(); ++k) {
        const Rational factor = -ctx.q_value().pow(k - 1) / (Rational(1) - ctx.q_value().pow(k));
        out[static_cast<std::size_t>(k)] = base * out[static_cast<std::size_t>(k) - 1] * MultiPoly(factor);
    }
    return TruncatedSeries(ctx, std::move(out));
}

TruncatedSeries finite_pochhammer_series(const MultiPoly& u, int n, const SeriesContext& ctx)
{
    if (n < 0)
        throw InvariantViolation("finite_pochhammer_series: negative length");
    const MultiPoly base = ctx.q().apply(u);
    require_free_of(base, ctx.var(), "finite_pochhammer_series");
    const MultiPoly t = MultiPoly::var(ctx.var());
    TruncatedSeries out = TruncatedSeries::one(ctx);
    for (int j = 0; j < n; ++j)
        out = out * TruncatedSeries::from_poly(ctx, MultiPoly(1) - base * MultiPoly(ctx.q_value().pow(j)) * t);
    return out;
}

TruncatedSeries phi_rs(const std::vector<MultiPoly>& num, const std::vector<MultiPoly>& den,
                       const MultiPoly& arg_coeff, int arg_tpower, const SeriesContext& ctx)
{
    if (arg_tpower < 1)
        throw InvariantViolation("phi_rs: argument must carry a positive power of the series variable");
    const Symbol t = ctx.var();
    const Rational& qv = ctx.q_value();
    const int exponent = 1 + static_cast<int>(den.size()) - static_cast<int>(num.size());

    std::vector<MultiPoly> num_params;
    std::vector<MultiPoly> den_params;
    for (const auto& p : num)
        num_params.push_back(ctx.q().apply(p));
    for (const auto& p : den)
        den_params.push_back(ctx.q().apply(p));
    const MultiPoly arg = ctx.q().apply(arg_coeff);
    require_free_of(arg, t, "phi_rs argument");

    TruncatedSeries num_prod = TruncatedSeries::one(ctx);
    TruncatedSeries den_prod = TruncatedSeries::one(ctx);
    std::vector<MultiPoly> den_constants(den_params.size(), MultiPoly(1));
    TruncatedSeries result(ctx);
    MultiPoly arg_power(1);

    for (int n = 0; n * arg_tpower <= ctx.order(); ++n) {
        if (n > 0) {
            const MultiPoly qpow(qv.pow(n - 1));
            for (const auto& p : num_params)
                num_prod = num_prod * TruncatedSeries::from_poly(ctx, MultiPoly(1) - p * qpow);
            for (std::size_t i = 0; i < den_params.size(); ++i) {
                const MultiPoly factor = MultiPoly(1) - den_params[i] * qpow;
                den_constants[i] *= constant_part(factor, t);
                if (den_constants[i].is_zero() || !den_constants[i].is_constant())
                    throw NonInvertibleDenParam("denominator parameter '" + den[i].to_string() + "': (" +
                                                den[i].to_string() + ";q)_" + std::to_string(n) +
                                                " has constant term '" + den_constants[i].to_string() +
                                                "', not a nonzero rational");
                den_prod = den_prod * TruncatedSeries::from_poly(ctx, factor);
            }
            arg_power *= arg;
        }
        Rational scalar = ctx.inv_qfactorial(n) * qv.pow(binom2(n) * exponent);
        if ((n * exponent) % 2 != 0)
            scalar = -scalar;
        TruncatedSeries term = den_params.empty() ? num_prod : num_prod * invert(den_prod);
        term *= arg_power * MultiPoly(scalar);
        result += shift_up(term, n * arg_tpower);
    }
    return result;
}

TruncatedSeries map_coefficients(const TruncatedSeries& a, const std::function<MultiPoly(const MultiPoly&)>& op)
{
    std::vector<MultiPoly> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs())
        out.push_back(op(c));
    return TruncatedSeries(a.context(), std::move(out));
}

TruncatedSeries scale_series_var(const TruncatedSeries& a, int j)
{
    std::vector<MultiPoly> out(a.coeffs());
    for (int k = 0; k <= a.order(); ++k)
        out[static_cast<std::size_t>(k)] *= MultiPoly(a.context().q_value().pow(j * k));
    return TruncatedSeries(a.context(), std::move(out));
}

}  // namespace qid
