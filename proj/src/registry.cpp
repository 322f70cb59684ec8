// The identity catalog. Each entry builds both sides of one identity from a
// sampled parameter assignment; verify() compares them exactly.
//
// Series identities have no free symbols except where noted: every
// parameter is a sampled rational, q is numeric, and the expansion variable
// is t. Identities with two homogeneous parameters (s, r) are graded by
// substituting s -> sigma t, r -> rho t.

#include <algorithm>

#include "qid/errors.hpp"
#include "qid/qkernel.hpp"
#include "qid/qoperators.hpp"
#include "qid/verifier.hpp"

namespace qid {

namespace {

MultiPoly var(Symbol s)
{
    return MultiPoly::var(s);
}

MultiPoly sign(int k)
{
    return MultiPoly(k % 2 == 0 ? 1 : -1);
}

Symbol u_sym()
{
    static const Symbol u = Symbol::intern("u");
    return u;
}

const SeriesContext& series_of(const BuildContext& ctx)
{
    if (!ctx.series)
        throw InvariantViolation("series identity built without a series context");
    return *ctx.series;
}

// sum_{n=0}^{N} coeff(n) t^n / (q;q)_n.
template <class F>
TruncatedSeries exponential_series(const SeriesContext& ctx, F&& coeff)
{
    std::vector<MultiPoly> out;
    for (int n = 0; n <= ctx.order(); ++n)
        out.push_back(ctx.q().apply(coeff(n)) * MultiPoly(ctx.inv_qfactorial(n)));
    return TruncatedSeries(ctx, std::move(out));
}

// Polynomial p(t) as a series.
TruncatedSeries t_power(const SeriesContext& ctx, int k)
{
    return TruncatedSeries::from_poly(ctx, MultiPoly::var(ctx.var(), k));
}

// ---------------------------------------------------------------- shared builders

// sum_n p_n(x,y,a) t^n/(q;q)_n
TruncatedSeries gencauchy_genfunc_lhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y,
                                      const MultiPoly& a)
{
    return exponential_series(ctx, [&](int n) { return generalized_cauchy_poly(n, x, y, a, ctx.q()); });
}

// 1/(xt;q)_inf * 1phi1[a; 0; q, yt]
TruncatedSeries gencauchy_genfunc_rhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y,
                                      const MultiPoly& a)
{
    return euler_inv_pochhammer(x, ctx) * phi_rs({a}, {MultiPoly()}, y, 1, ctx);
}

// (yt;q)_inf / (xt;q)_inf
TruncatedSeries cauchy_product_rhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y)
{
    return euler_pochhammer(y, ctx) * euler_inv_pochhammer(x, ctx);
}

// sum_n p_n(x,y,a) (s/r;q)_n r^n / (q;q)_n with s = sigma t, r = rho t;
// (s/r;q)_n r^n = p_n(rho, sigma) t^n.
TruncatedSeries pochhammer_genfunc_lhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y,
                                       const MultiPoly& a, const MultiPoly& rho, const MultiPoly& sigma)
{
    return exponential_series(ctx, [&](int n) {
        return generalized_cauchy_poly(n, x, y, a, ctx.q()) * cauchy_poly(n, rho, sigma, ctx.q());
    });
}

// (sx;q)_inf/(rx;q)_inf * 2phi2[a, s/r; sx, 0; q, ry]
TruncatedSeries pochhammer_genfunc_rhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y,
                                       const MultiPoly& a, const MultiPoly& rho, const MultiPoly& sigma)
{
    const MultiPoly t = var(ctx.var());
    const Rational ratio = sigma.constant_term() / rho.constant_term();
    return euler_pochhammer(sigma * x, ctx) * euler_inv_pochhammer(rho * x, ctx) *
           phi_rs({a, MultiPoly(ratio)}, {sigma * x * t, MultiPoly()}, rho * y, 1, ctx);
}

// sum_n p_n(x,y,a) (-1)^n q^{n(n-1)/2} s^n/(q;q)_n, s = sigma t
TruncatedSeries signed_genfunc_lhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y,
                                   const MultiPoly& a, const MultiPoly& sigma)
{
    return exponential_series(ctx, [&](int n) {
        return generalized_cauchy_poly(n, x, y, a, ctx.q()) * sign(n) * ctx.q().pow(binom2(n)) * sigma.pow(n);
    });
}

// (sx;q)_inf * 1phi2[a; sx, 0; q, sy]
TruncatedSeries signed_genfunc_rhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y,
                                   const MultiPoly& a, const MultiPoly& sigma)
{
    const MultiPoly t = var(ctx.var());
    return euler_pochhammer(sigma * x, ctx) * phi_rs({a}, {sigma * x * t, MultiPoly()}, sigma * y, 1, ctx);
}

// sum_n p_{n+k}(x,y,a) t^n/(q;q)_n
TruncatedSeries shifted_genfunc_lhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y,
                                    const MultiPoly& a, int k)
{
    return exponential_series(ctx, [&](int n) { return generalized_cauchy_poly(n + k, x, y, a, ctx.q()); });
}

// x^k/(xt;q)_inf sum_n (q^-k, xt, a;q)_n (y x^-1 q^k)^n/(q;q)_n 1phi1[aq^n; 0; q, ytq^n]
TruncatedSeries shifted_genfunc_rhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& y,
                                    const MultiPoly& a, int k)
{
    const QValue q = ctx.q();
    TruncatedSeries inner(ctx);
    const MultiPoly weight_base = y * x.pow(-1) * q.pow(k);
    for (int n = 0; n <= k; ++n) {
        const MultiPoly scalar = q_pochhammer(q.pow(-k), n, q) * q_pochhammer(a, n, q) * weight_base.pow(n) *
                                 MultiPoly(ctx.inv_qfactorial(n));
        if (scalar.is_zero())
            continue;
        const TruncatedSeries phi = scale_series_var(phi_rs({a * q.pow(n)}, {MultiPoly()}, y, 1, ctx), n);
        inner += finite_pochhammer_series(x, n, ctx) * phi * scalar;
    }
    return euler_inv_pochhammer(x, ctx) * inner * x.pow(k);
}

// sum_n phi_n^(alpha)(x) (lambda;q)_n t^n/(q;q)_n
TruncatedSeries hahn_pochhammer_lhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& alpha,
                                    const MultiPoly& lambda)
{
    return exponential_series(
        ctx, [&](int n) { return hahn_poly(n, alpha, x, ctx.q()) * q_pochhammer(lambda, n, ctx.q()); });
}

// (lambda t;q)_inf/(t;q)_inf 2phi1[lambda, alpha; lambda t; q, xt]
TruncatedSeries hahn_pochhammer_rhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& alpha,
                                    const MultiPoly& lambda)
{
    const MultiPoly t = var(ctx.var());
    return euler_pochhammer(lambda, ctx) * euler_inv_pochhammer(MultiPoly(1), ctx) *
           phi_rs({lambda, alpha}, {lambda * t}, x, 1, ctx);
}

// sum_n phi_n^(alpha)(x) t^n/(q;q)_n
TruncatedSeries hahn_genfunc_lhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& alpha)
{
    return exponential_series(ctx, [&](int n) { return hahn_poly(n, alpha, x, ctx.q()); });
}

// (alpha x t;q)_inf / ((xt;q)_inf (t;q)_inf)
TruncatedSeries hahn_genfunc_rhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& alpha)
{
    return euler_pochhammer(alpha * x, ctx) * euler_inv_pochhammer(x, ctx) *
           euler_inv_pochhammer(MultiPoly(1), ctx);
}

// sum_n phi_n^(alpha)(x) p_n(lambda, mu, a) t^n/(q;q)_n
TruncatedSeries hahn_gencauchy_lhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& alpha,
                                   const MultiPoly& lambda, const MultiPoly& mu, const MultiPoly& a)
{
    return exponential_series(ctx, [&](int n) {
        return hahn_poly(n, alpha, x, ctx.q()) * generalized_cauchy_poly(n, lambda, mu, a, ctx.q());
    });
}

// (alpha lambda x t;q)_inf / (lambda x t, lambda t;q)_inf
//   * sum_k (-1)^k q^{k(k-1)/2} (a, alpha, lambda t;q)_k (mu x t)^k / (alpha lambda x t, q;q)_k
//           1phi1[a q^k; 0; q, mu t q^k]
TruncatedSeries hahn_gencauchy_rhs(const SeriesContext& ctx, const MultiPoly& x, const MultiPoly& alpha,
                                   const MultiPoly& lambda, const MultiPoly& mu, const MultiPoly& a)
{
    const QValue q = ctx.q();
    TruncatedSeries sum(ctx);
    for (int k = 0; k <= ctx.order(); ++k) {
        const MultiPoly scalar = sign(k) * q.pow(binom2(k)) * q_pochhammer(a, k, q) * q_pochhammer(alpha, k, q) *
                                 (mu * x).pow(k) * MultiPoly(ctx.inv_qfactorial(k));
        if (scalar.is_zero())
            continue;
        const TruncatedSeries phi = scale_series_var(phi_rs({a * q.pow(k)}, {MultiPoly()}, mu, 1, ctx), k);
        sum += finite_pochhammer_series(lambda, k, ctx) * t_power(ctx, k) *
               invert(finite_pochhammer_series(alpha * lambda * x, k, ctx)) * phi * scalar;
    }
    return euler_pochhammer(alpha * lambda * x, ctx) * euler_inv_pochhammer(lambda * x, ctx) *
           euler_inv_pochhammer(lambda, ctx) * sum;
}

MultiPoly alpha_for(const SeriesContext& ctx, int m)
{
    return ctx.q().pow(-m);
}

// ---------------------------------------------------------------- generate-and-check helpers

MultiPoly shift(const MultiPoly& p, Symbol s, const MultiPoly& factor)
{
    return substitute(p, s, factor * var(s));
}

// Both sides of  x[f(x,y) - f(x,qy)] = y[f(qx,qy) - f(x,qy)] - a y[f(qx,q^2 y) - f(x,q^2 y)].
Check cauchy_difference_equation(const MultiPoly& f)
{
    const MultiPoly q = var(sym::q());
    const MultiPoly x = var(sym::x());
    const MultiPoly y = var(sym::y());
    const MultiPoly a = var(sym::a());
    const MultiPoly f_qy = shift(f, sym::y(), q);
    const MultiPoly f_q2y = shift(f, sym::y(), q * q);
    const MultiPoly lhs = x * (f - f_qy);
    const MultiPoly rhs =
        y * (shift(f_qy, sym::x(), q) - f_qy) - a * y * (shift(f_q2y, sym::x(), q) - f_q2y);
    return Check::poly("x[f(x,y)-f(x,qy)] = y[f(qx,qy)-f(x,qy)] - ay[f(qx,q^2y)-f(x,q^2y)]", lhs, rhs);
}

std::vector<Check> efrak_checks(const BuildContext& ctx, bool drop_qpow)
{
    Rng rng = ctx.rng();
    const Symbol a = sym::a();
    const Symbol b = sym::b();
    const MultiPoly q = var(sym::q());
    const MultiPoly f0 = random_univariate(rng, a, ctx.f0_degree);
    const MultiPoly f =
        drop_qpow ? apply_operator_series(OperatorKind::theta_single(a), var(b), f0,
                                          [](int) { return MultiPoly(1); }, QValue::symbolic())
                  : apply_E_frak(var(b), f0, a);
    const MultiPoly lhs = var(a) * shift(f, a, q) - var(b) * shift(f, b, q);
    const MultiPoly rhs = (var(a) - var(b)) * shift(shift(f, a, q), b, q);
    return {Check::poly("f(a,0) = f0", substitute(f, b, MultiPoly()), f0),
            Check::poly("a f(aq,b) - b f(a,bq) = (a-b) f(aq,bq)", lhs, rhs)};
}

// ---------------------------------------------------------------- catalog

std::vector<IdentitySpec> build_registry()
{
    std::vector<IdentitySpec> r;

    // ---- q-shifted factorials and Gaussian binomials

    r.push_back({"P1", "pochhammer-split", "(a;q)_{n+k} = (a;q)_n (aq^n;q)_k, 0 <= n,k <= 6",
                 IdentityKind::SymbolicPoly, {}, {}, nullptr, [](const BuildContext&) {
                     std::vector<Check> out;
                     const MultiPoly a = var(sym::a());
                     const QValue q = QValue::symbolic();
                     for (int n = 0; n <= 6; ++n)
                         for (int k = 0; k <= 6; ++k)
                             out.push_back(Check::poly("n=" + std::to_string(n) + " k=" + std::to_string(k),
                                                       q_pochhammer(a, n + k),
                                                       q_pochhammer(a, n) * q_pochhammer(a * q.pow(n), k)));
                     return out;
                 }});

    r.push_back({"P2", "qbinom-symmetry",
                 "[n;k]_q = [n;n-k]_q and [n;k]_q (q;q)_k (q;q)_{n-k} = (q;q)_n, n <= 8",
                 IdentityKind::SymbolicPoly, {}, {}, nullptr, [](const BuildContext&) {
                     std::vector<Check> out;
                     const QValue q = QValue::symbolic();
                     for (int n = 0; n <= 8; ++n)
                         for (int k = 0; k <= n; ++k) {
                             const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                             out.push_back(Check::poly("symmetry " + tag, gaussian_binomial(n, k),
                                                       gaussian_binomial(n, n - k)));
                             out.push_back(Check::poly("factorial ratio " + tag,
                                                       gaussian_binomial(n, k) * q.qfactorial(k) *
                                                           q.qfactorial(n - k),
                                                       q.qfactorial(n)));
                         }
                     return out;
                 }});

    r.push_back({"P3", "pochhammer-infinite-split", "(ut;q)_inf = (ut;q)_n (utq^n;q)_inf, n <= 4",
                 IdentityKind::Series, {{"u", true}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly u = bc.params.poly(u_sym());
                     std::vector<Check> out;
                     for (int n = 0; n <= 4; ++n)
                         out.push_back(Check::series("n=" + std::to_string(n),
                                                     finite_pochhammer_series(u, n, ctx) *
                                                         euler_pochhammer(u * ctx.q().pow(n), ctx),
                                                     euler_pochhammer(u, ctx)));
                     return out;
                 }});

    // ---- q-exponentials

    r.push_back({"E1", "q-binomial-theorem", "sum_k (a;q)_k z^k/(q;q)_k = 1phi0[a;-;q,z] = (az;q)_inf/(z;q)_inf",
                 IdentityKind::Series, {{"a"}, {"u", true}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly a = bc.params.poly(sym::a());
                     const MultiPoly u = bc.params.poly(u_sym());
                     const auto lhs = phi_rs({a}, {}, u, 1, ctx);
                     const auto rhs = euler_pochhammer(a * u, ctx) * euler_inv_pochhammer(u, ctx);
                     return std::vector<Check>{Check::series("z = u t", lhs, rhs)};
                 }});

    r.push_back({"E2", "euler-identity", "sum_k z^k/(q;q)_k = 1/(z;q)_inf", IdentityKind::Series, {{"u", true}}, {},
                 nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly u = bc.params.poly(u_sym());
                     return std::vector<Check>{Check::series("z = u t", phi_rs({MultiPoly()}, {}, u, 1, ctx),
                                                             euler_inv_pochhammer(u, ctx))};
                 }});

    r.push_back({"E3", "euler-inverse", "sum_k (-1)^k q^{k(k-1)/2} z^k/(q;q)_k = (z;q)_inf", IdentityKind::Series,
                 {{"u", true}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly u = bc.params.poly(u_sym());
                     return std::vector<Check>{
                         Check::series("z = u t", phi_rs({}, {}, u, 1, ctx), euler_pochhammer(u, ctx)),
                         Check::series("(z;q)_inf * 1/(z;q)_inf = 1",
                                       euler_pochhammer(u, ctx) * euler_inv_pochhammer(u, ctx),
                                       TruncatedSeries::one(ctx))};
                 }});

    // ---- Cauchy polynomials

    r.push_back({"C1", "cauchy-genfunc", "sum_n p_n(x,y) t^n/(q;q)_n = (yt;q)_inf/(xt;q)_inf", IdentityKind::Series,
                 {{"x"}, {"y"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly x = bc.params.poly(sym::x());
                     const MultiPoly y = bc.params.poly(sym::y());
                     const auto lhs =
                         exponential_series(ctx, [&](int n) { return cauchy_poly(n, x, y, ctx.q()); });
                     return std::vector<Check>{Check::series("generating function", lhs,
                                                             cauchy_product_rhs(ctx, x, y))};
                 }});

    r.push_back({"C2", "cauchy-reflection", "p_n(x,y) = (-1)^n q^{n(n-1)/2} p_n(y, q^{1-n} x), n <= 6",
                 IdentityKind::SymbolicPoly, {}, {}, nullptr, [](const BuildContext&) {
                     std::vector<Check> out;
                     const QValue q = QValue::symbolic();
                     const MultiPoly x = var(sym::x());
                     const MultiPoly y = var(sym::y());
                     for (int n = 0; n <= 6; ++n)
                         out.push_back(Check::poly("n=" + std::to_string(n), cauchy_poly(n, x, y),
                                                   sign(n) * q.pow(binom2(n)) * cauchy_poly(n, y, q.pow(1 - n) * x)));
                     return out;
                 }});

    r.push_back({"C3", "cauchy-shifted-reflection",
                 "p_{n-k}(x, q^{1-n} y) = (-1)^{n-k} q^{k(k-1)/2 - n(n-1)/2} p_{n-k}(y, q^k x), 0 <= k <= n <= 6",
                 IdentityKind::SymbolicPoly, {}, {}, nullptr, [](const BuildContext&) {
                     std::vector<Check> out;
                     const QValue q = QValue::symbolic();
                     const MultiPoly x = var(sym::x());
                     const MultiPoly y = var(sym::y());
                     for (int n = 0; n <= 6; ++n)
                         for (int k = 0; k <= n; ++k)
                             out.push_back(Check::poly(
                                 "n=" + std::to_string(n) + " k=" + std::to_string(k),
                                 cauchy_poly(n - k, x, q.pow(1 - n) * y),
                                 sign(n - k) * q.pow(binom2(k) - binom2(n)) * cauchy_poly(n - k, y, q.pow(k) * x)));
                     return out;
                 }});

    r.push_back({"C4", "cauchy-product-forms",
                 "(x-y)(x-qy)...(x-q^{n-1}y) = (y/x;q)_n x^n = p_n(x,y,0), n <= 8", IdentityKind::SymbolicPoly, {},
                 {}, nullptr, [](const BuildContext&) {
                     std::vector<Check> out;
                     const MultiPoly x = var(sym::x());
                     const MultiPoly y = var(sym::y());
                     for (int n = 0; n <= 8; ++n) {
                         const std::string tag = "n=" + std::to_string(n);
                         out.push_back(Check::poly("(y/x;q)_n x^n " + tag, cauchy_poly(n),
                                                   q_pochhammer(y * x.pow(-1), n) * x.pow(n)));
                         out.push_back(Check::poly("p_n(x,y,0) " + tag, cauchy_poly(n),
                                                   generalized_cauchy_poly(n, x, y, MultiPoly())));
                     }
                     return out;
                 }});

    // ---- Leibniz rules

    r.push_back({"L1", "dq-leibniz",
                 "D_q^n{f g} = sum_k [n;k] q^{k(k-n)} D_q^k{f(x)} D_q^{n-k}{g(q^k x)}, n <= 4",
                 IdentityKind::SymbolicPoly, {}, {}, nullptr, [](const BuildContext& bc) {
                     std::vector<Check> out;
                     Rng rng = bc.rng();
                     const Symbol xs = sym::x();
                     const QValue q = QValue::symbolic();
                     for (int trial = 0; trial < 3; ++trial) {
                         const MultiPoly f = random_univariate(rng, xs, static_cast<int>(rng() % 5));
                         const MultiPoly g = random_univariate(rng, xs, static_cast<int>(rng() % 5));
                         auto dq_pow = [&](MultiPoly p, int k) {
                             for (int i = 0; i < k; ++i)
                                 p = d_q(p, xs);
                             return p;
                         };
                         for (int n = 0; n <= 4; ++n) {
                             MultiPoly rhs;
                             for (int k = 0; k <= n; ++k)
                                 rhs += gaussian_binomial(n, k) * q.pow(k * (k - n)) * dq_pow(f, k) *
                                        dq_pow(shift(g, xs, q.pow(k)), n - k);
                             out.push_back(Check::poly("trial=" + std::to_string(trial) + " n=" + std::to_string(n),
                                                       dq_pow(f * g, n), rhs));
                         }
                     }
                     return out;
                 }});

    r.push_back({"L2", "dq-leibniz-kernel",
                 "D_q^n{x^k/(xt;q)_inf} = (q;q)_k/(xt;q)_inf sum_j [n;j] (xt;q)_j t^{n-j} x^{k-j}/(q;q)_{k-j}, "
                 "n,k <= 4, x symbolic",
                 IdentityKind::Series, {}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const QValue q = ctx.q();
                     const Symbol xs = sym::x();
                     const MultiPoly x = var(xs);
                     const TruncatedSeries kernel = euler_inv_pochhammer(x, ctx);
                     std::vector<Check> out;
                     for (int k = 0; k <= 4; ++k) {
                         TruncatedSeries lhs = kernel * x.pow(k);
                         for (int n = 0; n <= 4; ++n) {
                             if (n > 0)
                                 lhs = map_coefficients(lhs, [&](const MultiPoly& c) { return d_q(c, xs, q); });
                             TruncatedSeries sum(ctx);
                             for (int j = 0; j <= std::min(n, k); ++j)
                                 sum += finite_pochhammer_series(x, j, ctx) * t_power(ctx, n - j) *
                                        (gaussian_binomial(n, j, q) * x.pow(k - j) *
                                         MultiPoly(ctx.inv_qfactorial(k - j)));
                             const TruncatedSeries rhs = kernel * sum * q.qfactorial(k);
                             out.push_back(
                                 Check::series("n=" + std::to_string(n) + " k=" + std::to_string(k), lhs, rhs));
                         }
                     }
                     return out;
                 }});

    // ---- operator form of the generalized Cauchy polynomials

    r.push_back({"D1", "gencauchy-operator-form",
                 "E~(a,y;D_q){x^n} = sum_k [n;k] (-1)^k q^{k(k-1)/2} (a;q)_k x^{n-k} y^k, n <= 6",
                 IdentityKind::SymbolicPoly, {}, {}, nullptr, [](const BuildContext& bc) {
                     std::vector<Check> out;
                     const MultiPoly x = var(sym::x());
                     const MultiPoly y = var(sym::y());
                     const MultiPoly a = var(sym::a());
                     for (int n = 0; n <= 6; ++n) {
                         const std::string tag = "n=" + std::to_string(n);
                         out.push_back(Check::poly("symbolic q " + tag, apply_E_tilde(a, y, x.pow(n), sym::x()),
                                                   generalized_cauchy_poly(n)));
                         for (const auto& qv : bc.q_values) {
                             const QValue q = QValue::numeric(qv);
                             out.push_back(Check::poly("q=" + qv.to_string() + " " + tag,
                                                       apply_E_tilde(a, y, x.pow(n), sym::x(), q),
                                                       generalized_cauchy_poly(n, x, y, a, q)));
                         }
                     }
                     return out;
                 }});

    // ---- q-difference equations (generate-and-check)

    r.push_back({"T1", "efrak-difference-equation",
                 "f = E(b theta_a){f0(a)} satisfies a f(aq,b) - b f(a,bq) = (a-b) f(aq,bq)",
                 IdentityKind::GenerateAndCheck, {}, {}, nullptr,
                 [](const BuildContext& bc) { return efrak_checks(bc, false); }});

    r.push_back({"T2", "cauchy-expansion-difference-equation",
                 "f = sum_n c_n p_n(x,y,a) satisfies "
                 "x[f(x,y)-f(x,qy)] = y[f(qx,qy)-f(x,qy)] - ay[f(qx,q^2y)-f(x,q^2y)]; the expansion is recovered",
                 IdentityKind::GenerateAndCheck, {}, {}, nullptr, [](const BuildContext& bc) {
                     Rng rng = bc.rng();
                     const MultiPoly x = var(sym::x());
                     const MultiPoly y = var(sym::y());
                     const MultiPoly a = var(sym::a());
                     const MultiPoly q = var(sym::q());
                     std::vector<MultiPoly> c;
                     MultiPoly f;
                     for (int n = 0; n <= bc.f0_degree; ++n) {
                         MultiPoly cn = MultiPoly(sample_small_rational(rng, n == bc.f0_degree)) +
                                        MultiPoly(sample_small_rational(rng, false)) * a +
                                        MultiPoly(sample_small_rational(rng, false)) * q;
                         f += cn * generalized_cauchy_poly(n);
                         c.push_back(std::move(cn));
                     }
                     while (!c.empty() && c.back().is_zero())
                         c.pop_back();
                     const CauchyExpansion e = expand_in_cauchy_basis(f, sym::x(), sym::y(), a);
                     return std::vector<Check>{cauchy_difference_equation(f),
                                               Check::list("expansion coefficients", e.coeffs, c),
                                               Check::poly("reconstruction", e.reconstruct(), f)};
                 }});

    r.push_back({"T3", "etilde-difference-equation",
                 "f = E~(a,y;D_q){f0(x)} satisfies "
                 "x[f(x,y)-f(x,qy)] = y[f(qx,qy)-f(x,qy)] - ay[f(qx,q^2y)-f(x,q^2y)] and f(a,x,0) = f0",
                 IdentityKind::GenerateAndCheck, {}, {}, nullptr, [](const BuildContext& bc) {
                     Rng rng = bc.rng();
                     const MultiPoly f0 = random_univariate(rng, sym::x(), bc.f0_degree);
                     const MultiPoly f = apply_E_tilde(var(sym::a()), var(sym::y()), f0, sym::x());
                     return std::vector<Check>{Check::poly("f(a,x,0) = f0", substitute(f, sym::y(), MultiPoly()), f0),
                                               cauchy_difference_equation(f)};
                 }});

    r.push_back({"T4", "ltilde-difference-equation",
                 "f = L~(a,z;theta_xy){f0}, f0 in span p_n(y,x), satisfies (q^-1 x - y)[f(x,y,z) - f(x,y,qz)] = "
                 "z[f(q^-1 x,y,qz) - f(x,qy,qz)] + az[f(x,qy,q^2z) - f(q^-1 x,y,q^2z)]",
                 IdentityKind::GenerateAndCheck, {}, {}, nullptr, [](const BuildContext& bc) {
                     Rng rng = bc.rng();
                     const Symbol xs = sym::x();
                     const Symbol ys = sym::y();
                     const Symbol zs = sym::z();
                     const MultiPoly x = var(xs);
                     const MultiPoly y = var(ys);
                     const MultiPoly z = var(zs);
                     const MultiPoly a = var(sym::a());
                     const MultiPoly q = var(sym::q());
                     const MultiPoly qi = MultiPoly::var(sym::q(), -1);
                     MultiPoly f0;
                     for (int n = 0; n <= bc.f0_degree; ++n)
                         f0 += MultiPoly(sample_small_rational(rng, n == bc.f0_degree)) * cauchy_poly(n, y, x);
                     const MultiPoly f = apply_L_tilde(a, z, f0, xs, ys);
                     const MultiPoly f_qz = shift(f, zs, q);
                     const MultiPoly f_q2z = shift(f, zs, q * q);
                     const MultiPoly lhs = (qi * x - y) * (f - f_qz);
                     const MultiPoly rhs = z * (shift(f_qz, xs, qi) - shift(f_qz, ys, q)) +
                                           a * z * (shift(f_q2z, ys, q) - shift(f_q2z, xs, qi));
                     return std::vector<Check>{Check::poly("f(a,x,y,0) = f0", substitute(f, zs, MultiPoly()), f0),
                                               Check::poly("difference equation", lhs, rhs)};
                 }});

    r.push_back({"T5", "r-difference-equation",
                 "f = R(b D_q){f0(a)} satisfies a f(a,b) - b f(qa,qb) = (a-b) f(a,qb)", IdentityKind::GenerateAndCheck,
                 {}, {}, nullptr, [](const BuildContext& bc) {
                     Rng rng = bc.rng();
                     const Symbol as = sym::a();
                     const Symbol bs = sym::b();
                     const MultiPoly q = var(sym::q());
                     const MultiPoly f0 = random_univariate(rng, as, bc.f0_degree);
                     const MultiPoly f = apply_R(var(bs), f0, as);
                     const MultiPoly lhs = var(as) * f - var(bs) * shift(shift(f, as, q), bs, q);
                     const MultiPoly rhs = (var(as) - var(bs)) * shift(f, bs, q);
                     return std::vector<Check>{Check::poly("f(a,0) = f0", substitute(f, bs, MultiPoly()), f0),
                                               Check::poly("a f(a,b) - b f(qa,qb) = (a-b) f(a,qb)", lhs, rhs)};
                 }});

    // ---- generating functions for p_n(x,y,a)

    r.push_back({"G1", "gencauchy-genfunc", "sum_n p_n(x,y,a) t^n/(q;q)_n = 1/(xt;q)_inf 1phi1[a;0;q,yt]",
                 IdentityKind::Series, {{"x"}, {"y"}, {"a"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const auto& p = bc.params;
                     const MultiPoly x = p.poly(sym::x()), y = p.poly(sym::y()), a = p.poly(sym::a());
                     return std::vector<Check>{Check::series("generating function",
                                                             gencauchy_genfunc_lhs(ctx, x, y, a),
                                                             gencauchy_genfunc_rhs(ctx, x, y, a))};
                 }});

    r.push_back({"G2", "gencauchy-genfunc-a0", "sum_n p_n(x,y) t^n/(q;q)_n = (yt;q)_inf/(xt;q)_inf with p_n(x,y) = p_n(x,y,0)",
                 IdentityKind::Series, {{"x"}, {"y"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly x = bc.params.poly(sym::x()), y = bc.params.poly(sym::y());
                     return std::vector<Check>{Check::series("generating function",
                                                             gencauchy_genfunc_lhs(ctx, x, y, MultiPoly()),
                                                             cauchy_product_rhs(ctx, x, y))};
                 }});

    r.push_back({"G3", "gencauchy-pochhammer-genfunc",
                 "sum_n p_n(x,y,a) (s/r;q)_n r^n/(q;q)_n = (sx;q)_inf/(rx;q)_inf 2phi2[a, s/r; sx, 0; q, ry], "
                 "s = sigma t, r = rho t",
                 IdentityKind::Series, {{"x"}, {"y"}, {"a"}, {"rho", true}, {"sigma", true}}, {}, nullptr,
                 [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const auto& p = bc.params;
                     const MultiPoly x = p.poly(sym::x()), y = p.poly(sym::y()), a = p.poly(sym::a());
                     const MultiPoly rho = p.poly(sym::rho()), sigma = p.poly(sym::sigma());
                     return std::vector<Check>{Check::series("generating function",
                                                             pochhammer_genfunc_lhs(ctx, x, y, a, rho, sigma),
                                                             pochhammer_genfunc_rhs(ctx, x, y, a, rho, sigma))};
                 }});

    r.push_back({"G4", "gencauchy-signed-genfunc",
                 "sum_n p_n(x,y,a) (-1)^n q^{n(n-1)/2} s^n/(q;q)_n = (sx;q)_inf 1phi2[a; sx, 0; q, sy], s = sigma t",
                 IdentityKind::Series, {{"x"}, {"y"}, {"a"}, {"sigma", true}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const auto& p = bc.params;
                     const MultiPoly x = p.poly(sym::x()), y = p.poly(sym::y()), a = p.poly(sym::a());
                     const MultiPoly sigma = p.poly(sym::sigma());
                     return std::vector<Check>{Check::series("generating function",
                                                             signed_genfunc_lhs(ctx, x, y, a, sigma),
                                                             signed_genfunc_rhs(ctx, x, y, a, sigma))};
                 }});

    r.push_back({"G5", "gencauchy-shifted-genfunc",
                 "sum_n p_{n+k}(x,y,a) t^n/(q;q)_n = x^k/(xt;q)_inf sum_n (q^-k, xt, a;q)_n (y x^-1 q^k)^n/(q;q)_n "
                 "1phi1[aq^n;0;q,ytq^n], k <= 4",
                 IdentityKind::Series, {{"x", true}, {"y"}, {"a"}}, {{"k", 0, 4}}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const auto& p = bc.params;
                     const MultiPoly x = p.poly(sym::x()), y = p.poly(sym::y()), a = p.poly(sym::a());
                     const int k = p.knob("k");
                     return std::vector<Check>{Check::series("generating function",
                                                             shifted_genfunc_lhs(ctx, x, y, a, k),
                                                             shifted_genfunc_rhs(ctx, x, y, a, k))};
                 }});

    r.push_back({"G6", "pochhammer-genfunc-reduces-to-genfunc",
                 "s = 0, r = t turns the (s/r;q)_n-weighted generating function into the plain one",
                 IdentityKind::Series, {{"x"}, {"y"}, {"a"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const auto& p = bc.params;
                     const MultiPoly x = p.poly(sym::x()), y = p.poly(sym::y()), a = p.poly(sym::a());
                     const MultiPoly one(1), zero;
                     return std::vector<Check>{
                         Check::series("left sides", pochhammer_genfunc_lhs(ctx, x, y, a, one, zero),
                                       gencauchy_genfunc_lhs(ctx, x, y, a)),
                         Check::series("right sides", pochhammer_genfunc_rhs(ctx, x, y, a, one, zero),
                                       gencauchy_genfunc_rhs(ctx, x, y, a))};
                 }});

    r.push_back({"G7", "pochhammer-genfunc-reduces-to-a0",
                 "s = 0, r = t, a = 0 turns the (s/r;q)_n-weighted generating function into (yt;q)_inf/(xt;q)_inf",
                 IdentityKind::Series, {{"x"}, {"y"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly x = bc.params.poly(sym::x()), y = bc.params.poly(sym::y());
                     const MultiPoly one(1), zero;
                     return std::vector<Check>{
                         Check::series("left sides", pochhammer_genfunc_lhs(ctx, x, y, zero, one, zero),
                                       gencauchy_genfunc_lhs(ctx, x, y, zero)),
                         Check::series("right sides", pochhammer_genfunc_rhs(ctx, x, y, zero, one, zero),
                                       cauchy_product_rhs(ctx, x, y))};
                 }});

    r.push_back({"G8", "shifted-genfunc-k0", "the p_{n+k} generating function at k = 0 is the plain one",
                 IdentityKind::Series, {{"x", true}, {"y"}, {"a"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const auto& p = bc.params;
                     const MultiPoly x = p.poly(sym::x()), y = p.poly(sym::y()), a = p.poly(sym::a());
                     return std::vector<Check>{Check::series("left sides", shifted_genfunc_lhs(ctx, x, y, a, 0),
                                                             gencauchy_genfunc_lhs(ctx, x, y, a)),
                                               Check::series("right sides", shifted_genfunc_rhs(ctx, x, y, a, 0),
                                                             gencauchy_genfunc_rhs(ctx, x, y, a))};
                 }});

    // ---- Hahn polynomials

    r.push_back({"S1", "hahn-recurrence",
                 "phi_n^(alpha)(x) = sum_k [n;k] (alpha;q)_k x^k obeys "
                 "phi_{n+1} = (1 + x - alpha x q^n) phi_n - x (1 - q^n) phi_{n-1}, n <= 6",
                 IdentityKind::SymbolicPoly, {}, {}, nullptr, [](const BuildContext&) {
                     std::vector<Check> out;
                     const MultiPoly x = var(sym::x());
                     const MultiPoly alpha = var(sym::alpha());
                     const QValue q = QValue::symbolic();
                     MultiPoly prev;
                     MultiPoly cur(1);
                     for (int n = 0; n <= 6; ++n) {
                         out.push_back(Check::poly("n=" + std::to_string(n), hahn_poly(n, sym::alpha()), cur));
                         MultiPoly next = (MultiPoly(1) + x - alpha * x * q.pow(n)) * cur -
                                          x * (MultiPoly(1) - q.pow(n)) * prev;
                         prev = std::move(cur);
                         cur = std::move(next);
                     }
                     out.push_back(Check::poly("alpha = 0 gives sum_k [n;k] x^k",
                                               hahn_poly(5, MultiPoly(), x),
                                               [&] {
                                                   MultiPoly s;
                                                   for (int k = 0; k <= 5; ++k)
                                                       s += gaussian_binomial(5, k) * x.pow(k);
                                                   return s;
                                               }()));
                     return out;
                 }});

    r.push_back({"S2", "hahn-pochhammer-genfunc",
                 "sum_n phi_n^(alpha)(x) (lambda;q)_n t^n/(q;q)_n = (lambda t;q)_inf/(t;q)_inf "
                 "2phi1[lambda, alpha; lambda t; q, xt]",
                 IdentityKind::Series, {{"x"}, {"alpha"}, {"lambda"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const auto& p = bc.params;
                     const MultiPoly x = p.poly(sym::x()), alpha = p.poly(sym::alpha()), lambda = p.poly(sym::lambda());
                     return std::vector<Check>{Check::series("generating function",
                                                             hahn_pochhammer_lhs(ctx, x, alpha, lambda),
                                                             hahn_pochhammer_rhs(ctx, x, alpha, lambda))};
                 }});

    r.push_back({"S3", "hahn-genfunc",
                 "sum_n phi_n^(alpha)(x) t^n/(q;q)_n = (alpha x t;q)_inf/((xt;q)_inf (t;q)_inf)", IdentityKind::Series,
                 {{"x"}, {"alpha"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly x = bc.params.poly(sym::x()), alpha = bc.params.poly(sym::alpha());
                     return std::vector<Check>{Check::series("generating function", hahn_genfunc_lhs(ctx, x, alpha),
                                                             hahn_genfunc_rhs(ctx, x, alpha))};
                 }});

    r.push_back({"S4", "hahn-gencauchy-genfunc",
                 "alpha = q^-M: sum_n phi_n^(alpha)(x) p_n(lambda,mu,a) t^n/(q;q)_n = "
                 "(alpha lambda x t;q)_inf/(lambda x t, lambda t;q)_inf sum_k (-1)^k q^{k(k-1)/2} "
                 "(a, alpha, lambda t;q)_k (mu x t)^k/(alpha lambda x t, q;q)_k 1phi1[aq^k;0;q,mu t q^k], M <= 4",
                 IdentityKind::Series, {{"x"}, {"lambda"}, {"mu"}, {"a"}}, {{"M", 0, 4}},
                 nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const auto& p = bc.params;
                     const MultiPoly x = p.poly(sym::x()), lambda = p.poly(sym::lambda()), mu = p.poly(sym::mu()),
                                     a = p.poly(sym::a());
                     const MultiPoly alpha = alpha_for(ctx, p.knob("M"));
                     return std::vector<Check>{Check::series("generating function",
                                                             hahn_gencauchy_lhs(ctx, x, alpha, lambda, mu, a),
                                                             hahn_gencauchy_rhs(ctx, x, alpha, lambda, mu, a))};
                 }});

    r.push_back({"S5", "hahn-gencauchy-reduces-to-hahn-genfunc",
                 "a = 0, lambda = 1, mu = 0 turns the Hahn / p_n(lambda,mu,a) generating function into the Hahn one",
                 IdentityKind::Series, {{"x"}}, {{"M", 0, 4}}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly x = bc.params.poly(sym::x());
                     const MultiPoly alpha = alpha_for(ctx, bc.params.knob("M"));
                     const MultiPoly one(1), zero;
                     return std::vector<Check>{
                         Check::series("left sides", hahn_gencauchy_lhs(ctx, x, alpha, one, zero, zero),
                                       hahn_genfunc_lhs(ctx, x, alpha)),
                         Check::series("right sides", hahn_gencauchy_rhs(ctx, x, alpha, one, zero, zero),
                                       hahn_genfunc_rhs(ctx, x, alpha))};
                 }});

    r.push_back({"S6", "hahn-gencauchy-reduces-to-pochhammer-genfunc",
                 "a = 0, lambda = 1, mu = lambda' turns the Hahn / p_n(lambda,mu,a) generating function into the "
                 "(lambda';q)_n-weighted Hahn one, since p_n(1,lambda',0) = (lambda';q)_n",
                 IdentityKind::Series, {{"x"}, {"lambda"}}, {{"M", 0, 4}}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     const MultiPoly x = bc.params.poly(sym::x()), lambda = bc.params.poly(sym::lambda());
                     const MultiPoly alpha = alpha_for(ctx, bc.params.knob("M"));
                     const MultiPoly one(1), zero;
                     return std::vector<Check>{
                         Check::series("left sides", hahn_gencauchy_lhs(ctx, x, alpha, one, lambda, zero),
                                       hahn_pochhammer_lhs(ctx, x, alpha, lambda)),
                         Check::series("right sides", hahn_gencauchy_rhs(ctx, x, alpha, one, lambda, zero),
                                       hahn_pochhammer_rhs(ctx, x, alpha, lambda))};
                 }});

    // ---- transformation

    r.push_back({"X1", "transform",
                 "if sum_k A(k) x^k = sum_k B(k)/(xtq^k;q)_inf then "
                 "sum_k A(k) p_k(x,y,a) = sum_k B(k)/(xtq^k;q)_inf 1phi1[a;0;q,ytq^k]; B random, finite support",
                 IdentityKind::Transform, {{"y"}, {"a"}}, {}, nullptr, [](const BuildContext& bc) {
                     const auto& ctx = series_of(bc);
                     Rng rng = bc.rng();
                     CoeffSequence b;
                     const int size = 1 + static_cast<int>(rng() % 3);
                     for (int k = 0; k <= 3 && static_cast<int>(b.support.size()) < size; ++k)
                         if (rng() % 2 == 0 || 3 - k < size - static_cast<int>(b.support.size()))
                             b.support.emplace_back(k, sample_small_rational(rng, true));
                     return transform_checks(b, ctx, bc.params);
                 }});

    return r;
}

}  // namespace

const std::vector<IdentitySpec>& registry()
{
    static const std::vector<IdentitySpec> specs = build_registry();
    return specs;
}

const IdentitySpec* lookup(std::string_view id_or_code)
{
    for (const auto& spec : registry())
        if (spec.id == id_or_code || spec.code == id_or_code)
            return &spec;
    return nullptr;
}

std::vector<IdentitySpec> mutant_registry()
{
    std::vector<IdentitySpec> out;
    auto mutant = [&](std::string_view code, std::string suffix) -> IdentitySpec& {
        IdentitySpec copy = *lookup(code);
        copy.id += "~" + suffix;
        copy.code += "~";
        out.push_back(std::move(copy));
        return out.back();
    };

    // Sum side without the q^{k(k-1)/2} factor.
    mutant("E3", "drop-qpow").build = [](const BuildContext& bc) {
        const auto& ctx = series_of(bc);
        const MultiPoly u = bc.params.poly(u_sym());
        const auto lhs = exponential_series(ctx, [&](int k) { return sign(k) * u.pow(k); });
        return std::vector<Check>{Check::series("z = u t", lhs, euler_pochhammer(u, ctx))};
    };

    // (yt;q)_inf replaced by (-yt;q)_inf.
    {
        auto& m = mutant("C1", "flip-sign");
        m.params = {{"x"}, {"y", true}};
        m.build = [](const BuildContext& bc) {
            const auto& ctx = series_of(bc);
            const MultiPoly x = bc.params.poly(sym::x()), y = bc.params.poly(sym::y());
            const auto lhs = exponential_series(ctx, [&](int n) { return cauchy_poly(n, x, y, ctx.q()); });
            return std::vector<Check>{Check::series("generating function", lhs, cauchy_product_rhs(ctx, x, -y))};
        };
    }

    // 1phi1 argument yt replaced by -yt.
    {
        auto& m = mutant("G1", "flip-sign");
        m.params = {{"x"}, {"y", true}, {"a"}};
        m.admissible = [](const ParameterAssignment& p, const Rational&) { return !p.value(sym::a()).is_one(); };
        m.build = [](const BuildContext& bc) {
            const auto& ctx = series_of(bc);
            const auto& p = bc.params;
            const MultiPoly x = p.poly(sym::x()), y = p.poly(sym::y()), a = p.poly(sym::a());
            return std::vector<Check>{Check::series("generating function", gencauchy_genfunc_lhs(ctx, x, y, a),
                                                    gencauchy_genfunc_rhs(ctx, x, -y, a))};
        };
    }

    // (lambda t;q)_inf replaced by (-lambda t;q)_inf.
    {
        auto& m = mutant("S2", "flip-sign");
        m.params = {{"x"}, {"alpha"}, {"lambda", true}};
        m.build = [](const BuildContext& bc) {
            const auto& ctx = series_of(bc);
            const auto& p = bc.params;
            const MultiPoly x = p.poly(sym::x()), alpha = p.poly(sym::alpha()), lambda = p.poly(sym::lambda());
            const MultiPoly t = var(ctx.var());
            const auto rhs = euler_pochhammer(-lambda, ctx) * euler_inv_pochhammer(MultiPoly(1), ctx) *
                             phi_rs({lambda, alpha}, {lambda * t}, x, 1, ctx);
            return std::vector<Check>{
                Check::series("generating function", hahn_pochhammer_lhs(ctx, x, alpha, lambda), rhs)};
        };
    }

    // Operator series without the q^{k(k-1)/2} weight.
    mutant("T1", "drop-qpow").build = [](const BuildContext& bc) {
        BuildContext wide = bc;
        wide.f0_degree = std::max(bc.f0_degree, 2);
        return efrak_checks(wide, true);
    };

    return out;
}

}  // namespace qid
