#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qid/poly.hpp"
#include "qid/qvalue.hpp"

namespace qid {

// The frame of a truncated expansion: series variable, truncation order N
// (largest retained exponent) and the numeric value of q.
class SeriesContext {
public:
    SeriesContext(Symbol series_var, int order, Rational q_value);

    Symbol var() const noexcept { return var_; }
    int order() const noexcept { return order_; }
    const Rational& q_value() const noexcept { return q_value_; }
    QValue q() const { return QValue::numeric(q_value_); }

    // 1 / (q;q)_n for 0 <= n <= order, and 0 for n < 0.
    const Rational& inv_qfactorial(int n) const;

    friend bool operator==(const SeriesContext& lhs, const SeriesContext& rhs)
    {
        return lhs.var_ == rhs.var_ && lhs.order_ == rhs.order_ && lhs.q_value_ == rhs.q_value_;
    }

private:
    Symbol var_;
    int order_;
    Rational q_value_;
    std::vector<Rational> inv_qfactorials_;
};

// sum_{k=0}^{N} c_k t^k with coefficients free of t and q.
class TruncatedSeries {
public:
    explicit TruncatedSeries(const SeriesContext& ctx);
    TruncatedSeries(const SeriesContext& ctx, std::vector<MultiPoly> coeffs);

    // Collects the powers of the series variable in p (q is replaced by its
    // value); powers above the order are dropped.
    static TruncatedSeries from_poly(const SeriesContext& ctx, const MultiPoly& p);
    static TruncatedSeries one(const SeriesContext& ctx) { return from_poly(ctx, MultiPoly(1)); }

    const SeriesContext& context() const noexcept { return ctx_; }
    const std::vector<MultiPoly>& coeffs() const noexcept { return coeffs_; }
    const MultiPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    int order() const noexcept { return ctx_.order(); }

    // Index of the first differing coefficient, nullopt when equal.
    std::optional<int> first_mismatch(const TruncatedSeries& other) const;

    TruncatedSeries truncate(int order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const MultiPoly& scalar);

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator*(TruncatedSeries lhs, const MultiPoly& scalar) { return lhs *= scalar; }
    friend TruncatedSeries operator*(const MultiPoly& scalar, TruncatedSeries rhs) { return rhs *= scalar; }

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
    {
        return lhs.ctx_ == rhs.ctx_ && lhs.coeffs_ == rhs.coeffs_;
    }

    // One "t^k: <poly>" line per coefficient.
    std::string to_string() const;

private:
    void check_same_context(const TruncatedSeries& rhs) const;

    SeriesContext ctx_;
    std::vector<MultiPoly> coeffs_;
};

// Multiplicative inverse; the constant coefficient must be a nonzero rational.
TruncatedSeries invert(const TruncatedSeries& a);

// 1 / (u t; q)_inf, the solution G of (1 - u t) G(t) = G(qt) with G(0) = 1.
TruncatedSeries euler_inv_pochhammer(const MultiPoly& u, const SeriesContext& ctx);

// (u t; q)_inf, the solution F of F(t) = (1 - u t) F(qt) with F(0) = 1.
TruncatedSeries euler_pochhammer(const MultiPoly& u, const SeriesContext& ctx);

// (u t; q)_n expanded as a polynomial in t.
TruncatedSeries finite_pochhammer_series(const MultiPoly& u, int n, const SeriesContext& ctx);

// Basic hypergeometric series
//   sum_n [(-1)^n q^{n(n-1)/2}]^{1+s-r} (num;q)_n / (den;q)_n * (c t^m)^n / (q;q)_n
// with r = num.size(), s = den.size(). Parameters may contain the series
// variable; a denominator product must have a unit constant coefficient.
TruncatedSeries phi_rs(const std::vector<MultiPoly>& num, const std::vector<MultiPoly>& den,
                       const MultiPoly& arg_coeff, int arg_tpower, const SeriesContext& ctx);

TruncatedSeries map_coefficients(const TruncatedSeries& a, const std::function<MultiPoly(const MultiPoly&)>& op);

// t -> q^j t.
TruncatedSeries scale_series_var(const TruncatedSeries& a, int j);

}  // namespace qid
