#pragma once

#include <utility>
#include <vector>

#include "qid/poly.hpp"
#include "qid/qvalue.hpp"

namespace qid {

// (base; q)_n = (1 - base)(1 - base q)...(1 - base q^{n-1}); 1 for n = 0.
MultiPoly q_pochhammer(const MultiPoly& base, int n, const QValue& q = QValue::symbolic());

// Gaussian binomial [n; k]_q from the q-Pascal recurrence
// [n; k] = [n-1; k-1] + q^k [n-1; k]; zero outside 0 <= k <= n.
MultiPoly gaussian_binomial(int n, int k, const QValue& q = QValue::symbolic());

// Cauchy polynomial (x - y)(x - qy)...(x - q^{n-1} y).
MultiPoly cauchy_poly(int n, const MultiPoly& x, const MultiPoly& y, const QValue& q = QValue::symbolic());
MultiPoly cauchy_poly(int n);

// Generalized Cauchy polynomial
//   p_n(x, y, a) = sum_k [n; k] (-1)^k q^{k(k-1)/2} (a; q)_k x^{n-k} y^k.
MultiPoly generalized_cauchy_poly(int n, const MultiPoly& x, const MultiPoly& y, const MultiPoly& a,
                                  const QValue& q = QValue::symbolic());
MultiPoly generalized_cauchy_poly(int n);

// Hahn polynomial phi_n^{(param)}(x | q) = sum_k [n; k] (param; q)_k x^k.
MultiPoly hahn_poly(int n, const MultiPoly& param, const MultiPoly& x, const QValue& q = QValue::symbolic());
MultiPoly hahn_poly(int n, Symbol param);

// Coefficients c_0..c_N (free of x and y) of sum_n c_n p_n(x, y, a).
struct CauchyExpansion {
    std::vector<MultiPoly> coeffs;
    MultiPoly param_a;
    Symbol xvar;
    Symbol yvar;

    MultiPoly reconstruct() const;
};

// Writes p in the basis p_n(xvar, yvar, a). The coefficient of p_n is read off
// the y-free part of p (the only term of p_n without y is x^n), then the
// residual is checked to vanish; throws NotInSpan otherwise.
CauchyExpansion expand_in_cauchy_basis(const MultiPoly& p, Symbol xvar, Symbol yvar, const MultiPoly& param_a);

inline int binom2(int n)
{
    return n * (n - 1) / 2;
}

}  // namespace qid
