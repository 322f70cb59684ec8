#include <doctest.h>

#include <random>

#include "qid/errors.hpp"
#include "qid/qkernel.hpp"

using namespace qid;

namespace {

MultiPoly V(Symbol s, int e = 1)
{
    return MultiPoly::var(s, e);
}

const MultiPoly q = V(sym::q());
const MultiPoly x = V(sym::x());
const MultiPoly y = V(sym::y());
const MultiPoly a = V(sym::a());
const MultiPoly one(1);

// Product oracle: prod_{k<n} (1 - base q^k), written out independently.
MultiPoly product_oracle(const MultiPoly& base, int n)
{
    MultiPoly p(1);
    MultiPoly qk(1);
    for (int k = 0; k < n; ++k) {
        p = p * (one - base * qk);
        qk = qk * q;
    }
    return p;
}

}  // namespace

TEST_CASE("q_pochhammer: worked examples")
{
    CHECK(q_pochhammer(a, 2) == one - a - a * q + a * a * q);
    CHECK(q_pochhammer(a, 0) == one);
    CHECK(q_pochhammer(one, 3).is_zero());
    for (int n = 0; n <= 6; ++n)
        CHECK(q_pochhammer(a * x, n) == product_oracle(a * x, n));
}

TEST_CASE("q_pochhammer with numeric q matches substitution")
{
    const QValue half = QValue::numeric(Rational(1, 2));
    for (int n = 0; n <= 5; ++n)
        CHECK(q_pochhammer(a, n, half) == substitute(q_pochhammer(a, n), sym::q(), MultiPoly(Rational(1, 2))));
}

TEST_CASE("gaussian_binomial: worked examples")
{
    CHECK(gaussian_binomial(2, 1) == one + q);
    CHECK(gaussian_binomial(4, 2) == one + q + MultiPoly(2) * q * q + q.pow(3) + q.pow(4));
    CHECK(gaussian_binomial(3, 5).is_zero());
    CHECK(gaussian_binomial(3, -1).is_zero());
}

TEST_CASE("gaussian_binomial matches the factorial-ratio oracle")
{
    // (q;q)_n = [n;k] (q;q)_k (q;q)_{n-k}, with (q;q)_m from the product oracle.
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(gaussian_binomial(n, k) * product_oracle(q, k) * product_oracle(q, n - k) ==
                  product_oracle(q, n));
}

TEST_CASE("gaussian_binomial at q = 1 gives ordinary binomials")
{
    long binom = 1;
    for (int k = 0; k <= 7; ++k) {
        CHECK(eval(gaussian_binomial(7, k), {{sym::q(), Rational(1)}}) == Rational(binom));
        binom = binom * (7 - k) / (k + 1);
    }
}

TEST_CASE("cauchy_poly: worked examples")
{
    CHECK(cauchy_poly(0) == one);
    CHECK(cauchy_poly(1) == x - y);
    CHECK(cauchy_poly(2) == x * x - (one + q) * x * y + q * y * y);
    for (int n = 0; n <= 6; ++n) {
        MultiPoly prod(1);
        for (int k = 0; k < n; ++k)
            prod = prod * (x - q.pow(k) * y);
        CHECK(cauchy_poly(n) == prod);
    }
}

TEST_CASE("generalized_cauchy_poly: worked examples")
{
    CHECK(generalized_cauchy_poly(1) == x - (one - a) * y);
    CHECK(generalized_cauchy_poly(2) ==
          x * x - (one + q) * (one - a) * x * y + q * (one - a) * (one - a * q) * y * y);
    CHECK(substitute(generalized_cauchy_poly(3), sym::a(), MultiPoly()) == cauchy_poly(3));
}

TEST_CASE("generalized_cauchy_poly is homogeneous of degree n in x, y")
{
    for (int n = 0; n <= 6; ++n) {
        const MultiPoly p = generalized_cauchy_poly(n);
        for (const auto& [m, c] : p.terms())
            CHECK(m.exponent(sym::x()) + m.exponent(sym::y()) == n);
    }
}

TEST_CASE("hahn_poly: worked examples")
{
    const MultiPoly alpha = V(sym::alpha());
    CHECK(hahn_poly(0, sym::alpha()) == one);
    CHECK(hahn_poly(1, sym::alpha()) == one + (one - alpha) * x);
    CHECK(hahn_poly(2, sym::alpha()) ==
          one + (one + q) * (one - alpha) * x + (one - alpha) * (one - alpha * q) * x * x);
    MultiPoly plain;
    for (int k = 0; k <= 4; ++k)
        plain += gaussian_binomial(4, k) * x.pow(k);
    CHECK(hahn_poly(4, MultiPoly(), x) == plain);
}

TEST_CASE("expand_in_cauchy_basis: worked examples")
{
    const CauchyExpansion e = expand_in_cauchy_basis(generalized_cauchy_poly(2), sym::x(), sym::y(), a);
    REQUIRE(e.coeffs.size() == 3);
    CHECK(e.coeffs[0].is_zero());
    CHECK(e.coeffs[1].is_zero());
    CHECK(e.coeffs[2] == one);
    CHECK(e.reconstruct() == generalized_cauchy_poly(2));

    CHECK_THROWS_AS(expand_in_cauchy_basis(y, sym::x(), sym::y(), a), NotInSpan);
    // x^2 alone leaves a residual with y-terms that no lower basis element
    // can absorb with x,y-free coefficients.
    CHECK_THROWS_AS(expand_in_cauchy_basis(x * x, sym::x(), sym::y(), a), NotInSpan);
}

TEST_CASE("property: expand_in_cauchy_basis round-trips random coefficient lists")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<MultiPoly> c;
        MultiPoly f;
        const int n = static_cast<int>(rng() % 6);
        for (int k = 0; k <= n; ++k) {
            MultiPoly ck = MultiPoly(Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3))) +
                           MultiPoly(static_cast<long>(rng() % 3)) * q * a;
            if (k == n && ck.is_zero())
                ck = one;
            f += ck * generalized_cauchy_poly(k);
            c.push_back(ck);
        }
        const CauchyExpansion e = expand_in_cauchy_basis(f, sym::x(), sym::y(), a);
        CHECK(e.coeffs == c);
        CHECK(e.reconstruct() == f);
    }
}
