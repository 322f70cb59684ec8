#include <doctest.h>

#include <algorithm>
#include <random>

#include "qid/errors.hpp"
#include "qid/poly.hpp"

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

Rational small(std::mt19937_64& rng, bool nonzero = false)
{
    for (;;) {
        const long n = static_cast<long>(rng() % 15) - 7;
        if (nonzero && n == 0)
            continue;
        return Rational(n, static_cast<long>(rng() % 7) + 1);
    }
}

// Random polynomial over {q, x, y, a}, q and x allowed negative exponents.
MultiPoly random_poly(std::mt19937_64& rng, int terms = 4)
{
    MultiPoly p;
    for (int i = 0; i < terms; ++i) {
        Monomial m = Monomial::of(sym::q(), static_cast<int>(rng() % 5) - 2) *
                     Monomial::of(sym::x(), static_cast<int>(rng() % 5) - 2) *
                     Monomial::of(sym::y(), static_cast<int>(rng() % 3)) *
                     Monomial::of(sym::a(), static_cast<int>(rng() % 3));
        p += MultiPoly::term(small(rng), m);
    }
    return p;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
    CHECK(Rational::parse("-6/4").to_string() == "-3/2");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("ring operations: worked examples")
{
    CHECK((x - y) * (x - q * y) == x * x - (MultiPoly(1) + q) * x * y + q * y * y);
    const MultiPoly p = x * x - q * x * y + MultiPoly(Rational(3, 4));
    CHECK(p + MultiPoly() == p);
    CHECK((MultiPoly(1) + q) * (MultiPoly(1) - q) == MultiPoly(1) - q * q);
}

TEST_CASE("rendering is canonical with q^-1 style exponents")
{
    const MultiPoly p = MultiPoly(Rational(3, 4)) * x * x - V(sym::q(), -1) * x * y + MultiPoly(1);
    CHECK(p.to_string() == "3/4*x^2 - q^-1*x*y + 1");
    CHECK(MultiPoly().to_string() == "0");
    CHECK((-x).to_string() == "-x");
}

TEST_CASE("non-Laurent symbols reject negative exponents")
{
    CHECK_THROWS_AS(V(sym::y(), -1), NegativeExponentSubstitution);
    CHECK_NOTHROW(V(sym::x(), -3));
    CHECK_NOTHROW(V(sym::q(), -3));
    CHECK_THROWS_AS((x + MultiPoly(1)).pow(-1), Error);
}

TEST_CASE("substitute: worked examples")
{
    CHECK(substitute(x * x - x * y, sym::x(), q * x) == q * q * x * x - q * x * y);
    CHECK(substitute(x - y, sym::y(), MultiPoly()) == x);
    CHECK(substitute(V(sym::q(), -1) * x - y, sym::x(), q * y).is_zero());
    CHECK_THROWS_AS(substitute(V(sym::x(), -1), sym::x(), x + y), Error);
}

TEST_CASE("eval: worked examples")
{
    CHECK(eval(MultiPoly(1) + q, {{sym::q(), Rational(1, 2)}}) == Rational(3, 2));
    CHECK(eval(x - y, {{sym::x(), Rational(1)}, {sym::y(), Rational(1)}}) == Rational(0));
    CHECK(eval(V(sym::q(), -1) * x, {{sym::q(), Rational(1, 3)}, {sym::x(), Rational(2)}}) == Rational(6));
    CHECK_THROWS_AS(eval(x + y, {{sym::x(), Rational(1)}}), MissingAssignment);
    CHECK_THROWS_AS(eval(V(sym::x(), -1), {{sym::x(), Rational(0)}}), ZeroToNegativePower);
}

TEST_CASE("divide_exact_linear: worked examples")
{
    const MultiPoly qi = V(sym::q(), -1);
    const MultiPoly d = qi * x - y;
    CHECK(divide_exact_linear((MultiPoly(1) - q) * d, sym::x(), d) == MultiPoly(1) - q);

    // Numerator of theta_xy{p_2(x,y)}: p_2(q^-1 x, y) - p_2(x, qy).
    auto p2 = [&](const MultiPoly& u, const MultiPoly& v) { return (u - v) * (u - q * v); };
    const MultiPoly numerator = p2(qi * x, y) - p2(x, q * y);
    CHECK(divide_exact_linear(numerator, sym::x(), d) == (MultiPoly(1) - q * q) * (qi * x - q * y));

    CHECK_THROWS_AS(divide_exact_linear(x, sym::x(), d), NonZeroRemainder);
    CHECK_THROWS_AS(divide_exact_linear(x, sym::x(), x * x - y), InvariantViolation);
}

TEST_CASE("property: ring axioms on seeded random triples")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 120; ++i) {
        const MultiPoly p = random_poly(rng), r = random_poly(rng), s = random_poly(rng);
        CHECK((p + r) + s == p + (r + s));
        CHECK((p * r) * s == p * (r * s));
        CHECK(p * (r + s) == p * r + p * s);
        CHECK(p + r == r + p);
        CHECK(p * r == r * p);
        CHECK(p - p == MultiPoly());
        CHECK(p * MultiPoly(1) == p);
    }
}

TEST_CASE("property: canonical form does not depend on construction order")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        std::vector<MultiPoly> parts;
        for (int k = 0; k < 6; ++k)
            parts.push_back(random_poly(rng, 1));
        MultiPoly forward;
        for (const auto& p : parts)
            forward += p;
        std::shuffle(parts.begin(), parts.end(), rng);
        MultiPoly shuffled;
        for (const auto& p : parts)
            shuffled += p;
        CHECK(forward == shuffled);
        CHECK(forward.to_string() == shuffled.to_string());
        CHECK(forward.terms() == shuffled.terms());
    }
}

TEST_CASE("property: substitute is a ring homomorphism")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly p = random_poly(rng), r = random_poly(rng);
        const MultiPoly v = MultiPoly(small(rng, true)) * q * V(sym::x(), static_cast<int>(rng() % 3) - 1);
        CHECK(substitute(p * r, sym::x(), v) == substitute(p, sym::x(), v) * substitute(r, sym::x(), v));
        CHECK(substitute(p + r, sym::x(), v) == substitute(p, sym::x(), v) + substitute(r, sym::x(), v));
        const MultiPoly w = random_poly(rng, 2);
        CHECK(substitute(p * r, sym::y(), w) == substitute(p, sym::y(), w) * substitute(r, sym::y(), w));
    }
}

TEST_CASE("property: divide_exact_linear round-trip")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly c = random_poly(rng);
        // Linear in x with unit leading coefficient: u q^j x - w, w free of x.
        const MultiPoly lead = MultiPoly(small(rng, true)) * V(sym::q(), static_cast<int>(rng() % 3) - 1);
        const MultiPoly w = MultiPoly(small(rng)) * y + MultiPoly(small(rng)) * a * q;
        const MultiPoly d = lead * x - w;
        CHECK(divide_exact_linear(c * d, sym::x(), d) == c);
    }
}

TEST_CASE("property: eval is a ring homomorphism")
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly p = random_poly(rng), r = random_poly(rng);
        const std::map<Symbol, Rational> at{{sym::q(), small(rng, true)},
                                            {sym::x(), small(rng, true)},
                                            {sym::y(), small(rng)},
                                            {sym::a(), small(rng)}};
        CHECK(eval(p * r, at) == eval(p, at) * eval(r, at));
        CHECK(eval(p - r, at) == eval(p, at) - eval(r, at));
    }
}

TEST_CASE("degree helpers")
{
    const MultiPoly p = V(sym::q(), -1) * x * x * x + y - MultiPoly(2);
    CHECK(p.degree_range(sym::x()) == std::pair{0, 3});
    CHECK(p.coefficient(sym::x(), 3) == V(sym::q(), -1));
    CHECK(homogeneous_component(p, 1) == y);
    CHECK(lowest_total_degree(p) == 0);
    CHECK(!lowest_total_degree(MultiPoly()).has_value());
    CHECK(lowest_total_degree(V(sym::q(), -3) * x + y * y) == -2);
    CHECK(lowest_total_degree(V(sym::q(), -3) * x + y * y, sym::q()) == 1);
    CHECK(homogeneous_component(V(sym::q(), -3) * x + q * y + y * y, 1, sym::q()) == V(sym::q(), -3) * x + q * y);
}
