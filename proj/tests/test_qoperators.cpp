#include <doctest.h>

#include <random>

#include "qid/errors.hpp"
#include "qid/qkernel.hpp"
#include "qid/qoperators.hpp"

using namespace qid;

namespace {

MultiPoly V(Symbol s, int e = 1)
{
    return MultiPoly::var(s, e);
}

const MultiPoly q = V(sym::q());
const MultiPoly qi = V(sym::q(), -1);
const MultiPoly x = V(sym::x());
const MultiPoly y = V(sym::y());
const MultiPoly z = V(sym::z());
const MultiPoly a = V(sym::a());
const MultiPoly b = V(sym::b());
const MultiPoly one(1);

MultiPoly random_in(std::mt19937_64& rng, Symbol s, int degree)
{
    MultiPoly p;
    for (int k = 0; k <= degree; ++k)
        p += MultiPoly(Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4))) *
             MultiPoly::var(s, k);
    return p;
}

}  // namespace

TEST_CASE("d_q: worked examples")
{
    CHECK(d_q(x.pow(3), sym::x()) == (one - q.pow(3)) * x * x);
    CHECK(d_q(MultiPoly(7) * y * a, sym::x()).is_zero());
    CHECK(d_q(x * x + x, sym::x()) == (one - q * q) * x + (one - q));
}

TEST_CASE("theta_xy: worked examples")
{
    CHECK(theta_xy(x - y, sym::x(), sym::y()) == one - q);
    CHECK(theta_xy((y - x) * (y - q * x), sym::x(), sym::y()) == (one - q * q) * (x - y));
    CHECK_THROWS_AS(theta_xy(x, sym::x(), sym::y()), OutsideDomain);
    CHECK_THROWS(OperatorKind::theta_xy(sym::x(), sym::x()));
}

TEST_CASE("theta_xy closes on the swapped Cauchy span")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(theta_xy(cauchy_poly(n, y, x), sym::x(), sym::y()) ==
              -(one - q.pow(n)) * cauchy_poly(n - 1, y, x));
}

TEST_CASE("theta_single: worked examples")
{
    CHECK(theta_single(a, sym::a()) == one - q);
    CHECK(theta_single(one, sym::a()).is_zero());
    CHECK(theta_single(a * a, sym::a()) == (qi - q) * a);
}

TEST_CASE("apply_R: worked examples")
{
    CHECK(apply_R(b, a, sym::a()) == a - b);
    CHECK(apply_R(b, one, sym::a()) == one);
    CHECK(apply_R(y, x * x, sym::x()) == cauchy_poly(2));
}

TEST_CASE("apply_E_frak: worked examples")
{
    CHECK(apply_E_frak(b, a, sym::a()) == a + b);
    CHECK(apply_E_frak(b, one, sym::a()) == one);
    // theta{a^2} = (q^-1 - q) a and theta^2{a^2} = (q^-1 - q)(1 - q), with
    // weights q^{k(k-1)/2}/(q;q)_k.
    CHECK(apply_E_frak(b, a * a, sym::a()) == a * a + (one + qi) * a * b + b * b);
}

TEST_CASE("apply_E_tilde: worked examples")
{
    CHECK(apply_E_tilde(a, y, x * x, sym::x()) == generalized_cauchy_poly(2));
    CHECK(apply_E_tilde(a, y, one, sym::x()) == one);
    for (int n = 0; n <= 5; ++n)
        CHECK(apply_E_tilde(MultiPoly(), y, x.pow(n), sym::x()) == cauchy_poly(n));
}

TEST_CASE("apply_L_tilde: worked examples")
{
    CHECK(apply_L_tilde(a, z, y - x, sym::x(), sym::y()) == (y - x) - (one - a) * z);
    CHECK(apply_L_tilde(a, z, one, sym::x(), sym::y()) == one);
    CHECK_THROWS_AS(apply_L_tilde(a, z, x, sym::x(), sym::y()), OutsideDomain);
}

TEST_CASE("operator series reject negative powers of the acting variable")
{
    CHECK_THROWS_AS(apply_R(b, V(sym::x(), -1), sym::x()), InvariantViolation);
    CHECK_THROWS_AS(apply_R(x, x * x, sym::x()), InvariantViolation);
}

TEST_CASE("property: operators are linear")
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        const MultiPoly f = random_in(rng, sym::x(), 4) * (one + y);
        const MultiPoly g = random_in(rng, sym::x(), 4) * a;
        const MultiPoly c(Rational(static_cast<long>(rng() % 7) - 3, 2));
        CHECK(d_q(c * f + g, sym::x()) == c * d_q(f, sym::x()) + d_q(g, sym::x()));
        CHECK(theta_single(c * f + g, sym::x()) == c * theta_single(f, sym::x()) + theta_single(g, sym::x()));
        CHECK(apply_R(b, c * f + g, sym::x()) == c * apply_R(b, f, sym::x()) + apply_R(b, g, sym::x()));
        CHECK(apply_E_frak(b, c * f + g, sym::x()) ==
              c * apply_E_frak(b, f, sym::x()) + apply_E_frak(b, g, sym::x()));
        CHECK(apply_E_tilde(a, y, c * f + g, sym::x()) ==
              c * apply_E_tilde(a, y, f, sym::x()) + apply_E_tilde(a, y, g, sym::x()));
    }
}

TEST_CASE("property: symbolic and numeric q paths agree")
{
    std::mt19937_64 rng(31);
    for (const Rational qv : {Rational(1, 2), Rational(2, 3), Rational(-1, 3)}) {
        const QValue num = QValue::numeric(qv);
        const MultiPoly at(qv);
        for (int i = 0; i < 8; ++i) {
            const MultiPoly f = random_in(rng, sym::x(), 4);
            CHECK(substitute(apply_R(y, f, sym::x()), sym::q(), at) == apply_R(y, f, sym::x(), num));
            CHECK(substitute(apply_E_frak(y, f, sym::x()), sym::q(), at) == apply_E_frak(y, f, sym::x(), num));
            CHECK(substitute(apply_E_tilde(a, y, f, sym::x()), sym::q(), at) ==
                  apply_E_tilde(a, y, f, sym::x(), num));
        }
        for (int n = 0; n <= 4; ++n) {
            const MultiPoly f = cauchy_poly(n, y, x);
            CHECK(substitute(apply_L_tilde(a, z, f, sym::x(), sym::y()), sym::q(), at) ==
                  apply_L_tilde(a, z, substitute(f, sym::q(), at), sym::x(), sym::y(), num));
        }
    }
}
