#include <doctest.h>

#include <random>

#include "qid/errors.hpp"
#include "qid/expr.hpp"
#include "qid/qkernel.hpp"

using namespace qid;

namespace {

std::size_t error_offset(std::string_view text)
{
    try {
        parse_expr(text);
    } catch (const SyntaxError& e) {
        return e.offset();
    }
    FAIL("no syntax error for '" << std::string(text) << "'");
    return 0;
}

}  // namespace

TEST_CASE("parse_expr: worked examples")
{
    CHECK(parse_expr("x^2 - (1+q)*x*y + q*y^2") == cauchy_poly(2));
    CHECK(parse_expr("3/4") == MultiPoly(Rational(3, 4)));
    CHECK(error_offset("(") == 1);
}

TEST_CASE("parse_expr: precedence, unary minus and whitespace")
{
    const MultiPoly x = MultiPoly::var(sym::x());
    const MultiPoly q = MultiPoly::var(sym::q());
    CHECK(parse_expr("-x^2") == -(x * x));
    CHECK(parse_expr("2*x^3 + -1") == MultiPoly(2) * x.pow(3) - MultiPoly(1));
    CHECK(parse_expr(" ( x - q ) ^ 2 ") == (x - q) * (x - q));
    CHECK(parse_expr("q^-2*x^-1") == q.pow(-2) * x.pow(-1));
    CHECK(parse_expr("(2/3)^-2") == MultiPoly(Rational(9, 4)));
    CHECK(parse_expr("lambda*mu") == MultiPoly::var(sym::lambda()) * MultiPoly::var(sym::mu()));
}

TEST_CASE("parse_expr: error offsets")
{
    CHECK(error_offset("") == 0);
    CHECK(error_offset("x +") == 3);
    CHECK(error_offset("x y") == 2);
    CHECK(error_offset("(x") == 2);
    CHECK(error_offset("x^") == 2);
    CHECK(error_offset("y^-1") == 2);
    CHECK(error_offset("(1+x)^-1") == 6);
    CHECK(error_offset("1/0") == 2);
    CHECK(error_offset("x $ 2") == 2);
}

TEST_CASE("property: parse_expr(render(p)) == p")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        MultiPoly p;
        const int terms = static_cast<int>(rng() % 6);
        for (int k = 0; k < terms; ++k) {
            const Monomial m = Monomial::of(sym::q(), static_cast<int>(rng() % 7) - 3) *
                               Monomial::of(sym::x(), static_cast<int>(rng() % 7) - 3) *
                               Monomial::of(sym::y(), static_cast<int>(rng() % 4)) *
                               Monomial::of(sym::a(), static_cast<int>(rng() % 4));
            p += MultiPoly::term(Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9)), m);
        }
        CHECK(parse_expr(p.to_string()) == p);
    }
}
