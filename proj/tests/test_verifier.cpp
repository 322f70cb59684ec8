#include <doctest.h>

#include <set>

#include "qid/errors.hpp"
#include "qid/qkernel.hpp"
#include "qid/report.hpp"
#include "qid/verifier.hpp"

using namespace qid;

namespace {

VerifyOptions single_q(const Rational& q, int order)
{
    VerifyOptions o;
    o.q_values = {q};
    o.order = order;
    return o;
}

}  // namespace

TEST_CASE("registry has unique codes and ids and at least 27 entries")
{
    const auto& specs = registry();
    CHECK(specs.size() >= 27);
    std::set<std::string> codes, ids;
    for (const auto& s : specs) {
        CHECK(codes.insert(s.code).second);
        CHECK(ids.insert(s.id).second);
        CHECK(s.build);
        CHECK(!s.formula.empty());
    }
}

TEST_CASE("lookup by code or id")
{
    REQUIRE(lookup("G3") != nullptr);
    CHECK(lookup("G3") == lookup("gencauchy-pochhammer-genfunc"));
    CHECK(lookup("euler-identity")->code == "E2");
    CHECK(lookup("no-such-identity") == nullptr);
}

TEST_CASE("verify: E2 at N=6, q=1/2 passes and the coefficients are 1/(q;q)_k")
{
    const auto r = verify(*lookup("E2"), single_q(Rational(1, 2), 6));
    CHECK(r.status == Status::Pass);
    CHECK(r.samples.size() == 3);
    const SeriesContext ctx(sym::t(), 6, Rational(1, 2));
    const auto s = euler_inv_pochhammer(MultiPoly(1), ctx);
    Rational f(1);
    for (int k = 0; k <= 6; ++k) {
        if (k > 0)
            f *= Rational(1) - Rational(1, 2).pow(k);
        CHECK(s[k] == MultiPoly(f.inverse()));
    }
}

TEST_CASE("verify: C4 passes symbolically")
{
    const auto r = verify(*lookup("C4"), VerifyOptions{});
    CHECK(r.status == Status::Pass);
    for (const auto& s : r.samples)
        CHECK(!s.q.has_value());
}

TEST_CASE("verify: E1 with the right side perturbed by t^2 fails at order 2")
{
    IdentitySpec broken = *lookup("E1");
    const auto original = broken.build;
    broken.build = [original](const BuildContext& bc) {
        auto checks = original(bc);
        checks[0].rhs[2] += MultiPoly(1);
        return checks;
    };
    const auto r = verify(broken, VerifyOptions{});
    CHECK(r.status == Status::Fail);
    for (const auto& s : r.samples) {
        CHECK(s.status == Status::Fail);
        CHECK(s.first_mismatch_order == 2);
        CHECK(s.lhs_coeff.has_value());
        CHECK(s.rhs_coeff.has_value());
    }
}

TEST_CASE("compare_checks grades polynomial mismatches by degree in the variables other than q")
{
    const MultiPoly x = MultiPoly::var(sym::x());
    const auto r = compare_checks({Check::poly("deg", x * x * x + x, x * x * x + MultiPoly(2) * x)});
    CHECK(r.status == Status::Fail);
    CHECK(r.first_mismatch_order == 1);
    CHECK(r.lhs_coeff == "x");
    CHECK(r.rhs_coeff == "2*x");
    CHECK(compare_checks({Check::poly("same", x, x)}).status == Status::Pass);

    const MultiPoly qi = MultiPoly::var(sym::q(), -1);
    const auto rq = compare_checks({Check::poly("q", qi * qi * x * x + x, x * x + x)});
    CHECK(rq.first_mismatch_order == 2);
    CHECK(rq.lhs_coeff == "q^-2*x^2");
    CHECK(rq.rhs_coeff == "x^2");
}

TEST_CASE("generate_and_check: T1..T5 pass for five seeds with f0 of degree 4")
{
    for (const char* code : {"T1", "T2", "T3", "T4", "T5"}) {
        const auto r = generate_and_check(*lookup(code), 4, 20240601, 5);
        CHECK_MESSAGE(r.status == Status::Pass, code);
        CHECK(r.samples.size() == 5);
    }
}

TEST_CASE("transform_check: B = {j: 1} reduces to the shifted plain generating function")
{
    for (int j = 0; j <= 3; ++j) {
        const SeriesContext ctx(sym::t(), 8, Rational(2, 3));
        ParameterAssignment pa;
        pa.values["y"] = Rational(3, 5);
        pa.values["a"] = Rational(-2, 7);
        CoeffSequence b;
        b.support = {{j, Rational(1)}};
        CHECK(transform_check(b, ctx, pa).status == Status::Pass);

        const auto checks = transform_checks(b, ctx, pa);
        const MultiPoly x = MultiPoly::var(sym::x());
        const auto oracle = scale_series_var(
            euler_inv_pochhammer(x, ctx) * phi_rs({MultiPoly(Rational(-2, 7))}, {MultiPoly()},
                                                  MultiPoly(Rational(3, 5)), 1, ctx),
            j);
        CHECK(checks[1].rhs == oracle.coeffs());
        // A(k) = q^{jk} t^k / (q;q)_k, so the left side is sum_k p_k(x,y,a) (q^j t)^k/(q;q)_k.
        std::vector<MultiPoly> expected;
        for (int k = 0; k <= 8; ++k)
            expected.push_back(ctx.q().apply(generalized_cauchy_poly(k, x, MultiPoly(Rational(3, 5)),
                                                                      MultiPoly(Rational(-2, 7)), ctx.q())) *
                               MultiPoly(Rational(2, 3).pow(j * k) * ctx.inv_qfactorial(k)));
        CHECK(checks[1].lhs == expected);
    }
}

TEST_CASE("sample exhaustion and builder errors are reported, not thrown")
{
    IdentitySpec never = *lookup("E2");
    never.admissible = [](const ParameterAssignment&, const Rational&) { return false; };
    const auto r = verify(never, VerifyOptions{});
    CHECK(r.status == Status::Error);
    CHECK(r.samples.front().error.find("no admissible") != std::string::npos);

    IdentitySpec throwing = *lookup("C2");
    throwing.build = [](const BuildContext&) -> std::vector<Check> { throw NonZeroRemainder("boom"); };
    CHECK(verify(throwing, VerifyOptions{}).status == Status::Error);
}

TEST_CASE("sampling is deterministic and bounded")
{
    CHECK(derive_seed(1, "E2", 0, 0) == derive_seed(1, "E2", 0, 0));
    CHECK(derive_seed(1, "E2", 0, 0) != derive_seed(1, "E2", 0, 1));
    CHECK(derive_seed(1, "E2", 0, 0) != derive_seed(1, "E3", 0, 0));
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        const Rational r = sample_small_rational(rng, true);
        CHECK(!r.is_zero());
        CHECK(r.abs() <= Rational(7));
        CHECK(r.abs() >= Rational(1, 7));
    }
}

TEST_CASE("run_suite output does not depend on the thread count")
{
    std::vector<IdentitySpec> specs;
    for (const char* code : {"E1", "C2", "T3", "G1", "S3", "X1"})
        specs.push_back(*lookup(code));
    VerifyOptions o;
    o.order = 5;
    const std::string one = to_json(run_suite(specs, o, 1), o, false);
    const std::string four = to_json(run_suite(specs, o, 4), o, false);
    CHECK(one == four);
}

TEST_CASE("every mutant fails")
{
    for (const auto& m : mutant_registry()) {
        const auto r = verify(m, VerifyOptions{});
        CHECK_MESSAGE(r.status == Status::Fail, m.id);
    }
}
