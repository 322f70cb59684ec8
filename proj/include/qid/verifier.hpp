#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qid/poly.hpp"
#include "qid/tseries.hpp"

namespace qid {

enum class IdentityKind { SymbolicPoly, Series, GenerateAndCheck, Transform };

std::string_view to_string(IdentityKind kind);

// Sampled values of an identity's free parameters, plus integer knobs.
struct ParameterAssignment {
    std::map<std::string, Rational> values;
    std::map<std::string, int> knobs;

    const Rational& value(Symbol s) const;
    MultiPoly poly(Symbol s) const { return MultiPoly(value(s)); }
    int knob(const std::string& name) const;
};

// Finitely supported sequence k -> B(k).
struct CoeffSequence {
    std::vector<std::pair<int, Rational>> support;
};

using Rng = std::mt19937_64;

struct BuildContext {
    std::optional<SeriesContext> series;  // set for series and transform kinds
    ParameterAssignment params;
    std::vector<Rational> q_values;       // numeric cross-check points for symbolic kinds
    std::uint64_t seed = 0;
    int f0_degree = 4;

    Rng rng() const { return Rng(seed); }
};

// One equality to confirm. For a series both sides hold the coefficients of
// t^0..t^N; for a polynomial identity each side is a single polynomial.
struct Check {
    enum class Grading { SeriesOrder, TotalDegree };

    std::string label;
    std::vector<MultiPoly> lhs;
    std::vector<MultiPoly> rhs;
    Grading grading = Grading::TotalDegree;

    static Check series(std::string label, const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    static Check poly(std::string label, MultiPoly lhs, MultiPoly rhs);
    // Element-wise comparison of two lists; the mismatch order is the index.
    static Check list(std::string label, std::vector<MultiPoly> lhs, std::vector<MultiPoly> rhs);
};

struct ParamRule {
    std::string name;
    bool nonzero = false;
};

struct KnobRule {
    std::string name;
    int lo = 0;
    int hi = 0;
};

struct IdentitySpec {
    std::string code;     // short registry code, e.g. "E2"
    std::string id;       // descriptive id, e.g. "euler-identity"
    std::string formula;  // the identity in plain-text notation
    IdentityKind kind = IdentityKind::Series;
    std::vector<ParamRule> params;
    std::vector<KnobRule> knobs;
    std::function<bool(const ParameterAssignment&, const Rational& q)> admissible;
    std::function<std::vector<Check>(const BuildContext&)> build;
};

enum class Status { Pass, Fail, Error };

std::string_view to_string(Status status);

struct SampleResult {
    ParameterAssignment assignment;
    std::optional<Rational> q;  // nullopt: symbolic q
    Status status = Status::Pass;
    std::string check;          // label of the failing check, if any
    std::optional<int> first_mismatch_order;
    std::optional<std::string> lhs_coeff;
    std::optional<std::string> rhs_coeff;
    std::string error;
};

struct VerificationReport {
    std::string code;
    std::string id;
    std::string formula;
    IdentityKind kind = IdentityKind::Series;
    std::vector<SampleResult> samples;
    Status status = Status::Pass;
    double wall_ms = 0.0;
};

struct VerifyOptions {
    int order = 8;
    std::vector<Rational> q_values{Rational(1, 2), Rational(2, 3), Rational(-1, 3)};
    int samples = 3;
    std::uint64_t seed = 20240601;
    int f0_degree = 4;
    int max_retries = 20;
};

// Deterministic per-task seed derived from the run seed and task coordinates.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view id, std::uint64_t a, std::uint64_t b);

// Small rational with numerator and denominator bounded by 7 in magnitude.
Rational sample_small_rational(Rng& rng, bool nonzero);

// Random polynomial in `var` of exact degree `degree` with small rational
// coefficients.
MultiPoly random_univariate(Rng& rng, Symbol var, int degree);

// Compares both sides of every check; the first failing check decides.
SampleResult compare_checks(const std::vector<Check>& checks);

VerificationReport verify(const IdentitySpec& spec, const VerifyOptions& options);

// verify() for a generate-and-check identity, one seed per sample.
VerificationReport generate_and_check(const IdentitySpec& spec, int f0_degree, std::uint64_t seed, int samples = 1);

// Derives A(k) from sum_k A(k) x^k = sum_k B(k) / (x t q^k; q)_inf read as a
// t-expansion with symbolic x, then checks
//   sum_k A(k) p_k(x, y, a) = sum_k B(k) / (x t q^k; q)_inf  1phi1[a; 0; q, y t q^k].
// y and a are taken from the assignment.
VerificationReport transform_check(const CoeffSequence& b, const SeriesContext& ctx,
                                   const ParameterAssignment& assignment);
std::vector<Check> transform_checks(const CoeffSequence& b, const SeriesContext& ctx,
                                    const ParameterAssignment& assignment);

// Runs every spec; reports come back in input order whatever the thread count
// (0 = hardware concurrency).
std::vector<VerificationReport> run_suite(const std::vector<IdentitySpec>& specs, const VerifyOptions& options,
                                          unsigned threads);

// The identity catalog.
const std::vector<IdentitySpec>& registry();
const IdentitySpec* lookup(std::string_view id_or_code);

// Deliberately broken copies of selected identities; every one must fail.
std::vector<IdentitySpec> mutant_registry();

}  // namespace qid
