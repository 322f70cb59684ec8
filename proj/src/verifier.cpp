#include "qid/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "qid/errors.hpp"
#include "qid/qkernel.hpp"

namespace qid {

std::string_view to_string(IdentityKind kind)
{
    switch (kind) {
    case IdentityKind::SymbolicPoly:
        return "symbolic-poly";
    case IdentityKind::Series:
        return "series";
    case IdentityKind::GenerateAndCheck:
        return "generate-and-check";
    case IdentityKind::Transform:
        return "transform";
    }
    return "?";
}

std::string_view to_string(Status status)
{
    switch (status) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Error:
        return "error";
    }
    return "?";
}

const Rational& ParameterAssignment::value(Symbol s) const
{
    auto it = values.find(s.name());
    if (it == values.end())
        throw MissingAssignment("parameter '" + s.name() + "' was not sampled");
    return it->second;
}

int ParameterAssignment::knob(const std::string& name) const
{
    auto it = knobs.find(name);
    if (it == knobs.end())
        throw MissingAssignment("knob '" + name + "' was not sampled");
    return it->second;
}

Check Check::series(std::string label, const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    if (!(lhs.context() == rhs.context()))
        throw ContextMismatch("check '" + label + "' compares series from different contexts");
    return Check{std::move(label), lhs.coeffs(), rhs.coeffs(), Grading::SeriesOrder};
}

Check Check::poly(std::string label, MultiPoly lhs, MultiPoly rhs)
{
    return Check{std::move(label), {std::move(lhs)}, {std::move(rhs)}, Grading::TotalDegree};
}

Check Check::list(std::string label, std::vector<MultiPoly> lhs, std::vector<MultiPoly> rhs)
{
    const std::size_t n = std::max(lhs.size(), rhs.size());
    lhs.resize(n);
    rhs.resize(n);
    return Check{std::move(label), std::move(lhs), std::move(rhs), Grading::SeriesOrder};
}

// ---------------------------------------------------------------- sampling

std::uint64_t derive_seed(std::uint64_t seed, std::string_view id, std::uint64_t a, std::uint64_t b)
{
    // FNV-1a over the id, then splitmix64 finalization of the mixed words.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed ^ h) ^ a) ^ (b + 0x632be59bd9b4e019ULL));
}

Rational sample_small_rational(Rng& rng, bool nonzero)
{
    for (;;) {
        const long num = static_cast<long>(rng() % 15) - 7;
        const long den = static_cast<long>(rng() % 7) + 1;
        if (nonzero && num == 0)
            continue;
        return Rational(num, den);
    }
}

MultiPoly random_univariate(Rng& rng, Symbol var, int degree)
{
    MultiPoly out;
    for (int k = 0; k <= degree; ++k)
        out += MultiPoly(sample_small_rational(rng, k == degree)) * MultiPoly::var(var, k);
    return out;
}

namespace {

ParameterAssignment draw_assignment(const IdentitySpec& spec, Rng& rng, const Rational& q, int max_retries)
{
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        ParameterAssignment pa;
        for (const auto& rule : spec.params)
            pa.values[rule.name] = sample_small_rational(rng, rule.nonzero);
        for (const auto& knob : spec.knobs)
            pa.knobs[knob.name] = knob.lo + static_cast<int>(rng() % static_cast<std::uint64_t>(knob.hi - knob.lo + 1));
        if (!spec.admissible || spec.admissible(pa, q))
            return pa;
    }
    throw SampleExhaustion("no admissible parameters for '" + spec.id + "' after " + std::to_string(max_retries) +
                           " retries");
}

SampleResult run_checks(const IdentitySpec& spec, const BuildContext& ctx)
{
    try {
        return compare_checks(spec.build(ctx));
    } catch (const std::exception& e) {
        SampleResult r;
        r.status = Status::Error;
        r.error = e.what();
        return r;
    }
}

}  // namespace

SampleResult compare_checks(const std::vector<Check>& checks)
{
    SampleResult result;
    for (const auto& check : checks) {
        if (check.lhs.size() != check.rhs.size())
            throw InvariantViolation("check '" + check.label + "' has sides of different length");
        for (std::size_t i = 0; i < check.lhs.size(); ++i) {
            if (check.lhs[i] == check.rhs[i])
                continue;
            result.status = Status::Fail;
            result.check = check.label;
            if (check.grading == Check::Grading::TotalDegree && check.lhs.size() == 1) {
                const int order = *lowest_total_degree(check.lhs[i] - check.rhs[i], sym::q());
                result.first_mismatch_order = order;
                result.lhs_coeff = homogeneous_component(check.lhs[i], order, sym::q()).to_string();
                result.rhs_coeff = homogeneous_component(check.rhs[i], order, sym::q()).to_string();
            } else {
                result.first_mismatch_order = static_cast<int>(i);
                result.lhs_coeff = check.lhs[i].to_string();
                result.rhs_coeff = check.rhs[i].to_string();
            }
            return result;
        }
    }
    return result;
}

VerificationReport verify(const IdentitySpec& spec, const VerifyOptions& options)
{
    if (options.order < 0 || options.samples < 1)
        throw InvariantViolation("verify: order must be >= 0 and samples >= 1");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{spec.code, spec.id, spec.formula, spec.kind, {}, Status::Pass, 0.0};

    auto record = [&](SampleResult r) { report.samples.push_back(std::move(r)); };

    switch (spec.kind) {
    case IdentityKind::SymbolicPoly: {
        BuildContext ctx;
        ctx.q_values = options.q_values;
        ctx.seed = derive_seed(options.seed, spec.id, 0, 0);
        ctx.f0_degree = options.f0_degree;
        try {
            for (const auto& check : spec.build(ctx)) {
                SampleResult r = compare_checks({check});
                r.check = check.label;
                record(std::move(r));
            }
        } catch (const std::exception& e) {
            SampleResult r;
            r.status = Status::Error;
            r.error = e.what();
            record(std::move(r));
        }
        break;
    }
    case IdentityKind::GenerateAndCheck: {
        for (int s = 0; s < options.samples; ++s) {
            BuildContext ctx;
            ctx.seed = derive_seed(options.seed, spec.id, 0, static_cast<std::uint64_t>(s));
            ctx.f0_degree = options.f0_degree;
            ctx.q_values = options.q_values;
            SampleResult r = run_checks(spec, ctx);
            r.assignment.knobs["seed_index"] = s;
            record(std::move(r));
        }
        break;
    }
    case IdentityKind::Series:
    case IdentityKind::Transform: {
        for (std::size_t qi = 0; qi < options.q_values.size(); ++qi) {
            const Rational& q = options.q_values[qi];
            for (int s = 0; s < options.samples; ++s) {
                Rng rng(derive_seed(options.seed, spec.id, qi, static_cast<std::uint64_t>(s)));
                SampleResult r;
                try {
                    BuildContext ctx;
                    ctx.series.emplace(sym::t(), options.order, q);
                    ctx.params = draw_assignment(spec, rng, q, options.max_retries);
                    ctx.seed = rng();
                    ctx.f0_degree = options.f0_degree;
                    ctx.q_values = {q};
                    r = run_checks(spec, ctx);
                    r.assignment = ctx.params;
                } catch (const std::exception& e) {
                    r.status = Status::Error;
                    r.error = e.what();
                }
                r.q = q;
                record(std::move(r));
            }
        }
        break;
    }
    }

    for (const auto& r : report.samples) {
        if (r.status == Status::Error) {
            report.status = Status::Error;
            break;
        }
        if (r.status == Status::Fail)
            report.status = Status::Fail;
    }
    if (report.samples.empty())
        report.status = Status::Error;
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport generate_and_check(const IdentitySpec& spec, int f0_degree, std::uint64_t seed, int samples)
{
    if (spec.kind != IdentityKind::GenerateAndCheck)
        throw InvariantViolation("'" + spec.id + "' is not a generate-and-check identity");
    VerifyOptions options;
    options.f0_degree = f0_degree;
    options.seed = seed;
    options.samples = samples;
    return verify(spec, options);
}

std::vector<Check> transform_checks(const CoeffSequence& b, const SeriesContext& ctx,
                                    const ParameterAssignment& assignment)
{
    const MultiPoly x = MultiPoly::var(sym::x());
    const MultiPoly y = assignment.poly(sym::y());
    const MultiPoly a = assignment.poly(sym::a());

    const TruncatedSeries kernel = euler_inv_pochhammer(x, ctx);
    const TruncatedSeries phi = phi_rs({a}, {MultiPoly()}, y, 1, ctx);

    TruncatedSeries sam_rhs(ctx);
    TruncatedSeries samm_rhs(ctx);
    for (const auto& [k, bk] : b.support) {
        const TruncatedSeries shifted = scale_series_var(kernel, k);
        sam_rhs += shifted * MultiPoly(bk);
        samm_rhs += shifted * scale_series_var(phi, k) * MultiPoly(bk);
    }

    // A(k) is the x^k part of each t-coefficient.
    int top = 0;
    for (const auto& c : sam_rhs.coeffs())
        if (auto range = c.degree_range(sym::x()))
            top = std::max(top, range->second);
    TruncatedSeries sam_lhs(ctx);
    TruncatedSeries samm_lhs(ctx);
    for (int k = 0; k <= top; ++k) {
        const TruncatedSeries ak =
            map_coefficients(sam_rhs, [&](const MultiPoly& c) { return c.coefficient(sym::x(), k); });
        sam_lhs += ak * x.pow(k);
        samm_lhs += ak * generalized_cauchy_poly(k, x, y, a, ctx.q());
    }
    return {Check::series("A(k) reproduces sum_k B(k)/(xtq^k;q)_inf", sam_lhs, sam_rhs),
            Check::series("sum_k A(k) p_k(x,y,a) = sum_k B(k) 1phi1/(xtq^k;q)_inf", samm_lhs, samm_rhs)};
}

VerificationReport transform_check(const CoeffSequence& b, const SeriesContext& ctx,
                                   const ParameterAssignment& assignment)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.code = "X1";
    report.id = "transform";
    report.kind = IdentityKind::Transform;
    SampleResult r;
    try {
        r = compare_checks(transform_checks(b, ctx, assignment));
    } catch (const std::exception& e) {
        r.status = Status::Error;
        r.error = e.what();
    }
    r.assignment = assignment;
    r.q = ctx.q_value();
    report.status = r.status;
    report.samples.push_back(std::move(r));
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerificationReport> run_suite(const std::vector<IdentitySpec>& specs, const VerifyOptions& options,
                                          unsigned threads)
{
    std::vector<VerificationReport> reports(specs.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++)
            reports[i] = verify(specs[i], options);
    };
    if (threads <= 1) {
        worker();
        return reports;
    }
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i)
        pool.emplace_back(worker);
    pool.clear();
    return reports;
}

}  // namespace qid
