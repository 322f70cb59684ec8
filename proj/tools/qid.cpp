// qid: verify q-series identities, expand the polynomial families, apply the
// operator series to an expression.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qid/errors.hpp"
#include "qid/expr.hpp"
#include "qid/qkernel.hpp"
#include "qid/qoperators.hpp"
#include "qid/report.hpp"
#include "qid/tseries.hpp"
#include "qid/verifier.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned thread_cap()
{
    const char* env = std::getenv("QID_THREADS");
    if (env == nullptr || *env == '\0')
        return 0;
    try {
        const int n = std::stoi(env);
        return n < 0 ? 0u : static_cast<unsigned>(n);
    } catch (const std::exception&) {
        throw UsageError(std::string("QID_THREADS must be a non-negative integer, got '") + env + "'");
    }
}

qid::Rational parse_rational(const std::string& text, const char* what)
{
    try {
        return qid::Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": not a rational literal: '" + text + "'");
    }
}

qid::QValue q_option(const std::optional<std::string>& q)
{
    return q ? qid::QValue::numeric(parse_rational(*q, "--q")) : qid::QValue::symbolic();
}

qid::Symbol symbol_option(const std::string& name)
{
    qid::MultiPoly p = qid::parse_expr(name);
    if (p.size() != 1 || p.terms().begin()->second != qid::Rational(1) ||
        p.terms().begin()->first.factors().size() != 1 || p.terms().begin()->first.factors()[0].second != 1)
        throw UsageError("expected a single symbol, got '" + name + "'");
    return qid::Symbol(p.terms().begin()->first.factors()[0].first);
}

struct VerifyArgs {
    std::vector<std::string> ids;
    bool all = false;
    int order = 8;
    std::vector<std::string> q_values;
    int samples = 3;
    std::uint64_t seed = 20240601;
    std::string json_path;
    bool fail_fast = false;
    bool timing = false;
};

int run_verify(const VerifyArgs& args)
{
    qid::VerifyOptions options;
    options.order = args.order;
    options.samples = args.samples;
    options.seed = args.seed;
    if (args.order < 1)
        throw UsageError("--order must be >= 1");
    if (args.samples < 1)
        throw UsageError("--samples must be >= 1");
    if (!args.q_values.empty()) {
        options.q_values.clear();
        for (const auto& q : args.q_values) {
            const qid::Rational value = parse_rational(q, "--q");
            try {
                qid::SeriesContext(qid::sym::t(), args.order, value);
            } catch (const qid::Error& e) {
                throw UsageError(std::string("--q ") + q + ": " + e.what());
            }
            options.q_values.push_back(value);
        }
    }

    std::vector<qid::IdentitySpec> selected;
    if (args.all) {
        selected = qid::registry();
    } else {
        if (args.ids.empty())
            throw UsageError("verify needs --id or --all");
        for (const auto& id : args.ids) {
            const qid::IdentitySpec* spec = qid::lookup(id);
            if (spec == nullptr)
                throw UsageError("unknown identity '" + id + "' (see `qid list`)");
            selected.push_back(*spec);
        }
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<qid::VerificationReport> reports;
    if (args.fail_fast) {
        for (const auto& spec : selected) {
            reports.push_back(qid::verify(spec, options));
            if (reports.back().status != qid::Status::Pass)
                break;
        }
    } else {
        reports = qid::run_suite(selected, options, thread_cap());
    }
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    qid::print_summary(std::cout, reports, args.timing);
    if (!args.json_path.empty()) {
        std::ofstream out(args.json_path, std::ios::binary);
        if (!out)
            throw UsageError("cannot write '" + args.json_path + "'");
        out << qid::to_json(reports, options, args.timing, wall);
    }

    const qid::RunSummary sum = qid::summarize(reports);
    if (sum.errored > 0)
        return kExitInternal;
    return sum.failed > 0 ? kExitFail : 0;
}

struct ExpandArgs {
    std::string family;
    int n = 0;
    int k = 0;
    std::string base;
    std::optional<std::string> q;
};

int run_expand(const ExpandArgs& args)
{
    if (args.n < 0)
        throw UsageError("--n must be >= 0");
    const qid::QValue q = q_option(args.q);
    const qid::MultiPoly x = qid::MultiPoly::var(qid::sym::x());
    const qid::MultiPoly y = qid::MultiPoly::var(qid::sym::y());
    const qid::MultiPoly a = qid::MultiPoly::var(qid::sym::a());
    qid::MultiPoly out;
    if (args.family == "pochhammer") {
        out = qid::q_pochhammer(qid::parse_expr(args.base.empty() ? "a" : args.base), args.n, q);
    } else if (args.family == "qbinom") {
        if (args.k < 0 || args.k > args.n)
            throw UsageError("qbinom needs 0 <= --k <= --n");
        out = qid::gaussian_binomial(args.n, args.k, q);
    } else if (args.family == "cauchy") {
        out = qid::cauchy_poly(args.n, x, y, q);
    } else if (args.family == "gencauchy") {
        out = qid::generalized_cauchy_poly(args.n, x, y, a, q);
    } else if (args.family == "hahn") {
        out = qid::hahn_poly(args.n, qid::parse_expr(args.base.empty() ? "alpha" : args.base), x, q);
    } else {
        throw UsageError("unknown family '" + args.family + "'");
    }
    std::cout << out << "\n";
    return 0;
}

struct ApplyArgs {
    std::string op;
    std::string expr;
    std::string var = "x";
    std::string b = "b";
    std::string a = "a";
    std::string x = "x";
    std::string y = "y";
    std::optional<std::string> q;
};

int run_apply(const ApplyArgs& args)
{
    const qid::QValue q = q_option(args.q);
    const qid::MultiPoly p = q.apply(qid::parse_expr(args.expr));
    const qid::MultiPoly b = q.apply(qid::parse_expr(args.b));
    const qid::MultiPoly a = q.apply(qid::parse_expr(args.a));
    const qid::Symbol var = symbol_option(args.var);
    qid::MultiPoly out;
    if (args.op == "dq")
        out = qid::d_q(p, var, q);
    else if (args.op == "theta")
        out = qid::theta_single(p, var, q);
    else if (args.op == "thetaxy")
        out = qid::theta_xy(p, symbol_option(args.x), symbol_option(args.y), q);
    else if (args.op == "R")
        out = qid::apply_R(b, p, var, q);
    else if (args.op == "Efrak")
        out = qid::apply_E_frak(b, p, var, q);
    else if (args.op == "Etilde")
        out = qid::apply_E_tilde(a, b, p, var, q);
    else if (args.op == "Ltilde")
        out = qid::apply_L_tilde(a, b, p, symbol_option(args.x), symbol_option(args.y), q);
    else
        throw UsageError("unknown operator '" + args.op + "'");
    std::cout << out << "\n";
    return 0;
}

int run_list()
{
    for (const auto& spec : qid::registry())
        std::cout << spec.code << "\t" << spec.id << "\t" << qid::to_string(spec.kind) << "\t" << spec.formula
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of q-series identities"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List the identity catalog");

    VerifyArgs verify;
    auto* vcmd = app.add_subcommand("verify", "Verify identities");
    vcmd->add_option("--id", verify.ids, "Identity id or code (repeatable)");
    vcmd->add_flag("--all", verify.all, "Verify the whole catalog");
    vcmd->add_option("--order", verify.order, "Truncation order N")->capture_default_str();
    vcmd->add_option("--q", verify.q_values, "Numeric q sample (repeatable; default 1/2, 2/3, -1/3)");
    vcmd->add_option("--samples", verify.samples, "Parameter samples per q")->capture_default_str();
    vcmd->add_option("--seed", verify.seed, "Run seed")->capture_default_str();
    vcmd->add_option("--json", verify.json_path, "Write a JSON report to this path");
    vcmd->add_flag("--fail-fast", verify.fail_fast, "Stop at the first identity that does not pass");
    vcmd->add_flag("--timing", verify.timing, "Report wall-clock times");

    ExpandArgs expand;
    auto* ecmd = app.add_subcommand("expand", "Print a polynomial in expanded form");
    ecmd->add_option("family", expand.family, "pochhammer | qbinom | cauchy | gencauchy | hahn")
        ->required()
        ->check(CLI::IsMember({"pochhammer", "qbinom", "cauchy", "gencauchy", "hahn"}));
    ecmd->add_option("--n", expand.n, "Index n")->required();
    ecmd->add_option("--k", expand.k, "Index k (qbinom)");
    ecmd->add_option("--base", expand.base, "Base of (base;q)_n, or the Hahn parameter");
    ecmd->add_option("--q", expand.q, "Numeric q (default: symbolic)");

    ApplyArgs apply;
    auto* acmd = app.add_subcommand("apply", "Apply an operator to an expression");
    acmd->add_option("operator", apply.op, "dq | theta | thetaxy | R | Efrak | Etilde | Ltilde")
        ->required()
        ->check(CLI::IsMember({"dq", "theta", "thetaxy", "R", "Efrak", "Etilde", "Ltilde"}));
    acmd->add_option("--expr", apply.expr, "Polynomial to act on")->required();
    acmd->add_option("--var", apply.var, "Acting variable")->capture_default_str();
    acmd->add_option("--b", apply.b, "Operator coefficient b")->capture_default_str();
    acmd->add_option("--a", apply.a, "Parameter a (Etilde, Ltilde)")->capture_default_str();
    acmd->add_option("--x", apply.x, "First variable of theta_xy")->capture_default_str();
    acmd->add_option("--y", apply.y, "Second variable of theta_xy")->capture_default_str();
    acmd->add_option("--q", apply.q, "Numeric q (default: symbolic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (list->parsed())
            return run_list();
        if (vcmd->parsed())
            return run_verify(verify);
        if (ecmd->parsed())
            return run_expand(expand);
        if (acmd->parsed())
            return run_apply(apply);
    } catch (const UsageError& e) {
        std::cerr << "qid: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qid::SyntaxError& e) {
        std::cerr << "qid: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qid::OutsideDomain& e) {
        std::cerr << "qid: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qid: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
