// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qid/qoperators.hpp"
#include "qid/report.hpp"
#include "qid/verifier.hpp"

using namespace qid;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
    if (!detail.empty())
        std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok)
        ++failures;
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<IdentitySpec> pick(std::initializer_list<const char*> codes)
{
    std::vector<IdentitySpec> out;
    for (const char* c : codes)
        out.push_back(*lookup(c));
    return out;
}

// Runs single-threaded; returns the codes that did not pass.
std::string run_all(const std::vector<IdentitySpec>& specs, const VerifyOptions& o, double& ms)
{
    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_suite(specs, o, 1);
    ms = elapsed_ms(start);
    std::string bad;
    for (const auto& r : reports)
        if (r.status != Status::Pass) {
            bad += (bad.empty() ? "" : ",") + r.code;
            print_summary(std::cerr, {r}, false);
        }
    return bad;
}

std::string fmt_ms(double ms)
{
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << ms << " ms";
    return os.str();
}

MultiPoly V(Symbol s, int e = 1)
{
    return MultiPoly::var(s, e);
}

MultiPoly shift(const MultiPoly& p, Symbol s, const MultiPoly& factor)
{
    return substitute(p, s, factor * V(s));
}

bool anchors_hold(std::string& detail)
{
    const MultiPoly q = V(sym::q()), qi = V(sym::q(), -1);
    const MultiPoly x = V(sym::x()), y = V(sym::y()), z = V(sym::z()), a = V(sym::a()), b = V(sym::b());
    const MultiPoly one(1);
    bool ok = true;

    if (apply_R(b, a, sym::a()) != a - b) {
        ok = false;
        detail += "T5 anchor; ";
    }
    if (apply_E_frak(b, a, sym::a()) != a + b) {
        ok = false;
        detail += "T1 anchor; ";
    }
    const MultiPoly f = apply_L_tilde(a, z, y - x, sym::x(), sym::y());
    if (f != (y - x) - (one - a) * z) {
        ok = false;
        detail += "T4 anchor f; ";
    }
    const MultiPoly f_qz = shift(f, sym::z(), q), f_q2z = shift(f, sym::z(), q * q);
    const MultiPoly lhs = (qi * x - y) * (f - f_qz);
    const MultiPoly rhs = z * (shift(f_qz, sym::x(), qi) - shift(f_qz, sym::y(), q)) +
                          a * z * (shift(f_q2z, sym::y(), q) - shift(f_q2z, sym::x(), qi));
    const MultiPoly expected = (qi * x - y) * (one - a) * (q - one) * z;
    if (lhs != expected || rhs != expected) {
        ok = false;
        detail += "T4 anchor sides; ";
    }
    return ok;
}

}  // namespace

int main()
{
    VerifyOptions options;  // N = 8, q in {1/2, 2/3, -1/3}, 3 samples, seed 20240601

    {
        double ms = 0;
        const std::string bad = run_all(pick({"C2", "C3", "C4", "D1", "L1", "S1", "P1", "P2"}), options, ms);
        report(1, "symbolic suite holds exactly with symbolic q", bad.empty() && ms < 5000,
               (bad.empty() ? "" : "failing " + bad + ", ") + fmt_ms(ms) + " (limit 5 s)");
    }
    {
        double ms = 0;
        const std::string bad = run_all(pick({"E1", "E2", "E3", "C1", "L2", "G1", "G2", "G3", "G4", "G5", "G6",
                                              "G7", "S2", "S3", "S4", "X1"}),
                                        options, ms);
        report(2, "series suite holds to order 8 for 3 q values x 3 samples", bad.empty() && ms < 60000,
               (bad.empty() ? "" : "failing " + bad + ", ") + fmt_ms(ms) + " (limit 60 s)");
    }
    {
        VerifyOptions five = options;
        five.samples = 5;
        five.f0_degree = 4;
        double ms = 0;
        const std::string bad = run_all(pick({"T1", "T2", "T3", "T4", "T5"}), five, ms);
        std::string detail;
        const bool anchors = anchors_hold(detail);
        report(3, "generate-and-check suite (5 seeds, deg f0 = 4) and the three anchors", bad.empty() && anchors,
               (bad.empty() ? "" : "failing " + bad + ", ") + detail + fmt_ms(ms));
    }
    {
        double ms = 0;
        const std::string bad = run_all(pick({"G6", "G7", "G8", "S5", "S6"}), options, ms);
        report(4, "specializations reproduce the simpler builders exactly", bad.empty(),
               bad.empty() ? "" : "failing " + bad);
    }
    {
        const auto mutants = mutant_registry();
        std::string detail;
        bool ok = mutants.size() >= 5;
        for (const auto& m : mutants) {
            const auto r = verify(m, options);
            bool named = r.status == Status::Fail;
            int order = -1;
            for (const auto& s : r.samples) {
                if (s.status == Status::Error)
                    named = false;
                if (s.status == Status::Fail) {
                    if (!s.first_mismatch_order || !s.lhs_coeff || !s.rhs_coeff)
                        named = false;
                    else if (order < 0)
                        order = *s.first_mismatch_order;
                }
            }
            ok = ok && named;
            detail += m.code + (named ? " caught at order " + std::to_string(order) : " MISSED") + "; ";
        }
        report(5, "every injected perturbation is detected with a first mismatching order", ok, detail);
    }
    {
        const auto& all = registry();
        const std::string a = to_json(run_suite(all, options, 1), options, false);
        const std::string b = to_json(run_suite(all, options, 0), options, false);
        report(6, "two runs with identical config give byte-identical JSON", a == b,
               std::to_string(a.size()) + " bytes");
    }

    return failures == 0 ? 0 : 1;
}
