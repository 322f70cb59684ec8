#include "qid/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qid {

namespace {

using Json = nlohmann::ordered_json;

Json assignment_json(const ParameterAssignment& a)
{
    Json out = Json::object();
    for (const auto& [name, value] : a.values)
        out[name] = value.to_string();
    for (const auto& [name, value] : a.knobs)
        out[name] = value;
    return out;
}

Json sample_json(const SampleResult& s)
{
    Json out;
    out["assignment"] = assignment_json(s.assignment);
    out["q"] = s.q ? s.q->to_string() : std::string("symbolic");
    out["status"] = std::string(to_string(s.status));
    if (!s.check.empty())
        out["check"] = s.check;
    if (s.first_mismatch_order)
        out["first_mismatch_order"] = *s.first_mismatch_order;
    if (s.lhs_coeff)
        out["lhs_coeff"] = *s.lhs_coeff;
    if (s.rhs_coeff)
        out["rhs_coeff"] = *s.rhs_coeff;
    if (!s.error.empty())
        out["error"] = s.error;
    return out;
}

}  // namespace

RunSummary summarize(const std::vector<VerificationReport>& reports)
{
    RunSummary s;
    for (const auto& r : reports) {
        switch (r.status) {
        case Status::Pass: ++s.passed; break;
        case Status::Fail: ++s.failed; break;
        case Status::Error: ++s.errored; break;
        }
    }
    return s;
}

std::string to_json(const std::vector<VerificationReport>& reports, const VerifyOptions& options, bool timing,
                    double total_wall_ms)
{
    Json doc;
    doc["version"] = 1;
    doc["seed"] = options.seed;
    doc["order"] = options.order;
    doc["samples"] = options.samples;
    Json qs = Json::array();
    for (const auto& q : options.q_values)
        qs.push_back(q.to_string());
    doc["q_values"] = qs;
    Json ids = Json::array();
    for (const auto& r : reports) {
        Json entry;
        entry["id"] = r.id;
        entry["code"] = r.code;
        entry["formula"] = r.formula;
        entry["kind"] = std::string(to_string(r.kind));
        Json samples = Json::array();
        for (const auto& s : r.samples)
            samples.push_back(sample_json(s));
        entry["samples"] = samples;
        entry["status"] = std::string(to_string(r.status));
        if (timing)
            entry["wall_ms"] = r.wall_ms;
        ids.push_back(entry);
    }
    doc["identities"] = ids;
    const RunSummary sum = summarize(reports);
    doc["summary"] = {{"passed", sum.passed},
                      {"failed", sum.failed},
                      {"errored", sum.errored},
                      {"wall_ms", timing ? Json(total_wall_ms) : Json(nullptr)}};
    return doc.dump(2) + "\n";
}

std::string describe_assignment(const ParameterAssignment& a)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : a.values) {
        os << (first ? "" : ", ") << name << "=" << value.to_string();
        first = false;
    }
    for (const auto& [name, value] : a.knobs) {
        os << (first ? "" : ", ") << name << "=" << value;
        first = false;
    }
    return first ? "-" : os.str();
}

void print_summary(std::ostream& os, const std::vector<VerificationReport>& reports, bool timing)
{
    for (const auto& r : reports) {
        os << std::left << std::setw(5) << std::string(to_string(r.status)) << " " << std::setw(4) << r.code << " "
           << r.id << " (" << r.samples.size() << " samples";
        if (timing)
            os << ", " << std::fixed << std::setprecision(1) << r.wall_ms << " ms";
        os << ")\n";
        for (const auto& s : r.samples) {
            if (s.status == Status::Pass)
                continue;
            os << "      q=" << (s.q ? s.q->to_string() : std::string("symbolic"))
               << "  params: " << describe_assignment(s.assignment) << "\n";
            if (!s.check.empty())
                os << "      check: " << s.check << "\n";
            if (s.first_mismatch_order)
                os << "      first mismatch at order " << *s.first_mismatch_order << "\n"
                   << "        lhs: " << s.lhs_coeff.value_or("") << "\n"
                   << "        rhs: " << s.rhs_coeff.value_or("") << "\n";
            if (!s.error.empty())
                os << "      error: " << s.error << "\n";
        }
    }
    const RunSummary sum = summarize(reports);
    os << sum.passed << " passed, " << sum.failed << " failed, " << sum.errored << " errored\n";
}

}  // namespace qid
