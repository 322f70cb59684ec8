#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qid/verifier.hpp"

namespace qid {

struct RunSummary {
    int passed = 0;
    int failed = 0;
    int errored = 0;
};

RunSummary summarize(const std::vector<VerificationReport>& reports);

// Machine-readable report. wall_ms is emitted only when `timing` is set so
// identical runs serialize to identical bytes.
std::string to_json(const std::vector<VerificationReport>& reports, const VerifyOptions& options, bool timing,
                    double total_wall_ms = 0.0);

// One line per identity, plus a counterexample block for every sample that
// did not pass.
void print_summary(std::ostream& os, const std::vector<VerificationReport>& reports, bool timing);

std::string describe_assignment(const ParameterAssignment& assignment);

}  // namespace qid
