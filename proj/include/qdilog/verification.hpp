#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdilog {

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;   // worst deviation observed
    std::string note;     // tolerance or informational detail
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Run one of {props, phi, sums, thm2, thm1, pretzel} or "all".
/// The seed drives every random test point; identical (suite, seed) runs
/// produce identical results.
std::vector<SuiteResult> run_verification(const std::string& suite,
                                          std::uint64_t seed);

std::string render_verification(const std::vector<SuiteResult>& results);

bool verification_passed(const std::vector<SuiteResult>& results);

} // namespace qdilog
