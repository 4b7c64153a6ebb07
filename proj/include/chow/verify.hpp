#pragma once

#include <string>
#include <vector>

namespace chow {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/* Runs the ten-point verification suite (exact symbolic checks, fixed RNG
 * seed, deterministic output).  Criterion 10 compares against the frozen
 * value of the independent brute-force oracle; the acceptance binary
 * additionally recomputes that value live from its own oracle translation
 * unit. */
std::vector<CriterionResult> run_acceptance_criteria();

/* True iff every criterion passed. */
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace chow
