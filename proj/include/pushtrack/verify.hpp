#ifndef PUSHTRACK_VERIFY_HPP
#define PUSHTRACK_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace pushtrack {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    std::function<CriterionResult()> run;
};

// The acceptance suite: every tolerance and threshold pinned in code.
const std::vector<Criterion>& acceptance_criteria();

// Runs criteria whose name contains `filter` (all when empty), printing one
// pass/fail line each to stdout. Returns true iff all selected pass.
bool run_acceptance(const std::string& filter = {});

}  // namespace pushtrack

#endif
