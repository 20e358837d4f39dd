#ifndef THETAFOCK_VERIFY_HPP
#define THETAFOCK_VERIFY_HPP

#include <string>
#include <vector>

namespace thetafock {

/// Outcome of one verification criterion. `observed` is the worst
/// residual (or normalized ratio for compound checks) and must stay
/// below `threshold`; criteria with a runtime budget also fail when
/// `seconds` exceeds it.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double threshold = 0.0;
    double seconds = 0.0;
    double time_budget = 0.0; // 0 = unbudgeted
    std::string detail;
};

/// Runs the full verification suite (the program's acceptance gate).
std::vector<CriterionResult> run_acceptance();

} // namespace thetafock

#endif
