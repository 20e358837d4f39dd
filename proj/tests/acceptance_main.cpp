// Acceptance suite runner: one line per criterion, nonzero exit on any
// failure. The same checks back `thetafock verify all`.

#include <cstdio>

#include "thetafock/verify.hpp"

int main() {
    auto results = thetafock::run_acceptance();
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("%s  criterion %2d  %-42s  observed %.3e  (tol %.0e, %.2fs)\n",
                    r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.observed,
                    r.threshold, r.seconds);
        if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    std::printf("%s\n", all_passed ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return all_passed ? 0 : 1;
}
