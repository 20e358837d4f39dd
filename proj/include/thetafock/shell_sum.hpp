#ifndef THETAFOCK_SHELL_SUM_HPP
#define THETAFOCK_SHELL_SUM_HPP

#include <cmath>
#include <limits>
#include <utility>

#include "thetafock/errors.hpp"
#include "thetafock/kernel.hpp"
#include "thetafock/numerics.hpp"

namespace thetafock {

/// Driver for the deterministic shell-ordered lattice sums.
///
/// Shells are visited in increasing index, points inside a shell in
/// lexicographic (m, n) order, so results are bit-identical run to run
/// (and would stay so under a parallel map as long as the reduction
/// re-accumulates in this order). Termination: at least `min_shells`
/// shells, then three consecutive shells whose absolute contribution is
/// below eps * max(1e-300, |partial|). The tail bound adds up the
/// caller's per-shell majorant beyond the last computed shell.
struct ShellSumOptions {
    double eps = 1e-12;
    int min_shells = 0;
    int shell_cap = kDefaultShellCap;
};

template <class TermFn, class MajorantFn>
SumResult sum_over_shells(const Lattice& lat, TermFn&& term,
                          MajorantFn&& shell_majorant,
                          const ShellSumOptions& opt) {
    KahanSum sum;
    double mass = 0.0;
    int quiet = 0;
    int k = 0;
    for (;; ++k) {
        if (k > opt.shell_cap) {
            throw NoConvergence("lattice sum exceeded the shell cap");
        }
        double shell_mass = 0.0;
        for (const LatticePoint& p : lat.shell(k)) {
            cplx t = term(p);
            sum.add(t);
            shell_mass += std::abs(t);
        }
        mass += shell_mass;
        if (shell_mass < opt.eps * std::max(1e-300, std::abs(sum.value()))) {
            ++quiet;
        } else {
            quiet = 0;
        }
        if (k >= opt.min_shells && quiet >= 3) break;
    }

    double tail = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int j = k + 1; j < k + 2000; ++j) {
        double mj = shell_majorant(j);
        tail += mj;
        // stop once the majorant is decreasing and negligible
        if (mj < prev && mj < 1e-300) break;
        prev = mj;
    }
    return SumResult{sum.value(), tail, k, mass};
}

} // namespace thetafock

#endif
