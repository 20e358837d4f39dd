#ifndef THETAFOCK_COEFFS_HPP
#define THETAFOCK_COEFFS_HPP

#include <vector>

#include "thetafock/kernel.hpp"

namespace thetafock {

/// Request for a generalized Hermite-Taylor lattice coefficient
/// a^{p,q}_{m,n} = sum_gamma chi(gamma) gamma^p conj(gamma)^q
/// e^(-(nu/2)|gamma|^2) H_{m,n}(gamma, conj(gamma)).
struct CoeffRequest {
    int m = 0, n = 0, p = 0, q = 0;
    double eps = 1e-14;
    int shell_cap = kDefaultShellCap;
};

inline constexpr int kCoeffDegreeCap = 60;

/// Single coefficient by the deterministic shell-ordered sum. Throws
/// NoConvergence/Overflow; degree cap on m+n+p+q is kCoeffDegreeCap.
SumResult coeff(const ThetaFockSpace& sp, const CoeffRequest& req);

/// All a_{m,n} with m <= M, n <= N (p = q = 0) in one lattice sweep,
/// using the Hermite recurrence table per point. Entry (m, n) sits at
/// index m*(N+1)+n. Values agree with coeff() within the tolerance; the
/// reported tail bound is the block-level (most conservative) one.
std::vector<SumResult> coeff_block(const ThetaFockSpace& sp, int M, int N,
                                   double eps);

struct ParityRow {
    int m, n, p, q;
    double magnitude;   // |a^{p,q}_{m,n}|
    double mass;        // sum of |summand| for the same sum
    double mass_ratio;  // magnitude / mass
    double even_scale;  // max(1, largest even-parity magnitude at adjacent total degree)
    bool vanishes;      // magnitude < 1e-10 * even_scale
};

struct ParityReport {
    std::vector<ParityRow> rows;  // all odd-total tuples, total <= degree
    double max_even_magnitude;    // nonzero witness among even-total tuples
    double worst_scale_ratio;     // max magnitude/even_scale over rows
    double worst_mass_ratio;      // max magnitude/mass over rows
};

/// Parity-vanishing check: every odd-total coefficient up to the given
/// total degree must vanish relative to the even-parity scale. Requires a
/// real-valued character (throws NotRealCharacter).
ParityReport parity_report(const ThetaFockSpace& sp, int degree);

/// |conj(a^{p,q}_{m,n}) - (-1)^(m+n+p+q) a^{q,p}_{n,m}|, the
/// index-swapped conjugation symmetry (valid for every pseudo-character).
double conj_symmetry_residual(const ThetaFockSpace& sp, int m, int n, int p,
                              int q);

/// Max relative residual over all tuples with m+n+p+q <= degree of the
/// two three-term recurrences
///   nu a^{p+1,q}_{m,n} = a^{p,q}_{m+1,n} + nu n a^{p,q}_{m,n-1}
///   nu a^{p,q+1}_{m,n} = a^{p,q}_{m,n+1} + nu m a^{p,q}_{m-1,n}
/// (each the conjugate of the other).
double recurrence_residuals(const ThetaFockSpace& sp, int degree);

/// Space transported to lambda*Gamma: generators scale by lambda, nu by
/// 1/|lambda|^2, the character keeps its generator values (so
/// chi_{lambda Gamma}(lambda gamma) = chi_Gamma(gamma)).
ThetaFockSpace scaled_space(const ThetaFockSpace& sp, cplx lambda);

/// Lattice-function scaling law: |a(lambda Gamma) - lambda^(p-n)
/// conj(lambda)^(q-m) a(Gamma)| / max(1, |a(Gamma)|).
double scaling_residual(const ThetaFockSpace& sp, cplx lambda, int m, int n,
                        int p, int q);

/// sum_{m,n in Z} (-1)^(m+n+mn) e^(-(t pi/2)(m^2+n^2)), shell-summed to
/// machine tail. Vanishes at t = 1 (the von Neumann density).
double gaussian_char_sum(double t);

} // namespace thetafock

#endif
