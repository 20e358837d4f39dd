#ifndef THETAFOCK_ZEROS_HPP
#define THETAFOCK_ZEROS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "thetafock/kernel.hpp"

namespace thetafock {

struct ZeroCountResult {
    int count = 0;
    cplx winding_raw{0.0, 0.0}; // contour value before rounding
    cplx shift{0.0, 0.0};       // cell displacement u actually used
    double path_min_abs = 0.0;  // min |phi_w| seen on the contour
};

/// Number of zeros of phi_w = K(., w) in one fundamental cell, by the
/// argument principle: (1/2 pi i) contour integral of phi'_w/phi_w over
/// the boundary of the shifted cell u + Lambda(Gamma), Gauss-Legendre
/// `nodes` points per edge. The contour is traversed counterclockwise
/// (edge omega2 first under the lattice orientation). Retries with a new
/// deterministic shift when the path passes too close to a zero or the
/// integral is not near an integer; throws PathUnstable after 8 retries
/// and IdenticallyZero when phi_w vanishes on the whole probe grid (a
/// candidate member of the analytic set).
ZeroCountResult zero_count(const ThetaFockSpace& sp, cplx w, int nodes = 64,
                           std::optional<cplx> shift = std::nullopt);

struct LocatedZero {
    cplx location;
    double refined_abs; // |phi_w| at the refined point
};

struct ZeroList {
    std::vector<LocatedZero> zeros;
    int failed_seeds = 0; // Newton refinements that stalled (non-fatal)
};

/// Locates the zeros of phi_w in a cell: grid scan for local minima of
/// |phi_w|, Newton refinement on the analytic derivative, deduplication
/// modulo Gamma. The list length should equal zero_count's answer.
ZeroList zero_locate(const ThetaFockSpace& sp, cplx w, int grid);

struct XiProbeResult {
    std::vector<cplx> candidates;
    bool low_confidence = false;
    double kernel_scale = 0.0; // median over w of max_z |phi_w|
};

/// Numerical probe of the analytic set Xi = {w in the cell : phi_w == 0}.
/// Reports w-cells where max_z |phi_w| falls below 1e-8 of the global
/// kernel scale, each refined by local minimization of the max-abs
/// objective. Findings are candidates, never proofs; an empty list is a
/// valid outcome.
XiProbeResult xi_probe(const ThetaFockSpace& sp, int wgrid, int zgrid);

/// Von Neumann factorization check: the spread (max-min)/mean of
/// K(z,w) / (sigma~(z) conj(sigma~(w))) over the sample pairs, where
/// sigma~ is the modified Weierstrass sigma of the space's lattice.
/// Requires k = 1 (throws NotOneDimensional) and the Weierstrass
/// character. Sample pairs where sigma~ nearly vanishes are rejected.
double sigma_factor_residual(const ThetaFockSpace& sp,
                             const std::vector<std::pair<cplx, cplx>>& samples);

/// Deterministic interior sample pairs for sigma_factor_residual.
std::vector<std::pair<cplx, cplx>> sigma_factor_default_samples(
    const ThetaFockSpace& sp, int count = 10);

} // namespace thetafock

#endif
