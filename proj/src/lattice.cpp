#include "thetafock/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thetafock/errors.hpp"

namespace thetafock {

Lattice::Lattice(cplx omega1, cplx omega2) : omega1_(omega1), omega2_(omega2) {
    double cross = std::imag(std::conj(omega1) * omega2);
    double scale = std::abs(omega1) * std::abs(omega2);
    if (std::abs(cross) <= 1e-12 * scale || scale == 0.0) {
        throw DegenerateLattice("generators are (near-)collinear: |Im(conj(omega1)*omega2)| <= 1e-12*|omega1||omega2|");
    }
    if (std::imag(omega1_ * std::conj(omega2_)) < 0.0) {
        std::swap(omega1_, omega2_);
    }
    area_ = std::imag(omega1_ * std::conj(omega2_));

    // A shell-k point is k * (a point on the boundary of [-1,1]^2 in
    // coefficient space), so the continuous boundary minimum gives the
    // rigorous lower bound |gamma| >= k * min_step_. The integer shell-1
    // minimum would overestimate it on skewed lattices.
    auto edge_min = [](cplx w, cplx v) {
        // min over s in [-1,1] of |s*w + v|
        double s = -std::real(w * std::conj(v)) / std::norm(w);
        s = std::clamp(s, -1.0, 1.0);
        return std::abs(s * w + v);
    };
    min_step_ = std::min(edge_min(omega1_, omega2_), edge_min(omega2_, omega1_));
    max_step_ = std::abs(omega1_) + std::abs(omega2_);
}

std::vector<LatticePoint> Lattice::shell(int k) const {
    std::vector<LatticePoint> pts;
    if (k == 0) {
        pts.push_back(point(0, 0));
        return pts;
    }
    pts.reserve(static_cast<std::size_t>(8) * k);
    for (std::int64_t m = -k; m <= k; ++m) {
        if (m == -k || m == k) {
            for (std::int64_t n = -k; n <= k; ++n) pts.push_back(point(m, n));
        } else {
            pts.push_back(point(m, -k));
            pts.push_back(point(m, k));
        }
    }
    return pts;
}

int Lattice::dimension(double nu) const {
    double k = nu / M_PI * area_;
    double rounded = std::round(k);
    if (std::abs(k - rounded) >= 1e-9 || rounded < 0.5) {
        throw NonIntegralDimension("(nu/pi)*S(Gamma) is not a positive integer; no pseudo-character exists for this (nu, Gamma)");
    }
    return static_cast<int>(rounded);
}

FundamentalCell::Reduction FundamentalCell::reduce(cplx z) const {
    // Solve z - origin = S*omega1 + T*omega2 over the reals, then split
    // integer and fractional parts.
    cplx w1 = lattice_.omega1(), w2 = lattice_.omega2();
    cplx d = z - origin_;
    double det = w1.real() * w2.imag() - w1.imag() * w2.real();
    double S = (d.real() * w2.imag() - d.imag() * w2.real()) / det;
    double T = (w1.real() * d.imag() - w1.imag() * d.real()) / det;
    double fm = std::floor(S), fn = std::floor(T);
    auto m = static_cast<std::int64_t>(fm);
    auto n = static_cast<std::int64_t>(fn);
    LatticePoint gamma = lattice_.point(m, n);
    return Reduction{origin_ + (S - fm) * w1 + (T - fn) * w2, gamma};
}

} // namespace thetafock
