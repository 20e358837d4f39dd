#ifndef THETAFOCK_LATTICE_HPP
#define THETAFOCK_LATTICE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "thetafock/numerics.hpp"

namespace thetafock {

/// A point m*omega1 + n*omega2 of the lattice, kept together with its
/// integer coordinates so character values can be computed exactly.
struct LatticePoint {
    std::int64_t m = 0;
    std::int64_t n = 0;
    cplx value{0.0, 0.0};

    bool is_origin() const { return m == 0 && n == 0; }
};

/// Full-rank lattice Gamma = Z*omega1 + Z*omega2.
///
/// Generators are normalized at construction so that Im(omega1 *
/// conj(omega2)) > 0 (swapping them if needed); every downstream
/// orientation-sensitive formula assumes this. Construction rejects
/// near-collinear generators, which would make all lattice sums
/// ill-conditioned.
class Lattice {
public:
    Lattice(cplx omega1, cplx omega2);

    cplx omega1() const { return omega1_; }
    cplx omega2() const { return omega2_; }

    /// Cell area S(Gamma) = Im(omega1 * conj(omega2)) (positive after
    /// normalization).
    double cell_area() const { return area_; }

    cplx point_value(std::int64_t m, std::int64_t n) const {
        return static_cast<double>(m) * omega1_ + static_cast<double>(n) * omega2_;
    }
    LatticePoint point(std::int64_t m, std::int64_t n) const {
        return {m, n, point_value(m, n)};
    }

    /// All points with max(|m|,|n|) == k, ordered lexicographically on
    /// (m, n). shell(0) is the origin alone; shell(k) has 8k points.
    std::vector<LatticePoint> shell(int k) const;

    /// dim O = (nu/pi) * S(Gamma); throws NonIntegralDimension when the
    /// value is farther than 1e-9 from a positive integer.
    int dimension(double nu) const;

    /// Shortest |gamma| over the first shell. A point on shell k has
    /// |gamma| >= k * shell_min_distance().
    double shell_min_distance() const { return min_step_; }
    /// |omega1| + |omega2|; a point on shell k has |gamma| <= k * this.
    double shell_max_distance() const { return max_step_; }

    bool operator==(const Lattice& o) const {
        return omega1_ == o.omega1_ && omega2_ == o.omega2_;
    }

private:
    cplx omega1_, omega2_;
    double area_;
    double min_step_;
    double max_step_;
};

/// Parallelogram cell {origin + s*omega1 + t*omega2 : 0 <= s,t < 1},
/// tiling the plane under Gamma-translation.
class FundamentalCell {
public:
    explicit FundamentalCell(const Lattice& lat, cplx origin = 0.0)
        : lattice_(lat), origin_(origin) {}

    const Lattice& lattice() const { return lattice_; }
    cplx origin() const { return origin_; }

    struct Reduction {
        cplx z0;           // representative inside the cell
        LatticePoint gamma; // z = z0 + gamma.value
    };

    /// Unique decomposition z = z0 + gamma with z0 in the cell.
    Reduction reduce(cplx z) const;

    /// Point at cell coordinates (s, t).
    cplx map(double s, double t) const {
        return origin_ + s * lattice_.omega1() + t * lattice_.omega2();
    }

private:
    Lattice lattice_;
    cplx origin_;
};

} // namespace thetafock

#endif
