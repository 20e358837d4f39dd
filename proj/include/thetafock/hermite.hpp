#ifndef THETAFOCK_HERMITE_HPP
#define THETAFOCK_HERMITE_HPP

#include <complex>
#include <vector>

#include "thetafock/numerics.hpp"

namespace thetafock {

/// Total-degree cap for Hermite evaluation; factorial growth exhausts
/// double precision not far beyond this.
inline constexpr int kHermiteDegreeCap = 60;

/// Weighted complex Hermite polynomial H_{m,n}(xi, conj(xi)) at weight nu,
/// from the explicit finite sum
///
///   H_{m,n} = m! n! nu^(m+n) sum_k (-1)^k/(nu^k k!)
///             * xi^(m-k)/(m-k)! * conj(xi)^(n-k)/(n-k)!,
///
/// accumulated with compensated summation (the terms alternate in sign).
/// Throws Overflow when m + n exceeds degree_cap.
cplx hermite_eval(double nu, int m, int n, cplx xi,
                  int degree_cap = kHermiteDegreeCap);

/// Table of H_{m,n}(xi) for 0 <= m <= max_m, 0 <= n <= max_n. The first
/// row is H_{0,n} = (nu*conj(xi))^n and the rest is filled by the
/// three-term recurrence H_{m+1,n} = nu*xi*H_{m,n} - nu*n*H_{m,n-1}.
class HermiteTable {
public:
    HermiteTable(double nu, int max_m, int max_n, cplx xi,
                 int degree_cap = kHermiteDegreeCap);

    cplx at(int m, int n) const {
        return values_[static_cast<std::size_t>(m) * (max_n_ + 1) + n];
    }
    int max_m() const { return max_m_; }
    int max_n() const { return max_n_; }
    double nu() const { return nu_; }
    cplx xi() const { return xi_; }

private:
    double nu_;
    int max_m_, max_n_;
    cplx xi_;
    std::vector<cplx> values_;
};

/// | exp(nu(a*xi + b*conj(xi) - a*b)) - sum_{m<=M, n<=N} a^m b^n/(m!n!) H_{m,n}(xi) |
double genfun2_residual(double nu, cplx a, cplx b, cplx xi, int M, int N);

/// | nu^n (conj(xi) - z)^n exp(nu*xi*z) - sum_{m<=M} z^m/m! H_{m,n}(xi) |
double genfun1_residual(double nu, cplx z, cplx xi, int n, int M);

} // namespace thetafock

#endif
