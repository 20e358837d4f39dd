#ifndef THETAFOCK_ELLIPTIC_HPP
#define THETAFOCK_ELLIPTIC_HPP

#include <complex>

#include "thetafock/lattice.hpp"

namespace thetafock {

/// Jacobi theta constants at nome q, |q| < 1 (throws NomeOutOfRange):
///   theta2(q) = 2 sum_{n>=0} q^((n+1/2)^2)
///   theta3(q) = 1 + 2 sum_{n>=1} q^(n^2)
/// Series are truncated when the next term drops below 1e-16 of the
/// partial sum.
cplx theta2(cplx q);
cplx theta3(cplx q);

/// theta1(v, q) = 2 sum (-1)^n q^((n+1/2)^2) sin((2n+1)v), complex v.
cplx theta1(cplx v, cplx q);
/// d/dv theta1(v, q).
cplx theta1_dv(cplx v, cplx q);

/// Diagnostic for the square-lattice theta identity of the character sum.
/// The identity is evaluated two independent ways so the true sign/nome
/// normalization can be read off empirically (see ThetaIdentityReport
/// fields); the as-printed combination is reported, not asserted.
struct ThetaIdentityReport {
    double nu;
    /// |theta2^2 - theta3^2 - 2 theta2 theta3| at nome e^(-2 nu), the
    /// identity as printed.
    double printed_residual;
    /// theta3^2 - theta2^2 - 2 theta2 theta3 at nome e^(-2 nu): the
    /// combination produced by splitting the character sum over index
    /// parities.
    double theta_combination;
    /// The same split computed by direct double sums over |m|,|n| <= 30,
    /// with no theta functions involved.
    double split_sum_combination;
};

ThetaIdentityReport theta_identity_report(double nu);

/// Residual of the identity as printed (see ThetaIdentityReport).
double theta_identity_residual(double nu);

/// Weierstrass sigma/zeta data for the period lattice Gamma itself
/// (generators omega1, omega2 are full periods). sigma is evaluated
/// through the theta1 closed form (DLMF 23.6.9 adapted to this
/// convention); quasi-periods come from theta1'''(0)/theta1'(0) and the
/// Legendre relation, which under the orientation Im(omega1*conj(omega2))
/// > 0 reads eta1*omega2 - eta2*omega1 = -2*pi*i.
class WeierstrassData {
public:
    explicit WeierstrassData(const Lattice& lat);

    const Lattice& lattice() const { return lattice_; }
    /// Quasi-period eta(omega1): sigma(z + omega1) = -sigma(z) *
    /// exp(eta1 * (z + omega1/2)).
    cplx eta1() const { return eta1_; }
    /// Quasi-period eta(omega2).
    cplx eta2() const { return eta2_; }

    cplx sigma(cplx z) const;
    /// zeta = sigma'/sigma; throws PoleAtLatticePoint on Gamma.
    cplx zeta(cplx z) const;

    /// eta(gamma) = m*eta1 + n*eta2; throws ZeroGamma at the origin.
    cplx quasi_period(const LatticePoint& gamma) const;

private:
    Lattice lattice_;
    cplx a_;       // generator used as the theta period (omega2)
    cplx q_;       // nome e^(i pi omega1/omega2)
    cplx theta1p0_;
    cplx eta_a_;   // eta(omega2)
    cplx eta1_, eta2_;
};

/// mu(Gamma) at critical weight nu = pi/S(Gamma), defined by the linear
/// system eta(omega_l) = mu*omega_l + nu*conj(omega_l), l = 1,2. The
/// system also recovers nu = pi/S identically (Legendre relation), which
/// is verified. Throws InconsistentMu when the generator equations
/// disagree beyond 1e-8.
struct MuInvariant {
    cplx mu;
    double nu;
};

MuInvariant mu_invariant(const WeierstrassData& w, double nu);

/// Modified sigma e^(-mu z^2/2) sigma(z); satisfies the space's
/// functional equation with the Weierstrass character at nu = pi/S.
cplx modified_sigma(const WeierstrassData& w, const MuInvariant& mu, cplx z);

} // namespace thetafock

#endif
