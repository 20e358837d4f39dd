#ifndef THETAFOCK_KERNEL_HPP
#define THETAFOCK_KERNEL_HPP

#include <complex>

#include "thetafock/lattice.hpp"
#include "thetafock/pseudochar.hpp"

namespace thetafock {

inline constexpr int kDefaultShellCap = 200;

/// The theta Bargmann-Fock space data (Gamma, nu, chi) with its dimension
/// k = (nu/pi) S(Gamma).
class ThetaFockSpace {
public:
    ThetaFockSpace(const Lattice& lat, double nu, PseudoCharacter chi);
    explicit ThetaFockSpace(PseudoCharacter chi);

    const Lattice& lattice() const { return chi_.lattice(); }
    double nu() const { return chi_.nu(); }
    const PseudoCharacter& chi() const { return chi_; }
    int dim() const { return chi_.k(); }

private:
    PseudoCharacter chi_;
};

/// Truncated lattice-sum value with bookkeeping. `value` is the
/// deterministic shell-ordered partial sum, `tail_bound` a Gaussian
/// majorant of everything dropped, `abs_mass` the sum of |term| actually
/// accumulated (the natural scale against which cancellation identities
/// are judged).
struct SumResult {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
    int shells_used = 0;
    double abs_mass = 0.0;
};

/// Reproducing kernel K(z, w) = (nu/pi) sum_gamma chi(gamma)
/// exp(-(nu/2)|gamma|^2 + nu(z*conj(gamma) - conj(w)*gamma + z*conj(w))),
/// summed shell by shell until three consecutive shells are quiet at
/// relative eps (and a minimum radius proportional to |z|+|w| has been
/// passed; the summand peaks away from the origin). Throws NoConvergence
/// past shell_cap, Overflow if a term exponent exceeds +700.
SumResult kernel_eval(const ThetaFockSpace& sp, cplx z, cplx w, double eps,
                      int shell_cap = kDefaultShellCap);

/// d/dz of kernel_eval (term-wise: each term picks up nu*(conj(gamma) +
/// conj(w))).
SumResult kernel_eval_dz(const ThetaFockSpace& sp, cplx z, cplx w, double eps,
                         int shell_cap = kDefaultShellCap);

/// Hermite-Taylor double series (nu/pi) sum_{m<=M, n<=N} (-1)^m a_{m,n}
/// z^n conj(w)^m / (m! n!), coefficients from the coeffs module at
/// per-coefficient tolerance eps.
cplx kernel_eval_series(const ThetaFockSpace& sp, cplx z, cplx w, int M,
                        int N, double eps);

/// Poincare series of the monomial e_m: sum_gamma chi(gamma)
/// (z-gamma)^m exp(-(nu/2)|gamma|^2 + nu z conj(gamma)). No nu/pi
/// prefactor (matches the operator definition).
SumResult poincare_monomial(const ThetaFockSpace& sp, int m, cplx z,
                            double eps, int shell_cap = kDefaultShellCap);

/// (nu/pi) sum_{m<=M} P(e_m)(z) (nu conj(w))^m / m!.
cplx kernel_via_poincare(const ThetaFockSpace& sp, cplx z, cplx w, int M,
                         double eps);

/// |K(z+g, w+g') - chi(g) e^((nu/2)|g|^2 + nu z conj(g)) K(z,w)
///  conj(chi(g')) e^((nu/2)|g'|^2 + nu conj(w) g')| / max(1, |rhs|).
double bi_invariance_residual(const ThetaFockSpace& sp, cplx z, cplx w,
                              const LatticePoint& gamma,
                              const LatticePoint& gamma2, double eps);

/// Reproducing-property residual for f = P(e_m): tensor Gauss-Legendre
/// quadrature of K(z,w) f(w) e^(-nu|w|^2) over one fundamental cell
/// (quadN nodes per axis, Jacobian S(Gamma)), compared against f(z).
/// Relative to max(1, |f(z)|).
double reproducing_residual(const ThetaFockSpace& sp, int m, cplx z,
                            int quadN);

} // namespace thetafock

#endif
