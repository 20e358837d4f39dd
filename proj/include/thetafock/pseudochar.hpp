#ifndef THETAFOCK_PSEUDOCHAR_HPP
#define THETAFOCK_PSEUDOCHAR_HPP

#include <complex>

#include "thetafock/lattice.hpp"

namespace thetafock {

/// Pseudo-character chi: Gamma -> U(1) satisfying the cocycle
///
///   chi(g + g') = chi(g) chi(g') exp((nu/2)(g*conj(g') - conj(g)*g')).
///
/// Represented by its values (u1, u2) on the generators; the unique
/// cocycle-consistent extension is
///
///   chi(m*omega1 + n*omega2) = u1^m * u2^n * (-1)^(k*m*n),
///
/// where k = (nu/pi) S(Gamma). The cross term is exact in integer parity
/// because nu * Im(omega1*conj(omega2)) = k*pi, so no floating exponential
/// enters the evaluation.
class PseudoCharacter {
public:
    static PseudoCharacter from_generators(const Lattice& lat, double nu,
                                           cplx u1, cplx u2);

    /// u1 = u2 = -1. For odd k this is the classical Weierstrass character
    /// (+1 iff gamma/2 is a lattice point); for general k it is the same
    /// generator extension.
    static PseudoCharacter weierstrass(const Lattice& lat, double nu);

    /// Test hook: builds the object without the dimension/integrality
    /// validation, so broken inputs can be probed by verify_cocycle.
    static PseudoCharacter unchecked(const Lattice& lat, double nu,
                                     cplx u1, cplx u2, int k);

    cplx evaluate(std::int64_t m, std::int64_t n) const;
    cplx evaluate(const LatticePoint& gamma) const {
        return evaluate(gamma.m, gamma.n);
    }

    /// Max cocycle residual over all pairs with coordinates in
    /// [-radius, radius]^2.
    double verify_cocycle(int radius) const;

    /// True when u1, u2 are within 1e-12 of {+1, -1}; evaluation is then
    /// carried out in exact sign arithmetic.
    bool is_real() const { return real_; }

    const Lattice& lattice() const { return lattice_; }
    double nu() const { return nu_; }
    int k() const { return k_; }
    cplx u1() const { return u1_; }
    cplx u2() const { return u2_; }

private:
    PseudoCharacter(const Lattice& lat, double nu, cplx u1, cplx u2, int k);

    Lattice lattice_;
    double nu_;
    cplx u1_, u2_;
    int k_;
    bool real_ = false;
    int sign1_ = 0, sign2_ = 0; // parity bits when real_: u_l = (-1)^sign_l
    double arg1_ = 0.0, arg2_ = 0.0;
};

} // namespace thetafock

#endif
