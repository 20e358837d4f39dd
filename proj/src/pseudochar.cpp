#include "thetafock/pseudochar.hpp"

#include <cmath>

#include "thetafock/errors.hpp"

namespace thetafock {

namespace {

bool near_unit(cplx u) { return std::abs(std::abs(u) - 1.0) <= 1e-12; }

} // namespace

PseudoCharacter::PseudoCharacter(const Lattice& lat, double nu, cplx u1,
                                 cplx u2, int k)
    : lattice_(lat), nu_(nu), u1_(u1), u2_(u2), k_(k) {
    if (!near_unit(u1_) || !near_unit(u2_)) {
        throw std::invalid_argument("pseudo-character generator values must be unimodular");
    }
    auto snap = [](cplx& u, int& sign) {
        if (std::abs(u - cplx(1.0)) <= 1e-12) { u = 1.0; sign = 0; return true; }
        if (std::abs(u + cplx(1.0)) <= 1e-12) { u = -1.0; sign = 1; return true; }
        return false;
    };
    bool r1 = snap(u1_, sign1_);
    bool r2 = snap(u2_, sign2_);
    real_ = r1 && r2;
    arg1_ = std::arg(u1_);
    arg2_ = std::arg(u2_);
}

PseudoCharacter PseudoCharacter::from_generators(const Lattice& lat, double nu,
                                                 cplx u1, cplx u2) {
    int k = lat.dimension(nu); // throws NonIntegralDimension
    return PseudoCharacter(lat, nu, u1, u2, k);
}

PseudoCharacter PseudoCharacter::weierstrass(const Lattice& lat, double nu) {
    return from_generators(lat, nu, -1.0, -1.0);
}

PseudoCharacter PseudoCharacter::unchecked(const Lattice& lat, double nu,
                                           cplx u1, cplx u2, int k) {
    return PseudoCharacter(lat, nu, u1, u2, k);
}

cplx PseudoCharacter::evaluate(std::int64_t m, std::int64_t n) const {
    // (-1)^(k*m*n) from parities alone.
    bool cross = (k_ & 1) && (m & 1) && (n & 1);
    if (real_) {
        bool neg = ((sign1_ && (m & 1)) ^ (sign2_ && (n & 1))) ^ cross;
        return neg ? -1.0 : 1.0;
    }
    double phase = static_cast<double>(m) * arg1_ + static_cast<double>(n) * arg2_;
    cplx val = std::polar(1.0, phase);
    return cross ? -val : val;
}

double PseudoCharacter::verify_cocycle(int radius) const {
    double worst = 0.0;
    for (std::int64_t m = -radius; m <= radius; ++m)
        for (std::int64_t n = -radius; n <= radius; ++n)
            for (std::int64_t mp = -radius; mp <= radius; ++mp)
                for (std::int64_t np = -radius; np <= radius; ++np) {
                    cplx g = lattice_.point_value(m, n);
                    cplx gp = lattice_.point_value(mp, np);
                    cplx lhs = evaluate(m + mp, n + np);
                    cplx factor = std::exp(0.5 * nu_ * (g * std::conj(gp) - std::conj(g) * gp));
                    cplx rhs = evaluate(m, n) * evaluate(mp, np) * factor;
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return worst;
}

} // namespace thetafock
