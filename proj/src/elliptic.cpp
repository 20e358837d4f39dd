#include "thetafock/elliptic.hpp"

#include <cmath>

#include "thetafock/errors.hpp"

namespace thetafock {

namespace {

constexpr int kMaxThetaTerms = 400;

void check_nome(cplx q) {
    if (!(std::abs(q) < 1.0)) {
        throw NomeOutOfRange("theta series requires |q| < 1");
    }
}

// q^((n+1/2)^2) for n = 0, 1, ... as an incrementally updated sequence:
// exponent grows by 2n+2 from one term to the next.
struct HalfSquareNome {
    explicit HalfSquareNome(cplx q)
        : q_(q), value_(std::pow(q, 0.25)), step_(q) {}
    cplx value() const { return value_; }
    void advance() {
        value_ *= step_ * q_; // multiply by q^(2n+2)
        step_ *= q_ * q_;
    }
    cplx q_, value_, step_;
};

} // namespace

cplx theta2(cplx q) {
    check_nome(q);
    KahanSum sum;
    HalfSquareNome t(q);
    for (int n = 0; n < kMaxThetaTerms; ++n) {
        sum.add(t.value());
        if (std::abs(t.value()) < 1e-16 * std::abs(sum.value())) break;
        t.advance();
    }
    return 2.0 * sum.value();
}

cplx theta3(cplx q) {
    check_nome(q);
    KahanSum sum;
    sum.add(1.0);
    cplx qn = q;            // q^(n^2)
    cplx step = q * q * q;  // ratio q^(2n+1) between consecutive terms
    for (int n = 1; n < kMaxThetaTerms; ++n) {
        sum.add(2.0 * qn);
        if (std::abs(qn) < 1e-16 * std::abs(sum.value())) break;
        qn *= step;
        step *= q * q;
    }
    return sum.value();
}

cplx theta1(cplx v, cplx q) {
    check_nome(q);
    KahanSum sum;
    HalfSquareNome t(q);
    double peak = 0.0;
    for (int n = 0; n < kMaxThetaTerms; ++n) {
        cplx term = t.value() * std::sin(static_cast<double>(2 * n + 1) * v);
        if (n % 2) term = -term;
        sum.add(term);
        peak = std::max(peak, std::abs(sum.value()));
        // sin((2n+1)v) grows like e^((2n+1)|Im v|); the Gaussian nome decay
        // eventually wins, so convergence is tested on the term itself.
        if (n > 2 && std::abs(term) < 1e-17 * std::max(peak, 1e-300)) {
            return 2.0 * sum.value();
        }
        t.advance();
    }
    throw NoConvergence("theta1 series did not converge (|q| too close to 1 or v too large)");
}

cplx theta1_dv(cplx v, cplx q) {
    check_nome(q);
    KahanSum sum;
    HalfSquareNome t(q);
    double peak = 0.0;
    for (int n = 0; n < kMaxThetaTerms; ++n) {
        double j = static_cast<double>(2 * n + 1);
        cplx term = t.value() * j * std::cos(j * v);
        if (n % 2) term = -term;
        sum.add(term);
        peak = std::max(peak, std::abs(sum.value()));
        if (n > 2 && std::abs(term) < 1e-17 * std::max(peak, 1e-300)) {
            return 2.0 * sum.value();
        }
        t.advance();
    }
    throw NoConvergence("theta1' series did not converge");
}

ThetaIdentityReport theta_identity_report(double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("theta_identity_report: nu must be positive");
    cplx q = std::exp(cplx(-2.0 * nu));
    double t2 = theta2(q).real();
    double t3 = theta3(q).real();

    // direct split over index parities, no theta functions: the three
    // partial Gaussian sums with chi_W signs (+ even/even, - odd/odd,
    // - mixed)
    constexpr int R = 30;
    KahanSum ee, oo, mixed;
    for (int m = -R; m <= R; ++m) {
        for (int n = -R; n <= R; ++n) {
            double e = std::exp(-(nu / 2.0) * static_cast<double>(m * m + n * n));
            bool mo = m & 1, no = n & 1;
            if (!mo && !no) ee.add(e);
            else if (mo && no) oo.add(e);
            else mixed.add(e);
        }
    }
    double split = ee.value().real() - oo.value().real() - mixed.value().real();

    return ThetaIdentityReport{
        nu,
        std::abs(t2 * t2 - t3 * t3 - 2.0 * t2 * t3),
        t3 * t3 - t2 * t2 - 2.0 * t2 * t3,
        split,
    };
}

double theta_identity_residual(double nu) {
    return theta_identity_report(nu).printed_residual;
}

WeierstrassData::WeierstrassData(const Lattice& lat) : lattice_(lat) {
    // Use omega2 as the theta period so that tau = omega1/omega2 has
    // positive imaginary part under the lattice's orientation.
    a_ = lat.omega2();
    cplx b = lat.omega1();
    cplx tau = b / a_;
    q_ = std::exp(cplx(0.0, M_PI) * tau);

    // theta1'(0) and theta1'''(0)
    KahanSum p0, ppp0;
    HalfSquareNome t(q_);
    for (int n = 0; n < kMaxThetaTerms; ++n) {
        double j = static_cast<double>(2 * n + 1);
        cplx sgn = (n % 2) ? -1.0 : 1.0;
        p0.add(sgn * j * t.value());
        ppp0.add(-sgn * j * j * j * t.value());
        if (std::abs(t.value()) * j * j * j < 1e-18 * std::abs(p0.value())) break;
        t.advance();
    }
    theta1p0_ = 2.0 * p0.value();
    cplx theta1ppp0 = 2.0 * ppp0.value();

    eta_a_ = -M_PI * M_PI * theta1ppp0 / (3.0 * a_ * theta1p0_);
    // Legendre: eta(omega2)*omega1 - eta(omega1)*omega2 = 2*pi*i for
    // tau = omega1/omega2 in the upper half plane.
    eta1_ = (eta_a_ * b - cplx(0.0, 2.0 * M_PI)) / a_;
    eta2_ = eta_a_;
}

cplx WeierstrassData::sigma(cplx z) const {
    cplx v = M_PI * z / a_;
    return a_ * std::exp(eta_a_ * z * z / (2.0 * a_)) * theta1(v, q_) /
           (M_PI * theta1p0_);
}

cplx WeierstrassData::zeta(cplx z) const {
    auto red = FundamentalCell(lattice_).reduce(z);
    cplx nearest = red.gamma.value;
    // the reduced representative may sit near the far corners too
    for (auto [dm, dn] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
        cplx cand = lattice_.point_value(red.gamma.m + dm, red.gamma.n + dn);
        if (std::abs(z - cand) < std::abs(z - nearest)) nearest = cand;
    }
    if (std::abs(z - nearest) <= 1e-12 * (1.0 + std::abs(z))) {
        throw PoleAtLatticePoint("zeta has a pole at every lattice point");
    }
    cplx v = M_PI * z / a_;
    return eta_a_ * z / a_ + (M_PI / a_) * theta1_dv(v, q_) / theta1(v, q_);
}

cplx WeierstrassData::quasi_period(const LatticePoint& gamma) const {
    if (gamma.is_origin()) throw ZeroGamma("quasi_period requires gamma != 0");
    return static_cast<double>(gamma.m) * eta1_ + static_cast<double>(gamma.n) * eta2_;
}

MuInvariant mu_invariant(const WeierstrassData& w, double nu) {
    const Lattice& lat = w.lattice();
    double nu_crit = M_PI / lat.cell_area();
    if (std::abs(nu - nu_crit) > 1e-8 * nu_crit) {
        throw std::invalid_argument("mu_invariant requires the one-dimensional case nu = pi/S(Gamma)");
    }
    cplx w1 = lat.omega1(), w2 = lat.omega2();
    cplx e1 = w.eta1(), e2 = w.eta2();
    // [w1 conj(w1); w2 conj(w2)] [mu; nu] = [eta1; eta2]
    cplx det = w1 * std::conj(w2) - w2 * std::conj(w1); // = 2i S
    cplx mu = (e1 * std::conj(w2) - e2 * std::conj(w1)) / det;
    cplx nu_implied = (w1 * e2 - w2 * e1) / det;

    double scale1 = std::max(1.0, std::abs(e1));
    double scale2 = std::max(1.0, std::abs(e2));
    double r1 = std::abs(e1 - (mu * w1 + nu * std::conj(w1))) / scale1;
    double r2 = std::abs(e2 - (mu * w2 + nu * std::conj(w2))) / scale2;
    if (r1 > 1e-8 || r2 > 1e-8 || std::abs(nu_implied - nu) > 1e-8 * nu) {
        throw InconsistentMu("generator equations for mu disagree beyond tolerance");
    }
    return MuInvariant{mu, nu};
}

cplx modified_sigma(const WeierstrassData& w, const MuInvariant& mu, cplx z) {
    return std::exp(-0.5 * mu.mu * z * z) * w.sigma(z);
}

} // namespace thetafock
