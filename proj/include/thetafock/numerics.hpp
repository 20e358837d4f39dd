#ifndef THETAFOCK_NUMERICS_HPP
#define THETAFOCK_NUMERICS_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace thetafock {

using cplx = std::complex<double>;

/// Kahan-compensated accumulator for complex sums. Summation order is the
/// caller's responsibility; results are bit-reproducible for a fixed order.
class KahanSum {
public:
    void add(cplx term) {
        add_part(re_, cre_, term.real());
        add_part(im_, cim_, term.imag());
    }
    cplx value() const { return {re_, im_}; }

private:
    static void add_part(double& sum, double& comp, double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double re_ = 0.0, im_ = 0.0, cre_ = 0.0, cim_ = 0.0;
};

/// Gauss-Legendre nodes and weights on [0, 1]. Nodes are computed by Newton
/// iteration on P_n and cached per n.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const QuadRule& gauss_legendre_01(int n);

/// Deterministic uniform doubles in [0, 1) from a splitmix64 stream.
/// Used instead of std::uniform_real_distribution so that sequences are
/// identical across standard library implementations.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : state_(seed) {}
    double next() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
    /// Uniform in [lo, hi).
    double next(double lo, double hi) { return lo + (hi - lo) * next(); }
    cplx next_complex(double lo, double hi) {
        double re = next(lo, hi);
        double im = next(lo, hi);
        return {re, im};
    }

private:
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t state_;
};

} // namespace thetafock

#endif
