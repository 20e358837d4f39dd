#include "thetafock/hermite.hpp"

#include <array>
#include <cmath>

#include "thetafock/errors.hpp"

namespace thetafock {

namespace {

// factorials up to the degree cap, exact in double up to 22!, correctly
// rounded beyond
const std::array<double, kHermiteDegreeCap + 2>& factorials() {
    static const auto table = [] {
        std::array<double, kHermiteDegreeCap + 2> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    return table;
}

// integer power by repeated multiplication; ipow(z, 0) == 1 for every z
cplx ipow(cplx z, int e) {
    cplx r = 1.0;
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

} // namespace

cplx hermite_eval(double nu, int m, int n, cplx xi, int degree_cap) {
    if (m < 0 || n < 0) throw std::invalid_argument("hermite_eval: negative index");
    if (m + n > degree_cap) {
        throw Overflow("hermite_eval: m+n exceeds the degree cap");
    }
    const auto& fact = factorials();
    cplx xb = std::conj(xi);
    KahanSum sum;
    double nu_k = 1.0;
    for (int k = 0; k <= std::min(m, n); ++k) {
        cplx t = ipow(xi, m - k) * ipow(xb, n - k);
        double denom = nu_k * fact[k] * fact[m - k] * fact[n - k];
        sum.add((k % 2 ? -1.0 : 1.0) * t / denom);
        nu_k *= nu;
    }
    return fact[m] * fact[n] * std::pow(nu, m + n) * sum.value();
}

HermiteTable::HermiteTable(double nu, int max_m, int max_n, cplx xi,
                           int degree_cap)
    : nu_(nu), max_m_(max_m), max_n_(max_n), xi_(xi) {
    if (max_m < 0 || max_n < 0) throw std::invalid_argument("HermiteTable: negative extent");
    if (max_m + max_n > degree_cap) {
        throw Overflow("HermiteTable: max_m+max_n exceeds the degree cap");
    }
    values_.assign(static_cast<std::size_t>(max_m + 1) * (max_n + 1), cplx(0.0));
    auto ref = [&](int m, int n) -> cplx& {
        return values_[static_cast<std::size_t>(m) * (max_n_ + 1) + n];
    };
    // first row: H_{0,n} = (nu*conj(xi))^n
    cplx base = nu * std::conj(xi);
    cplx acc = 1.0;
    for (int n = 0; n <= max_n; ++n) {
        ref(0, n) = acc;
        acc *= base;
    }
    for (int m = 0; m < max_m; ++m) {
        for (int n = 0; n <= max_n; ++n) {
            cplx v = nu * xi * ref(m, n);
            if (n > 0) v -= nu * static_cast<double>(n) * ref(m, n - 1);
            ref(m + 1, n) = v;
        }
    }
}

double genfun2_residual(double nu, cplx a, cplx b, cplx xi, int M, int N) {
    cplx closed = std::exp(nu * (a * xi + b * std::conj(xi) - a * b));
    HermiteTable table(nu, M, N, xi);
    KahanSum sum;
    cplx am = 1.0; // a^m / m!
    for (int m = 0; m <= M; ++m) {
        cplx bn = 1.0; // b^n / n!
        for (int n = 0; n <= N; ++n) {
            sum.add(am * bn * table.at(m, n));
            bn *= b / static_cast<double>(n + 1);
        }
        am *= a / static_cast<double>(m + 1);
    }
    return std::abs(closed - sum.value());
}

double genfun1_residual(double nu, cplx z, cplx xi, int n, int M) {
    cplx closed = std::pow(nu, n) * ipow(std::conj(xi) - z, n) * std::exp(nu * xi * z);
    HermiteTable table(nu, M, n, xi);
    KahanSum sum;
    cplx zm = 1.0; // z^m / m!
    for (int m = 0; m <= M; ++m) {
        sum.add(zm * table.at(m, n));
        zm *= z / static_cast<double>(m + 1);
    }
    return std::abs(closed - sum.value());
}

} // namespace thetafock
