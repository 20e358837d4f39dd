#include "thetafock/coeffs.hpp"

#include <cmath>
#include <unordered_map>

#include "thetafock/errors.hpp"
#include "thetafock/hermite.hpp"
#include "thetafock/shell_sum.hpp"

namespace thetafock {

namespace {

cplx ipow(cplx z, int e) {
    cplx r = 1.0;
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

// lambda^e for possibly negative e (|lambda| != 0)
cplx cpow_int(cplx z, int e) {
    return e >= 0 ? ipow(z, e) : 1.0 / ipow(z, -e);
}

cplx guarded_exp(cplx e) {
    if (e.real() > 700.0) {
        throw Overflow("coefficient term exponent exceeds the overflow guard (+700)");
    }
    return std::exp(e);
}

// |H_{m,n}| <= this at |xi| = r (the explicit sum with every sign made
// positive); used only for tail majorants.
double hermite_abs_bound(double nu, int m, int n, double r) {
    double sum = 0.0;
    double fact_k = 1.0, nu_k = 1.0;
    for (int k = 0; k <= std::min(m, n); ++k) {
        double fmk = 1.0, fnk = 1.0;
        for (int j = 2; j <= m - k; ++j) fmk *= j;
        for (int j = 2; j <= n - k; ++j) fnk *= j;
        sum += std::pow(r, m - k) * std::pow(r, n - k) / (nu_k * fact_k * fmk * fnk);
        nu_k *= nu;
        fact_k *= k + 1;
    }
    double fm = 1.0, fn = 1.0;
    for (int j = 2; j <= m; ++j) fm *= j;
    for (int j = 2; j <= n; ++j) fn *= j;
    return fm * fn * std::pow(nu, m + n) * sum;
}

int coeff_min_shells(const Lattice& lat, double nu, int total_degree) {
    double peak = std::sqrt((total_degree + 1) / nu);
    return static_cast<int>(std::ceil(2.0 * peak / lat.shell_min_distance())) + 3;
}

} // namespace

SumResult coeff(const ThetaFockSpace& sp, const CoeffRequest& req) {
    if (req.m < 0 || req.n < 0 || req.p < 0 || req.q < 0) {
        throw std::invalid_argument("coeff: negative index");
    }
    int total = req.m + req.n + req.p + req.q;
    if (total > kCoeffDegreeCap) {
        throw Overflow("coeff: m+n+p+q exceeds the degree cap");
    }
    const Lattice& lat = sp.lattice();
    double nu = sp.nu();
    double dmin = lat.shell_min_distance(), dmax = lat.shell_max_distance();

    ShellSumOptions opt{req.eps, coeff_min_shells(lat, nu, total), req.shell_cap};
    auto term = [&](const LatticePoint& pt) {
        cplx g = pt.value;
        return sp.chi().evaluate(pt) * ipow(g, req.p) * ipow(std::conj(g), req.q) *
               guarded_exp(-(nu / 2.0) * std::norm(g)) *
               hermite_eval(nu, req.m, req.n, g);
    };
    auto majorant = [&](int k) {
        double r_lo = k * dmin, r_hi = k * dmax;
        return 8.0 * k * std::pow(r_hi, req.p + req.q) *
               hermite_abs_bound(nu, req.m, req.n, r_hi) *
               std::exp(-(nu / 2.0) * r_lo * r_lo);
    };
    return sum_over_shells(lat, term, majorant, opt);
}

std::vector<SumResult> coeff_block(const ThetaFockSpace& sp, int M, int N,
                                   double eps) {
    if (M < 0 || N < 0) throw std::invalid_argument("coeff_block: negative extent");
    if (M + N > kCoeffDegreeCap) {
        throw Overflow("coeff_block: M+N exceeds the degree cap");
    }
    const Lattice& lat = sp.lattice();
    double nu = sp.nu();
    double dmin = lat.shell_min_distance(), dmax = lat.shell_max_distance();
    std::size_t count = static_cast<std::size_t>(M + 1) * (N + 1);

    std::vector<KahanSum> sums(count);
    std::vector<double> masses(count, 0.0);
    int min_shells = coeff_min_shells(lat, nu, M + N);
    int quiet = 0;
    int k = 0;
    for (;; ++k) {
        if (k > kDefaultShellCap) {
            throw NoConvergence("coeff_block exceeded the shell cap");
        }
        double shell_mass = 0.0;
        double max_partial = 0.0;
        for (const LatticePoint& pt : lat.shell(k)) {
            cplx weight = sp.chi().evaluate(pt) *
                          guarded_exp(-(nu / 2.0) * std::norm(pt.value));
            HermiteTable table(nu, M, N, pt.value);
            for (int m = 0; m <= M; ++m) {
                for (int n = 0; n <= N; ++n) {
                    std::size_t idx = static_cast<std::size_t>(m) * (N + 1) + n;
                    cplx t = weight * table.at(m, n);
                    sums[idx].add(t);
                    shell_mass += std::abs(t);
                    masses[idx] += std::abs(t);
                }
            }
        }
        for (const auto& s : sums) {
            max_partial = std::max(max_partial, std::abs(s.value()));
        }
        quiet = (shell_mass < eps * std::max(1e-300, max_partial)) ? quiet + 1 : 0;
        if (k >= min_shells && quiet >= 3) break;
    }

    // block-level tail: majorant of the highest-degree entry
    double tail = 0.0;
    for (int j = k + 1; j < k + 2000; ++j) {
        double r_lo = j * dmin, r_hi = j * dmax;
        double mj = 8.0 * j * hermite_abs_bound(nu, M, N, r_hi) *
                    std::exp(-(nu / 2.0) * r_lo * r_lo);
        tail += mj;
        if (mj < 1e-300) break;
    }

    std::vector<SumResult> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = SumResult{sums[i].value(), tail, k, masses[i]};
    }
    return out;
}

ParityReport parity_report(const ThetaFockSpace& sp, int degree) {
    if (!sp.chi().is_real()) {
        throw NotRealCharacter("parity_report requires a real-valued pseudo-character");
    }
    // even-parity magnitudes per total degree, up to degree+1, for scales
    std::vector<double> even_max(static_cast<std::size_t>(degree) + 2, 0.0);
    double max_even = 0.0;
    for (int total = 0; total <= degree + 1; total += 2) {
        for (int m = 0; m <= total; ++m)
            for (int n = 0; n + m <= total; ++n)
                for (int p = 0; p + n + m <= total; ++p) {
                    int q = total - m - n - p;
                    double mag = std::abs(coeff(sp, {m, n, p, q}).value);
                    even_max[total] = std::max(even_max[total], mag);
                    max_even = std::max(max_even, mag);
                }
    }

    ParityReport report;
    report.max_even_magnitude = max_even;
    report.worst_scale_ratio = 0.0;
    report.worst_mass_ratio = 0.0;
    for (int total = 1; total <= degree; total += 2) {
        for (int m = 0; m <= total; ++m)
            for (int n = 0; n + m <= total; ++n)
                for (int p = 0; p + n + m <= total; ++p) {
                    int q = total - m - n - p;
                    SumResult r = coeff(sp, {m, n, p, q});
                    ParityRow row;
                    row.m = m; row.n = n; row.p = p; row.q = q;
                    row.magnitude = std::abs(r.value);
                    row.mass = r.abs_mass;
                    row.mass_ratio = row.magnitude / std::max(1e-300, row.mass);
                    double scale = std::max(total > 0 ? even_max[total - 1] : 0.0,
                                            even_max[total + 1]);
                    row.even_scale = std::max(1.0, scale);
                    row.vanishes = row.magnitude < 1e-10 * row.even_scale;
                    report.worst_scale_ratio =
                        std::max(report.worst_scale_ratio, row.magnitude / row.even_scale);
                    report.worst_mass_ratio =
                        std::max(report.worst_mass_ratio, row.mass_ratio);
                    report.rows.push_back(row);
                }
    }
    return report;
}

double conj_symmetry_residual(const ThetaFockSpace& sp, int m, int n, int p,
                              int q) {
    cplx a = coeff(sp, {m, n, p, q}).value;
    cplx b = coeff(sp, {n, m, q, p}).value;
    double sign = ((m + n + p + q) % 2) ? -1.0 : 1.0;
    return std::abs(std::conj(a) - sign * b);
}

double recurrence_residuals(const ThetaFockSpace& sp, int degree) {
    // memoized coefficients keyed by packed indices
    std::unordered_map<std::uint32_t, cplx> cache;
    auto get = [&](int m, int n, int p, int q) {
        std::uint32_t key = (static_cast<std::uint32_t>(m) << 24) |
                            (static_cast<std::uint32_t>(n) << 16) |
                            (static_cast<std::uint32_t>(p) << 8) |
                            static_cast<std::uint32_t>(q);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        cplx v = coeff(sp, {m, n, p, q}).value;
        cache.emplace(key, v);
        return v;
    };

    double nu = sp.nu();
    double worst = 0.0;
    for (int total = 0; total <= degree; ++total) {
        for (int m = 0; m <= total; ++m)
            for (int n = 0; n + m <= total; ++n)
                for (int p = 0; p + n + m <= total; ++p) {
                    int q = total - m - n - p;
                    cplx lhs_a = nu * get(m, n, p + 1, q);
                    cplx rhs_a = get(m + 1, n, p, q);
                    if (n > 0) rhs_a += nu * static_cast<double>(n) * get(m, n - 1, p, q);
                    worst = std::max(worst, std::abs(lhs_a - rhs_a) /
                                                std::max(1.0, std::abs(lhs_a)));

                    cplx lhs_b = nu * get(m, n, p, q + 1);
                    cplx rhs_b = get(m, n + 1, p, q);
                    if (m > 0) rhs_b += nu * static_cast<double>(m) * get(m - 1, n, p, q);
                    worst = std::max(worst, std::abs(lhs_b - rhs_b) /
                                                std::max(1.0, std::abs(lhs_b)));
                }
    }
    return worst;
}

ThetaFockSpace scaled_space(const ThetaFockSpace& sp, cplx lambda) {
    if (lambda == cplx(0.0)) throw std::invalid_argument("scaled_space: lambda must be nonzero");
    const Lattice& lat = sp.lattice();
    // Im(lambda w1 conj(lambda w2)) = |lambda|^2 Im(w1 conj(w2)) > 0, so
    // the generators keep their order under normalization.
    Lattice scaled(lambda * lat.omega1(), lambda * lat.omega2());
    double nu = sp.nu() / std::norm(lambda);
    return ThetaFockSpace(PseudoCharacter::from_generators(
        scaled, nu, sp.chi().u1(), sp.chi().u2()));
}

double scaling_residual(const ThetaFockSpace& sp, cplx lambda, int m, int n,
                        int p, int q) {
    ThetaFockSpace scaled = scaled_space(sp, lambda);
    cplx a_base = coeff(sp, {m, n, p, q}).value;
    cplx a_scaled = coeff(scaled, {m, n, p, q}).value;
    cplx expected = cpow_int(lambda, p - n) * cpow_int(std::conj(lambda), q - m) * a_base;
    return std::abs(a_scaled - expected) / std::max(1.0, std::abs(a_base));
}

double gaussian_char_sum(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("gaussian_char_sum: t must be positive");
    double c = t * M_PI / 2.0;
    KahanSum sum;
    int quiet = 0;
    for (int k = 0; k < 100000; ++k) {
        double shell_mass = 0.0;
        // shell of Z+iZ: max(|m|,|n|) = k, chi_W(m,n) = (-1)^(m+n+mn)
        auto add = [&](long long m, long long n) {
            double e = std::exp(-c * static_cast<double>(m * m + n * n));
            bool neg = ((m & 1) || (n & 1));
            sum.add(neg ? -e : e);
            shell_mass += e;
        };
        if (k == 0) {
            add(0, 0);
        } else {
            for (long long m = -k; m <= k; ++m) {
                if (m == -k || m == k) {
                    for (long long n = -k; n <= k; ++n) add(m, n);
                } else {
                    add(m, -k);
                    add(m, k);
                }
            }
        }
        quiet = (shell_mass < 1e-17 * std::max(1e-300, std::abs(sum.value()))) ? quiet + 1 : 0;
        if (k >= 3 && quiet >= 3) break;
    }
    return sum.value().real();
}

} // namespace thetafock
