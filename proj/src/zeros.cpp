#include "thetafock/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thetafock/elliptic.hpp"
#include "thetafock/errors.hpp"

namespace thetafock {

namespace {

constexpr double kEps = 1e-12;        // lattice-sum tolerance for phi evaluations
constexpr int kProbeGrid = 12;        // probe grid per axis for scales
constexpr double kPathSafety = 1e-6;  // min |phi| on path, relative to scale
constexpr int kMaxShiftRetries = 8;

struct ProbeStats {
    double median_abs = 0.0;
    double max_abs = 0.0;
    double max_mass = 0.0;
};

ProbeStats probe_phi(const ThetaFockSpace& sp, cplx w, cplx u) {
    const Lattice& lat = sp.lattice();
    std::vector<double> mags;
    mags.reserve(kProbeGrid * kProbeGrid);
    ProbeStats st;
    for (int i = 0; i < kProbeGrid; ++i) {
        for (int j = 0; j < kProbeGrid; ++j) {
            cplx z = u + ((i + 0.5) / kProbeGrid) * lat.omega1() +
                     ((j + 0.5) / kProbeGrid) * lat.omega2();
            SumResult r = kernel_eval(sp, z, w, kEps);
            mags.push_back(std::abs(r.value));
            st.max_abs = std::max(st.max_abs, mags.back());
            st.max_mass = std::max(st.max_mass, r.abs_mass);
        }
    }
    std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
    st.median_abs = mags[mags.size() / 2];
    return st;
}

cplx default_shift(const Lattice& lat) {
    // fixed, deliberately non-symmetric displacement
    return -0.28711 * lat.omega1() - 0.19137 * lat.omega2();
}

} // namespace

ZeroCountResult zero_count(const ThetaFockSpace& sp, cplx w, int nodes,
                           std::optional<cplx> shift) {
    const Lattice& lat = sp.lattice();
    const QuadRule& rule = gauss_legendre_01(nodes);
    UniformStream jitter(0xC0417u);

    cplx u = shift.value_or(default_shift(lat));
    for (int attempt = 0; attempt < kMaxShiftRetries; ++attempt) {
        ProbeStats st = probe_phi(sp, w, u);
        if (st.max_abs < 1e-13 * std::max(1e-300, st.max_mass)) {
            throw IdenticallyZero("phi_w vanishes on the probe grid: candidate analytic-set member");
        }

        // counterclockwise boundary: omega2 edge first under the
        // orientation Im(omega1 conj(omega2)) > 0
        const cplx c0 = u;
        const cplx c1 = u + lat.omega2();
        const cplx c2 = u + lat.omega2() + lat.omega1();
        const cplx c3 = u + lat.omega1();
        const cplx corners[5] = {c0, c1, c2, c3, c0};

        KahanSum integral;
        double path_min = std::numeric_limits<double>::infinity();
        for (int edge = 0; edge < 4; ++edge) {
            cplx d = corners[edge + 1] - corners[edge];
            for (int i = 0; i < nodes; ++i) {
                cplx z = corners[edge] + rule.nodes[i] * d;
                cplx phi = kernel_eval(sp, z, w, kEps).value;
                path_min = std::min(path_min, std::abs(phi));
                if (std::abs(phi) < kPathSafety * st.median_abs) break;
                cplx dphi = kernel_eval_dz(sp, z, w, kEps).value;
                integral.add(rule.weights[i] * d * dphi / phi);
            }
        }

        if (path_min >= kPathSafety * st.median_abs) {
            cplx winding = integral.value() / cplx(0.0, 2.0 * M_PI);
            long count = std::lround(winding.real());
            if (count >= 0 && std::abs(winding - cplx(static_cast<double>(count))) < 0.05) {
                return ZeroCountResult{static_cast<int>(count), winding, u, path_min};
            }
        }
        // path unusable: re-shift within a quarter cell of the default
        u = default_shift(lat) + jitter.next(0.0, 0.25) * lat.omega1() +
            jitter.next(0.0, 0.25) * lat.omega2();
    }
    throw PathUnstable("zero_count: no stable contour after 8 shifts");
}

ZeroList zero_locate(const ThetaFockSpace& sp, cplx w, int grid) {
    if (grid < 4) throw std::invalid_argument("zero_locate: grid must be >= 4");
    const Lattice& lat = sp.lattice();
    cplx u = default_shift(lat);
    FundamentalCell cell(lat, u);

    ProbeStats st = probe_phi(sp, w, u);
    if (st.max_abs < 1e-13 * std::max(1e-300, st.max_mass)) {
        throw IdenticallyZero("phi_w vanishes on the probe grid: candidate analytic-set member");
    }

    // sample |phi| on a one-ring-extended grid. |phi| is not
    // Gamma-periodic (translation multiplies it by an exponential
    // automorphy factor), so neighbors across the cell seam must be real
    // samples, not wrapped ones.
    int ext = grid + 2;
    std::vector<double> mag(static_cast<std::size_t>(ext) * ext);
    auto at = [&](int i, int j) -> double& {
        return mag[static_cast<std::size_t>(i + 1) * ext + (j + 1)];
    };
    for (int i = -1; i <= grid; ++i)
        for (int j = -1; j <= grid; ++j)
            at(i, j) = std::abs(
                kernel_eval(sp, cell.map((i + 0.5) / grid, (j + 0.5) / grid), w, kEps)
                    .value);

    // interior local minima as Newton seeds, plus the smallest samples
    // outright (cheap extra seeds; duplicates are merged later)
    std::vector<cplx> seeds;
    std::vector<std::pair<double, cplx>> ranked;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            double v = at(i, j);
            cplx z = cell.map((i + 0.5) / grid, (j + 0.5) / grid);
            ranked.emplace_back(v, z);
            bool minimal = true;
            for (int di = -1; di <= 1 && minimal; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    if (at(i + di, j + dj) < v) { minimal = false; break; }
                }
            if (minimal) seeds.push_back(z);
        }
    }
    std::partial_sort(ranked.begin(),
                      ranked.begin() + std::min<std::size_t>(ranked.size(),
                                                             4 * sp.dim() + 4),
                      ranked.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < std::min<std::size_t>(ranked.size(), 4 * sp.dim() + 4); ++i)
        seeds.push_back(ranked[i].second);

    double cell_scale = lat.shell_max_distance();
    ZeroList result;
    std::vector<std::pair<double, double>> found; // cell coords of accepted zeros
    for (cplx z : seeds) {
        bool converged = false;
        for (int iter = 0; iter < 50; ++iter) {
            cplx phi = kernel_eval(sp, z, w, kEps).value;
            cplx dphi = kernel_eval_dz(sp, z, w, kEps).value;
            if (dphi == cplx(0.0)) break;
            cplx step = -phi / dphi;
            z += step;
            if (std::abs(step) < 1e-12 * cell_scale) { converged = true; break; }
        }
        double final_abs = converged ? std::abs(kernel_eval(sp, z, w, kEps).value)
                                     : std::numeric_limits<double>::infinity();
        if (!converged || final_abs > 1e-8 * st.median_abs) {
            ++result.failed_seeds;
            continue;
        }
        auto red = cell.reduce(z);
        // torus coordinates for deduplication modulo Gamma
        cplx rel = red.z0 - u;
        cplx w1 = lat.omega1(), w2 = lat.omega2();
        double det = w1.real() * w2.imag() - w1.imag() * w2.real();
        double s = (rel.real() * w2.imag() - rel.imag() * w2.real()) / det;
        double t = (w1.real() * rel.imag() - w1.imag() * rel.real()) / det;
        bool duplicate = false;
        for (auto [s0, t0] : found) {
            double ds = std::abs(s - s0), dt = std::abs(t - t0);
            ds = std::min(ds, 1.0 - ds);
            dt = std::min(dt, 1.0 - dt);
            if (std::abs(ds * w1 + dt * w2) < 1e-6 * cell_scale) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        found.emplace_back(s, t);
        result.zeros.push_back(LocatedZero{red.z0, final_abs});
    }
    std::sort(result.zeros.begin(), result.zeros.end(),
              [](const LocatedZero& a, const LocatedZero& b) {
                  if (a.location.real() != b.location.real())
                      return a.location.real() < b.location.real();
                  return a.location.imag() < b.location.imag();
              });
    return result;
}

XiProbeResult xi_probe(const ThetaFockSpace& sp, int wgrid, int zgrid) {
    if (wgrid < 1 || zgrid < 1) throw std::invalid_argument("xi_probe: grids must be positive");
    const Lattice& lat = sp.lattice();
    FundamentalCell cell(lat);

    auto max_abs_over_z = [&](cplx w, int g) {
        double best = 0.0;
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                best = std::max(best,
                                std::abs(kernel_eval(sp, cell.map((i + 0.5) / g, (j + 0.5) / g),
                                                     w, kEps)
                                             .value));
        return best;
    };

    std::vector<std::pair<cplx, double>> peaks;
    peaks.reserve(static_cast<std::size_t>(wgrid) * wgrid);
    for (int i = 0; i < wgrid; ++i)
        for (int j = 0; j < wgrid; ++j) {
            cplx w = cell.map((i + 0.5) / wgrid, (j + 0.5) / wgrid);
            peaks.emplace_back(w, max_abs_over_z(w, zgrid));
        }

    std::vector<double> mags;
    mags.reserve(peaks.size());
    for (const auto& [w, m] : peaks) mags.push_back(m);
    std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
    double scale = mags[mags.size() / 2];

    XiProbeResult result;
    result.low_confidence = (zgrid < 4 || wgrid < 4);
    result.kernel_scale = scale;
    for (const auto& [w0, m0] : peaks) {
        if (m0 >= 1e-8 * scale) continue;
        // local refinement of the max-abs objective around the candidate
        cplx w = w0;
        double span = 1.0 / wgrid;
        double val = m0;
        for (int round = 0; round < 3; ++round) {
            for (int i = -2; i <= 2; ++i)
                for (int j = -2; j <= 2; ++j) {
                    cplx cand = w + (i * span / 4) * lat.omega1() +
                                (j * span / 4) * lat.omega2();
                    double v = max_abs_over_z(cand, zgrid);
                    if (v < val) { val = v; w = cand; }
                }
            span /= 4;
        }
        result.candidates.push_back(w);
    }
    return result;
}

std::vector<std::pair<cplx, cplx>> sigma_factor_default_samples(
    const ThetaFockSpace& sp, int count) {
    FundamentalCell cell(sp.lattice());
    UniformStream rng(0x51f3a7u);
    std::vector<std::pair<cplx, cplx>> samples;
    samples.reserve(count);
    for (int i = 0; i < count; ++i) {
        // interior coordinates keep sigma away from its lattice zeros
        cplx z = cell.map(rng.next(0.15, 0.85), rng.next(0.15, 0.85));
        cplx w = cell.map(rng.next(0.15, 0.85), rng.next(0.15, 0.85));
        samples.emplace_back(z, w);
    }
    return samples;
}

double sigma_factor_residual(const ThetaFockSpace& sp,
                             const std::vector<std::pair<cplx, cplx>>& samples) {
    if (sp.dim() != 1) {
        throw NotOneDimensional("sigma factorization holds only for the one-dimensional (von Neumann) case");
    }
    if (!(sp.chi().is_real() && sp.chi().u1() == cplx(-1.0) &&
          sp.chi().u2() == cplx(-1.0))) {
        throw std::invalid_argument("sigma_factor_residual requires the Weierstrass character");
    }
    if (samples.size() < 2) throw std::invalid_argument("sigma_factor_residual: need at least two samples");

    WeierstrassData wd(sp.lattice());
    MuInvariant mu = mu_invariant(wd, sp.nu());

    // precompute sigma~ magnitudes for the pole filter
    std::vector<cplx> sz(samples.size()), sw(samples.size());
    double sigma_scale = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        sz[i] = modified_sigma(wd, mu, samples[i].first);
        sw[i] = modified_sigma(wd, mu, samples[i].second);
        sigma_scale = std::max({sigma_scale, std::abs(sz[i]), std::abs(sw[i])});
    }

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, mean = 0.0;
    int used = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (std::abs(sz[i]) <= 1e-3 * sigma_scale || std::abs(sw[i]) <= 1e-3 * sigma_scale) {
            continue; // too close to a zero of sigma~: the ratio is unusable
        }
        cplx K = kernel_eval(sp, samples[i].first, samples[i].second, kEps).value;
        double r = std::abs(K / (sz[i] * std::conj(sw[i])));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        mean += r;
        ++used;
    }
    if (used < 2) throw std::invalid_argument("sigma_factor_residual: all samples rejected by the pole filter");
    mean /= used;
    return (hi - lo) / mean;
}

} // namespace thetafock
