#include "sphvar/probe.hpp"

#include "sphvar/cutoff.hpp"
#include "sphvar/error.hpp"
#include "sphvar/fft.hpp"
#include "sphvar/norms.hpp"
#include "sphvar/parallel.hpp"
#include "sphvar/quadrature.hpp"
#include "sphvar/simd.hpp"
#include "sphvar/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sphvar {

namespace {

double radius_of(std::uint32_t s, double dk) { return dk * std::sqrt(static_cast<double>(s)); }

} // namespace

std::vector<cplx> probe_trial(const GridSpec& spec, int j, int index, std::uint64_t seed, std::string* name) {
    spec.validate();
    const std::size_t N = spec.total();
    const double dk = frequency_step(spec);
    auto idx = radial_index(spec);
    std::vector<cplx> F(N);
    static const double radii[] = {1.0, 1.5, 2.0, 3.0};
    if (index < 4) {
        const double R = radii[index];
        auto table = radial_table(spec, [&](double rho) { return beta(j, rho) * sphere_multiplier(spec.d, rho, R); });
        for (std::size_t i = 0; i < N; ++i) F[i] = table[(*idx)[i]];
        if (name) *name = "shell R=" + std::to_string(R).substr(0, 3);
        return F;
    }
    if (index == 4) {
        const double center = std::ldexp(1.0, j - 1);
        const double wide = std::ldexp(1.0, j) * 0.125;
        const double narrow = std::sqrt(std::ldexp(1.0, j));
        GridFunction shape = GridFunction::zeros(spec, Domain::Frequency);
        parallel_for(N, [&](std::size_t begin, std::size_t end, int) {
            int m[4];
            for (std::size_t i = begin; i < end; ++i) {
                shape.unravel(i, m);
                double perp = 0.0, along = 0.0;
                for (int a = 0; a < spec.d; ++a) {
                    double xi = dk * signed_wavenumber(m[a], spec.n);
                    if (a == spec.d - 1) along = xi - center;
                    else perp += xi * xi;
                }
                double g = std::exp(-0.5 * perp / (narrow * narrow) - 0.5 * along * along / (wide * wide));
                F[i] = g * beta(j, radius_of((*idx)[i], dk));
            }
        });
        if (name) *name = "knapp packet";
        return F;
    }
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(j) * 101ULL + static_cast<std::uint64_t>(index));
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto table = radial_table(spec, [&](double rho) { return beta(j, rho); });
    for (std::size_t i = 0; i < N; ++i) {
        double a = gauss(rng), b = gauss(rng);
        F[i] = cplx(a, b) * table[(*idx)[i]];
    }
    if (name) *name = "noise " + std::to_string(index - 4);
    return F;
}

double probe_ratio(const GridSpec& spec, const std::vector<cplx>& spectrum, int j, double p, double q, double r,
                   TimeOperator op, const std::vector<double>& times) {
    if (!(p >= 1.0) || !(q >= 1.0) || !(r >= 1.0)) fail(ErrorCode::InvalidExponent, "exponents must be >= 1");
    if (spectrum.size() != spec.total()) fail(ErrorCode::ShapeMismatch, "spectrum size does not match grid");
    const std::size_t N = spec.total();
    const double cell = spec.cell_volume();
    auto idx = radial_index(spec);
    const auto w = trapezoid_weights(times);

    double energy = 0.0;
    for (const auto& z : spectrum) energy += std::norm(z);
    if (energy == 0.0) fail(ErrorCode::DegenerateInput, "probe input is identically zero");

    double fnorm;
    if (p == 2.0) {
        fnorm = std::sqrt(cell * energy);
    } else {
        std::vector<cplx> f = spectrum;
        idft_inplace(spec, f);
        fnorm = lp_norm(f.data(), N, cell, p);
    }

    auto mult = [&](double t) {
        return radial_table(spec, [&](double rho) { return beta(j, rho) * space_time_multiplier(spec.d, op, t, rho); });
    };

    if (q == 2.0 && r == 2.0) {
        std::vector<double> W(max_radial_index(spec) + 1, 0.0);
        for (std::size_t i = 0; i < times.size(); ++i) {
            auto m = mult(times[i]);
            for (std::size_t s = 0; s < W.size(); ++s) W[s] += w[i] * m[s] * m[s];
        }
        std::vector<double> part(static_cast<std::size_t>(thread_count()), 0.0);
        parallel_for(N, [&](std::size_t begin, std::size_t end, int worker) {
            double acc = 0.0;
            for (std::size_t k = begin; k < end; ++k) acc += std::norm(spectrum[k]) * W[(*idx)[k]];
            part[static_cast<std::size_t>(worker)] = acc;
        });
        double total = 0.0;
        for (double v : part) total += v;
        return std::sqrt(cell * total) / fnorm;
    }

    std::vector<double> acc(N, 0.0);
    std::vector<cplx> slice(N);
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::copy(spectrum.begin(), spectrum.end(), slice.begin());
        apply_radial_table(spec, slice, mult(times[i]));
        idft_inplace(spec, slice);
        if (r == 2.0) {
            simd::accumulate_weighted_abs2(acc.data(), slice.data(), w[i], N);
        } else if (std::isinf(r)) {
            for (std::size_t x = 0; x < N; ++x) acc[x] = std::max(acc[x], std::abs(slice[x]));
        } else {
            for (std::size_t x = 0; x < N; ++x) acc[x] += w[i] * std::pow(std::abs(slice[x]), r);
        }
    }
    if (!std::isinf(r))
        for (auto& v : acc) v = std::pow(v, 1.0 / r);
    return lp_norm_real(acc.data(), N, cell, q) / fnorm;
}

double radial_shell_ratio(int j, double R, double q, double r) {
    using std::numbers::pi;
    if (j < 1) fail(ErrorCode::InvalidInput, "radial route needs j >= 1");
    if (!(R > 0.0)) fail(ErrorCode::InvalidInput, "shell radius must be positive");
    if (!(q >= 1.0) || !(r >= 1.0) || std::isinf(q) || std::isinf(r))
        fail(ErrorCode::InvalidExponent, "radial route needs finite q, r >= 1");
    auto fhat = [&](double rho) { return beta(j, rho) * sphere_multiplier(3, rho, R); };

    const double ds = std::ldexp(1.0, -j) / 8.0;
    const double period = 64.0;
    const int N = static_cast<int>(std::lround(period / ds));
    const double drho = 2.0 * pi / period;
    std::vector<std::complex<double>> G(static_cast<std::size_t>(N));
    for (int m = 0; m < N; ++m) G[static_cast<std::size_t>(m)] = fhat(m * drho) * drho;
    fft::transform(G.data(), {N}, -1);
    auto g = [&](long k) { return G[static_cast<std::size_t>(((k % N) + N) % N)].real(); };

    const long t0 = static_cast<long>(std::ceil(kChiSupportLow / ds));
    const long t1 = static_cast<long>(std::floor(kChiSupportHigh / ds));
    const long smax = static_cast<long>(std::ceil((kChiSupportHigh + R + 1.0) / ds));
    std::vector<double> weight;
    for (long k = t0; k <= t1; ++k) weight.push_back(std::pow(chi(k * ds), r) * ds);

    std::vector<double> shell(static_cast<std::size_t>(smax));
    parallel_for(static_cast<std::size_t>(smax), [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t i = begin; i < end; ++i) {
            const long k = static_cast<long>(i) + 1;
            const double s = k * ds;
            double acc = 0.0;
            for (long m = t0; m <= t1; ++m) {
                double a = (g(k - m) - g(k + m)) / (4.0 * pi * pi * (m * ds) * s);
                acc += weight[static_cast<std::size_t>(m - t0)] * simd::increment_power(a * a, r);
            }
            shell[i] = 4.0 * pi * s * s * std::pow(acc, q / r) * ds;
        }
    });
    double num = std::pow(pairwise_sum(shell), 1.0 / q);
    // ||f||_2^2 = (2 pi)^-3 4 pi int f^2 rho^2 d rho
    double e = integrate([&](double rho) { return fhat(rho) * fhat(rho) * rho * rho; }, std::ldexp(1.0, j - 2),
                         std::ldexp(1.0, j), 16, std::max(4, static_cast<int>(std::ldexp(R, j) / 4.0)));
    double den = std::sqrt(4.0 * pi * e / (8.0 * pi * pi * pi));
    return num / den;
}

ProbeReport operator_norm_probe(const ProbeConfig& c) {
    if (c.jmin < 1 || c.jmax < c.jmin) fail(ErrorCode::InvalidInput, "probe needs 1 <= jmin <= jmax");
    if (c.trials < 1) fail(ErrorCode::InvalidInput, "probe needs at least one trial");
    ProbeReport report;
    report.config = c;
    std::vector<int> js;
    std::vector<double> ratios;
    for (int j = c.jmin; j <= c.jmax; ++j) {
        ProbeLevel level;
        level.j = j;
        level.spec = GridSpec{c.d, std::max(16, c.grid_factor << j), c.L};
        level.spec.validate();
        level.time_samples = std::max(33, (c.time_factor << j) + 1);
        auto times = uniform_times(kChiSupportLow, kChiSupportHigh, level.time_samples);
        for (int k = 0; k < c.trials; ++k) {
            ProbeTrial trial;
            auto F = probe_trial(level.spec, j, k, c.seed, &trial.name);
            trial.ratio = probe_ratio(level.spec, F, j, c.p, c.q, c.r, c.op, times);
            if (trial.ratio > level.ratio) {
                level.ratio = trial.ratio;
                level.best_trial = trial.name;
            }
            level.trials.push_back(trial);
        }
        js.push_back(j);
        ratios.push_back(level.ratio);
        report.levels.push_back(std::move(level));
    }
    if (js.size() >= 2) report.fit = fit_log2_slope(js, ratios);
    return report;
}

} // namespace sphvar
