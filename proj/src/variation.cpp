#include "sphvar/variation.hpp"

#include "sphvar/cutoff.hpp"
#include "sphvar/error.hpp"
#include "sphvar/fft.hpp"
#include "sphvar/simd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sphvar {

namespace {

void check_r(double r) {
    if (!(r >= 1.0)) fail(ErrorCode::InvalidExponent, "variation exponent r must be >= 1");
}

double d2_between(const std::complex<double>& a, const std::complex<double>& b) {
    double dx = a.real() - b.real();
    double dy = a.imag() - b.imag();
    return dx * dx + dy * dy;
}

// Dynamic program over explicit coordinate arrays, 1 < r < inf.
double dp_sum(const std::vector<double>& re, const std::vector<double>& im, double r) {
    const std::size_t n = re.size();
    std::vector<double> best(n, 0.0), scratch(n);
    double top = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        best[j] = simd::variation_relax(best.data(), re.data(), im.data(), j, re[j], im[j], r, scratch.data());
        top = std::max(top, best[j]);
    }
    return top;
}

} // namespace

void SampledPath::validate() const {
    if (values.empty()) fail(ErrorCode::InvalidInput, "sampled path must have at least one sample");
    if (times.size() != values.size()) fail(ErrorCode::InvalidInput, "times and values differ in length");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1])) fail(ErrorCode::InvalidInput, "sample times must increase strictly");
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail(ErrorCode::InvalidInput, "sampled path has non-finite values");
}

SampledPath SampledPath::from_real(std::vector<double> times, const std::vector<double>& values) {
    SampledPath p;
    p.times = std::move(times);
    p.values.assign(values.begin(), values.end());
    return p;
}

SampledPath SampledPath::indexed(const std::vector<std::complex<double>>& values) {
    SampledPath p;
    p.values = values;
    p.times.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) p.times[i] = static_cast<double>(i);
    return p;
}

double variation_exact(const SampledPath& path, double r) {
    check_r(r);
    path.validate();
    const auto& a = path.values;
    const std::size_t n = a.size();
    if (n < 2) return 0.0;
    if (std::isinf(r)) {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) m = std::max(m, d2_between(a[j], a[i]));
        return std::sqrt(m);
    }
    // r = 1 also goes through the DP: with rounding a subsequence can beat
    // the full sum by an ulp, and the brute force would see it.
    std::vector<double> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = a[i].real();
        im[i] = a[i].imag();
    }
    return std::pow(dp_sum(re, im, r), 1.0 / r);
}

double variation_bruteforce(const SampledPath& path, double r) {
    check_r(r);
    path.validate();
    const auto& a = path.values;
    const std::size_t n = a.size();
    if (n > 16) fail(ErrorCode::TooLarge, "brute-force variation limited to 16 samples");
    if (n < 2) return 0.0;
    const bool inf = std::isinf(r);
    double best = 0.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        double acc = 0.0;
        int prev = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            if (prev >= 0) {
                double d2 = d2_between(a[i], a[static_cast<std::size_t>(prev)]);
                if (inf) acc = std::max(acc, d2);
                else acc += simd::increment_power(d2, r);
            }
            prev = static_cast<int>(i);
        }
        best = std::max(best, acc);
    }
    return inf ? std::sqrt(best) : std::pow(best, 1.0 / r);
}

double variation_norm(const SampledPath& path, double r) {
    double sup = 0.0;
    for (const auto& v : path.values) sup = std::max(sup, std::abs(v));
    return sup + variation_exact(path, r);
}

std::vector<std::size_t> turning_points(const double* values, std::size_t n) {
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < n; ++i)
        if (distinct.empty() || values[i] != values[distinct.back()]) distinct.push_back(i);
    if (distinct.size() <= 2) return distinct;
    std::vector<std::size_t> out{distinct.front()};
    for (std::size_t k = 1; k + 1 < distinct.size(); ++k) {
        double prev = values[distinct[k - 1]], cur = values[distinct[k]], next = values[distinct[k + 1]];
        if ((cur > prev) != (next > cur)) out.push_back(distinct[k]);
    }
    out.push_back(distinct.back());
    return out;
}

double variation_real(const double* values, std::size_t n, double r) {
    check_r(r);
    if (n < 2) return 0.0;
    auto keep = turning_points(values, n);
    const std::size_t m = keep.size();
    if (m < 2) return 0.0;
    if (std::isinf(r)) {
        double lo = values[keep[0]], hi = lo;
        for (std::size_t i : keep) {
            lo = std::min(lo, values[i]);
            hi = std::max(hi, values[i]);
        }
        return hi - lo;
    }
    if (r == 1.0) {
        double s = 0.0;
        for (std::size_t k = 1; k < m; ++k) s += std::fabs(values[keep[k]] - values[keep[k - 1]]);
        return s;
    }
    std::vector<double> re(m), im(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) re[k] = values[keep[k]];
    return std::pow(dp_sum(re, im, r), 1.0 / r);
}

double variation_fast(const SampledPath& path, double r) {
    check_r(r);
    path.validate();
    bool real = true;
    for (const auto& v : path.values)
        if (v.imag() != 0.0) {
            real = false;
            break;
        }
    if (!real) return variation_exact(path, r);
    std::vector<double> re(path.size());
    for (std::size_t i = 0; i < re.size(); ++i) re[i] = path.values[i].real();
    return variation_real(re.data(), re.size(), r);
}

std::vector<double> besov_levels(const SampledPath& path, double r) {
    check_r(r);
    path.validate();
    if (path.size() < 2) return {};
    const int K = kBesovSamples;
    const double t0 = path.times.front(), t1 = path.times.back();
    const double dt = (t1 - t0) / (K - 1);
    std::vector<std::complex<double>> u(static_cast<std::size_t>(K));
    std::size_t seg = 0;
    for (int k = 0; k < K; ++k) {
        double t = k == K - 1 ? t1 : t0 + k * dt;
        while (seg + 2 < path.size() && path.times[seg + 1] < t) ++seg;
        double ta = path.times[seg], tb = path.times[seg + 1];
        double s = std::clamp((t - ta) / (tb - ta), 0.0, 1.0);
        u[static_cast<std::size_t>(k)] = (1.0 - s) * path.values[seg] + s * path.values[seg + 1];
    }
    fft::transform(u.data(), {K}, -1);
    const double period = K * dt;
    const double nyquist = std::numbers::pi / dt;
    const int lmax = static_cast<int>(std::floor(std::log2(nyquist))) + 2;
    std::vector<double> out;
    std::vector<std::complex<double>> piece(u.size());
    for (int l = 0; l <= lmax; ++l) {
        for (int k = 0; k < K; ++k) {
            int kk = k < K / 2 ? k : k - K;
            double tau = 2.0 * std::numbers::pi * std::abs(kk) / period;
            piece[static_cast<std::size_t>(k)] = u[static_cast<std::size_t>(k)] * (beta(l, tau) / K);
        }
        fft::transform(piece.data(), {K}, +1);
        double norm;
        if (std::isinf(r)) {
            norm = 0.0;
            for (const auto& z : piece) norm = std::max(norm, std::abs(z));
        } else {
            double s = 0.0;
            for (const auto& z : piece) s += std::pow(std::abs(z), r);
            norm = std::pow(dt * s, 1.0 / r);
        }
        double weight = std::isinf(r) ? 1.0 : std::exp2(l / r);
        out.push_back(weight * norm);
    }
    return out;
}

double besov_norm(const SampledPath& path, double r, BesovFlavor flavor) {
    auto levels = besov_levels(path, r);
    double acc = 0.0;
    for (double v : levels) acc = flavor == BesovFlavor::SumOverLevels ? acc + v : std::max(acc, v);
    return acc;
}

SampledPath pool_paths(const std::vector<SampledPath>& paths) {
    SampledPath out;
    for (const auto& p : paths) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!out.times.empty() && p.times[i] <= out.times.back()) continue;
            out.times.push_back(p.times[i]);
            out.values.push_back(p.values[i]);
        }
    }
    return out;
}

LongShort long_short_split(const std::vector<SampledPath>& paths, double r) {
    check_r(r);
    LongShort out;
    if (paths.empty()) return out;
    SampledPath ends;
    for (const auto& p : paths) {
        p.validate();
        ends.times.push_back(p.times.front());
        ends.values.push_back(p.values.front());
    }
    ends.times.push_back(paths.back().times.back());
    ends.values.push_back(paths.back().values.back());
    out.long_part = variation_fast(ends, r);
    double acc = 0.0;
    for (const auto& p : paths) {
        double v = variation_fast(p, r);
        acc = std::isinf(r) ? std::max(acc, v) : acc + std::pow(v, r);
    }
    out.short_part = std::isinf(r) ? acc : std::pow(acc, 1.0 / r);
    return out;
}

} // namespace sphvar
