#include "sphvar/operators.hpp"

#include "sphvar/cutoff.hpp"
#include "sphvar/error.hpp"
#include "sphvar/parallel.hpp"
#include "sphvar/quadrature.hpp"
#include "sphvar/special.hpp"
#include "sphvar/variation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace sphvar {

double space_time_multiplier(int d, TimeOperator op, double t, double rho) {
    if (op == TimeOperator::Average) return chi(t) * sphere_multiplier(d, rho, t);
    return chi_derivative(t) * sphere_multiplier(d, rho, t) + chi(t) * rho * sphere_multiplier_derivative(d, t * rho);
}

namespace {

bool is_real(const GridFunction& f) {
    for (const auto& z : f.values())
        if (z.imag() != 0.0) return false;
    return true;
}

void check_window(const std::vector<double>& times) {
    for (double t : times)
        if (!(t >= kChiSupportLow && t <= kChiSupportHigh))
            fail(ErrorCode::OutOfDomain, "time samples must lie in [1/2, 4]");
}

// One forward transform of f, then one multiplier application and inverse
// transform per time sample.
SpaceTimeField field_from_multiplier(const GridFunction& f, const std::vector<double>& times,
                                     const std::function<double(double, double)>& mult) {
    if (f.domain() != Domain::Space) fail(ErrorCode::ShapeMismatch, "expected a Space-domain function");
    const GridSpec& spec = f.spec();
    const std::size_t N = spec.total();
    const bool real = is_real(f);
    std::vector<cplx> spectrum = f.values();
    dft_inplace(spec, spectrum);
    std::vector<cplx> out(times.size() * N), slice(N);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        std::copy(spectrum.begin(), spectrum.end(), slice.begin());
        apply_radial_table(spec, slice, radial_table(spec, [&](double rho) { return mult(t, rho); }));
        idft_inplace(spec, slice);
        cplx* dst = out.data() + i * N;
        if (real)
            for (std::size_t x = 0; x < N; ++x) dst[x] = slice[x].real();
        else
            std::copy(slice.begin(), slice.end(), dst);
    }
    return SpaceTimeField(spec, times, std::move(out));
}

} // namespace

SpaceTimeField calA(const GridFunction& f, const std::vector<double>& times) {
    check_window(times);
    const int d = f.spec().d;
    return field_from_multiplier(f, times, [d](double t, double rho) {
        return space_time_multiplier(d, TimeOperator::Average, t, rho);
    });
}

SpaceTimeField calA_j(const GridFunction& f, int j, const std::vector<double>& times) {
    if (j < 0) fail(ErrorCode::InvalidInput, "Littlewood-Paley index must be >= 0");
    check_window(times);
    const int d = f.spec().d;
    return field_from_multiplier(f, times, [d, j](double t, double rho) {
        return beta(j, rho) * space_time_multiplier(d, TimeOperator::Average, t, rho);
    });
}

SpaceTimeField dt_calA(const GridFunction& f, const std::vector<double>& times) {
    check_window(times);
    const int d = f.spec().d;
    return field_from_multiplier(f, times, [d](double t, double rho) {
        return space_time_multiplier(d, TimeOperator::TimeDerivative, t, rho);
    });
}

SpaceTimeField dt_calA_j(const GridFunction& f, int j, const std::vector<double>& times) {
    if (j < 0) fail(ErrorCode::InvalidInput, "Littlewood-Paley index must be >= 0");
    check_window(times);
    const int d = f.spec().d;
    return field_from_multiplier(f, times, [d, j](double t, double rho) {
        return beta(j, rho) * space_time_multiplier(d, TimeOperator::TimeDerivative, t, rho);
    });
}

SpaceTimeField averages(const GridFunction& f, const std::vector<double>& times) {
    for (double t : times)
        if (!(t > 0.0)) fail(ErrorCode::OutOfDomain, "sphere radius must be positive");
    const int d = f.spec().d;
    return field_from_multiplier(f, times, [d](double t, double rho) { return sphere_multiplier(d, rho, t); });
}

std::vector<double> kernel_K(int d, int j, double t, const std::vector<double>& radii) {
    if (j < 1) fail(ErrorCode::InvalidInput, "kernel profile needs j >= 1");
    if (d < 2 || d > 4) fail(ErrorCode::InvalidInput, "dimension must be 2, 3 or 4");
    const double area = 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
    const double scale = area / std::pow(2.0 * std::numbers::pi, d);
    const double lo = std::ldexp(1.0, j - 2), hi = std::ldexp(1.0, j);
    std::vector<double> out;
    out.reserve(radii.size());
    for (double s : radii) {
        const double x = std::fabs(s);
        int panels = std::max(4, static_cast<int>(std::ceil((t + x) * hi / 4.0)));
        double v = integrate(
            [&](double rho) {
                return sphere_multiplier(d, rho, t) * beta(j, rho) * sphere_multiplier(d, rho, x) *
                       std::pow(rho, d - 1);
            },
            lo, hi, 16, panels);
        out.push_back(scale * v);
    }
    return out;
}

GridFunction local_variation_operator(const GridFunction& f, double r, int M, double a, double b) {
    if (M < 2) fail(ErrorCode::InvalidInput, "need at least two time samples");
    if (!(r >= 1.0)) fail(ErrorCode::InvalidExponent, "variation exponent r must be >= 1");
    if (!(b > a && a > 0.0)) fail(ErrorCode::InvalidInput, "time interval must satisfy 0 < a < b");
    SpaceTimeField F = averages(f, uniform_times(a, b, M));
    const std::size_t N = F.slice_size();
    const bool real = is_real(f);
    std::vector<cplx> out(N);
    parallel_for(N, [&](std::size_t begin, std::size_t end, int) {
        std::vector<double> path(static_cast<std::size_t>(M));
        SampledPath cpath;
        if (!real) cpath.times = F.times();
        for (std::size_t x = begin; x < end; ++x) {
            if (real) {
                for (int i = 0; i < M; ++i) path[static_cast<std::size_t>(i)] = F.values()[i * N + x].real();
                out[x] = variation_real(path.data(), path.size(), r);
            } else {
                cpath.values = F.path(x);
                out[x] = variation_exact(cpath, r);
            }
        }
    });
    return GridFunction(f.spec(), std::move(out));
}

double support_radius(const GridFunction& f) {
    double peak = 0.0;
    for (const auto& z : f.values()) peak = std::max(peak, std::abs(z));
    if (peak == 0.0) return 0.0;
    double radius = 0.0, x[4];
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::abs(f[i]) <= 1e-13 * peak) continue;
        f.point(i, x);
        double s = 0.0;
        for (int a = 0; a < f.spec().d; ++a) s += x[a] * x[a];
        radius = std::max(radius, std::sqrt(s));
    }
    return radius;
}

GlobalVariation global_variation_operator(const GridFunction& f, double r, int kmin, int kmax, int M) {
    if (M < 2) fail(ErrorCode::InvalidInput, "need at least two time samples");
    if (kmax < kmin) fail(ErrorCode::InvalidInput, "empty dyadic range");
    if (!(r >= 1.0)) fail(ErrorCode::InvalidExponent, "variation exponent r must be >= 1");
    if (std::ldexp(1.0, kmax + 1) + support_radius(f) > f.spec().L)
        fail(ErrorCode::OutOfDomain, "largest sphere plus support radius exceeds the box");
    // pooled times: interval k contributes samples 1..M-1 after the shared left endpoint
    std::vector<double> times;
    for (int k = kmin; k <= kmax; ++k) {
        auto tk = uniform_times(std::ldexp(1.0, k), std::ldexp(1.0, k + 1), M);
        times.insert(times.end(), tk.begin() + (k == kmin ? 0 : 1), tk.end());
    }
    SpaceTimeField F = averages(f, times);
    const std::size_t N = F.slice_size();
    const std::size_t K = static_cast<std::size_t>(kmax - kmin + 1);
    const std::size_t step = static_cast<std::size_t>(M - 1);
    std::vector<cplx> lo(N), sh(N), po(N), bd(N);
    parallel_for(N, [&](std::size_t begin, std::size_t end, int) {
        std::vector<SampledPath> pieces(K);
        for (std::size_t k = 0; k < K; ++k)
            pieces[k].times.assign(times.begin() + static_cast<std::ptrdiff_t>(k * step),
                                   times.begin() + static_cast<std::ptrdiff_t>(k * step + step + 1));
        SampledPath all;
        all.times = times;
        for (std::size_t x = begin; x < end; ++x) {
            all.values = F.path(x);
            for (std::size_t k = 0; k < K; ++k)
                pieces[k].values.assign(all.values.begin() + static_cast<std::ptrdiff_t>(k * step),
                                        all.values.begin() + static_cast<std::ptrdiff_t>(k * step + step + 1));
            LongShort ls = long_short_split(pieces, r);
            lo[x] = ls.long_part;
            sh[x] = ls.short_part;
            po[x] = variation_fast(all, r);
            bd[x] = ls.long_part + 2.0 * ls.short_part;
        }
    });
    const GridSpec& s = f.spec();
    return GlobalVariation{GridFunction(s, std::move(lo)), GridFunction(s, std::move(sh)),
                           GridFunction(s, std::move(po)), GridFunction(s, std::move(bd))};
}

std::vector<double> pooled_variation_at(const GridFunction& f, double r, int kmin, int kmax, int M,
                                        const std::vector<std::size_t>& points) {
    if (M < 2) fail(ErrorCode::InvalidInput, "need at least two time samples");
    if (kmax < kmin) fail(ErrorCode::InvalidInput, "empty dyadic range");
    if (!(r >= 1.0)) fail(ErrorCode::InvalidExponent, "variation exponent r must be >= 1");
    if (f.domain() != Domain::Space) fail(ErrorCode::ShapeMismatch, "expected a Space-domain function");
    if (std::ldexp(1.0, kmax + 1) + support_radius(f) > f.spec().L)
        fail(ErrorCode::OutOfDomain, "largest sphere plus support radius exceeds the box");
    for (std::size_t x : points)
        if (x >= f.size()) fail(ErrorCode::InvalidInput, "sample index outside the grid");
    std::vector<double> times;
    for (int k = kmin; k <= kmax; ++k) {
        auto tk = uniform_times(std::ldexp(1.0, k), std::ldexp(1.0, k + 1), M);
        times.insert(times.end(), tk.begin() + (k == kmin ? 0 : 1), tk.end());
    }
    const GridSpec& spec = f.spec();
    const int d = spec.d;
    const bool real = is_real(f);
    const std::size_t P = points.size();
    std::vector<cplx> spectrum = f.values(), slice(spec.total()), paths(times.size() * P);
    dft_inplace(spec, spectrum);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        std::copy(spectrum.begin(), spectrum.end(), slice.begin());
        apply_radial_table(spec, slice, radial_table(spec, [&](double rho) { return sphere_multiplier(d, rho, t); }));
        idft_inplace(spec, slice);
        for (std::size_t k = 0; k < P; ++k) {
            const cplx z = slice[points[k]];
            paths[i * P + k] = real ? cplx(z.real(), 0.0) : z;
        }
    }
    std::vector<double> out(P);
    parallel_for(P, [&](std::size_t begin, std::size_t end, int) {
        SampledPath all;
        all.times = times;
        all.values.resize(times.size());
        for (std::size_t k = begin; k < end; ++k) {
            for (std::size_t i = 0; i < times.size(); ++i) all.values[i] = paths[i * P + k];
            out[k] = variation_fast(all, r);
        }
    });
    return out;
}

} // namespace sphvar
