#include "sphvar/norms.hpp"

#include "sphvar/error.hpp"
#include "sphvar/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sphvar {

namespace {

void check_exponent(double p) {
    if (!(p >= 1.0)) fail(ErrorCode::InvalidExponent, "Lebesgue exponent must be >= 1");
}

double finite_norm_from_abs(std::vector<double>& a, double cell_volume, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : a) m = std::max(m, v);
        return m;
    }
    for (double& v : a) v = std::pow(v, p);
    return std::pow(cell_volume * pairwise_sum(a), 1.0 / p);
}

} // namespace

double lp_norm(const cplx* values, std::size_t count, double cell_volume, double p) {
    check_exponent(p);
    std::vector<double> a(count);
    for (std::size_t i = 0; i < count; ++i) a[i] = std::abs(values[i]);
    return finite_norm_from_abs(a, cell_volume, p);
}

double lp_norm_real(const double* values, std::size_t count, double cell_volume, double p) {
    check_exponent(p);
    std::vector<double> a(count);
    for (std::size_t i = 0; i < count; ++i) a[i] = std::fabs(values[i]);
    return finite_norm_from_abs(a, cell_volume, p);
}

double lp_norm(const GridFunction& f, double p) {
    return lp_norm(f.values().data(), f.size(), f.spec().cell_volume(), p);
}

double weak_norm_real(const double* values, std::size_t count, double cell_volume, double p) {
    check_exponent(p);
    std::vector<double> a(count);
    for (std::size_t i = 0; i < count; ++i) a[i] = std::fabs(values[i]);
    if (std::isinf(p)) return a.empty() ? 0.0 : *std::max_element(a.begin(), a.end());
    std::sort(a.begin(), a.end(), std::greater<double>());
    // for lambda just below a[i], |{|f| > lambda}| counts every sample >= a[i]
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) break;
        best = std::max(best, a[i] * std::pow(cell_volume * static_cast<double>(i + 1), 1.0 / p));
    }
    return best;
}

double weak_norm(const GridFunction& f, double p) {
    std::vector<double> a(f.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(f[i]);
    return weak_norm_real(a.data(), a.size(), f.spec().cell_volume(), p);
}

double mixed_norm(const SpaceTimeField& F, double q, double r) {
    check_exponent(q);
    check_exponent(r);
    const std::size_t N = F.slice_size();
    const std::size_t M = F.times().size();
    auto w = trapezoid_weights(F.times());
    std::vector<double> inner(N);
    parallel_for(N, [&](std::size_t begin, std::size_t end, int) {
        std::vector<double> terms(M);
        for (std::size_t x = begin; x < end; ++x) {
            if (std::isinf(r)) {
                double m = 0.0;
                for (std::size_t i = 0; i < M; ++i) m = std::max(m, std::abs(F.values()[i * N + x]));
                inner[x] = m;
            } else {
                for (std::size_t i = 0; i < M; ++i) terms[i] = w[i] * std::pow(std::abs(F.values()[i * N + x]), r);
                inner[x] = std::pow(pairwise_sum(terms), 1.0 / r);
            }
        }
    });
    return lp_norm_real(inner.data(), N, F.spec().cell_volume(), q);
}

double spacetime_norm(const SpaceTimeField& F, double p) {
    check_exponent(p);
    const std::size_t N = F.slice_size();
    const std::size_t M = F.times().size();
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& z : F.values()) m = std::max(m, std::abs(z));
        return m;
    }
    auto w = trapezoid_weights(F.times());
    std::vector<double> terms(N * M);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t i = 0; i < M; ++i) terms[x * M + i] = w[i] * std::pow(std::abs(F.values()[i * N + x]), p);
    return std::pow(F.spec().cell_volume() * pairwise_sum(terms), 1.0 / p);
}

} // namespace sphvar
