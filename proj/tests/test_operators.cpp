#include "doctest.h"

#include "sphvar/average.hpp"
#include "sphvar/cutoff.hpp"
#include "sphvar/error.hpp"
#include "sphvar/norms.hpp"
#include "sphvar/operators.hpp"
#include "sphvar/probe.hpp"
#include "sphvar/quadrature.hpp"
#include "sphvar/sparse.hpp"
#include "sphvar/variation.hpp"

#include <cmath>
#include <numbers>

using namespace sphvar;

namespace {

GridFunction gaussian(const GridSpec& spec, double width = 1.0) {
    return GridFunction::sample(spec, [&](const double* x) {
        double s = 0.0;
        for (int a = 0; a < spec.d; ++a) s += x[a] * x[a];
        return cplx(std::exp(-s / (width * width)), 0.0);
    });
}

GridFunction bump(const GridSpec& spec, double radius = 1.0) {
    Bump b;
    b.radius = radius;
    b.center[0] = 0.25;
    return sample_bumps(spec, {b});
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an sphvar::Error");
    return ErrorCode::Io;
}

double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

} // namespace

TEST_CASE("space-time multiplier at rho = 0 is chi") {
    for (int d : {2, 3, 4})
        for (double t : {0.6, 1.0, 2.5, 3.9}) {
            CHECK(space_time_multiplier(d, TimeOperator::Average, t, 0.0) == doctest::Approx(chi(t)).epsilon(1e-14));
            CHECK(space_time_multiplier(d, TimeOperator::TimeDerivative, t, 0.0) ==
                  doctest::Approx(chi_derivative(t)).epsilon(1e-12));
        }
}

TEST_CASE("dt calA matches a central difference of calA") {
    GridSpec spec{2, 64, 8.0};
    auto f = gaussian(spec);
    for (double t : {0.7, 1.5, 2.6, 3.5}) {
        const double e = 1e-5;
        auto F = calA(f, {t - e, t + e});
        auto D = dt_calA(f, {t, t + 0.1});
        std::vector<cplx> diff(spec.total());
        for (std::size_t x = 0; x < diff.size(); ++x) diff[x] = (F.slice(1)[x] - F.slice(0)[x]) / (2 * e);
        double err = 0.0;
        for (std::size_t x = 0; x < diff.size(); ++x) err = std::max(err, std::abs(diff[x] - D.slice(0)[x]));
        CHECK_MESSAGE(err <= 1e-6 * std::max(1.0, max_abs(D.values())), "t=" << t);
    }
}

TEST_CASE("the Littlewood-Paley pieces telescope to calA") {
    // the largest grid frequency is below 2^5, where beta_0(2^-6 s) = 1
    GridSpec spec{2, 64, 8.0};
    auto f = gaussian(spec, 0.5);
    std::vector<double> times{0.8, 1.3, 3.0};
    auto full = calA(f, times);
    std::vector<cplx> sum(full.values().size());
    for (int j = 0; j <= 6; ++j) {
        auto piece = calA_j(f, j, times);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += piece.values()[i];
    }
    double err = 0.0;
    for (std::size_t i = 0; i < sum.size(); ++i) err = std::max(err, std::abs(sum[i] - full.values()[i]));
    CHECK(err <= 1e-13);
}

TEST_CASE("kernel profile concentrates near the sphere and integrates to zero") {
    const int d = 3, j = 5;
    const double t = 1.0;
    std::vector<double> near, far;
    for (double s = 0.9; s <= 1.1; s += 0.01) near.push_back(s);
    far = {2.5, 3.0};
    auto kn = kernel_K(d, j, t, near);
    auto kf = kernel_K(d, j, t, far);
    double peak = 0.0;
    for (double v : kn) peak = std::max(peak, std::fabs(v));
    // the tabulated cutoff has finite smoothness, so the decay is polynomial rather than rapid
    for (double v : kf) CHECK(std::fabs(v) <= 1e-2 * peak);
    // int K = m(0) beta_j(0) = 0
    const double area = 4.0 * std::numbers::pi;
    double mass = integrate(
        [&](double s) { return area * s * s * kernel_K(d, j, t, {s})[0]; }, 0.0, 3.0, 16, 96);
    CHECK(std::fabs(mass) <= 1e-3 * peak);
    CHECK(code_of([] { kernel_K(3, 0, 1.0, {1.0}); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { kernel_K(5, 2, 1.0, {1.0}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("local variation agrees with a direct quadrature path") {
    GridSpec spec{2, 128, 8.0};
    auto f = gaussian(spec);
    const int M = 9;
    const double r = 2.0;
    auto V = local_variation_operator(f, r, M);
    auto times = uniform_times(1.0, 2.0, M);
    for (int m0 : {64, 70, 80}) {
        int m[2] = {m0, 66};
        std::size_t idx = V.ravel(m);
        double x[2];
        V.point(idx, x);
        SampledPath p;
        p.times = times;
        for (double t : times) p.values.push_back(spherical_average_quadrature(f, t, x));
        CHECK(V[idx].real() == doctest::Approx(variation_exact(p, r)).epsilon(1e-3));
        CHECK(V[idx].imag() == 0.0);
    }
}

TEST_CASE("global variation: one interval equals the local operator, pooled stays under the bound") {
    GridSpec spec{2, 64, 8.0};
    auto f = bump(spec);
    auto g1 = global_variation_operator(f, 2.0, 0, 0, 9);
    auto loc = local_variation_operator(f, 2.0, 9, 1.0, 2.0);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(g1.pooled[i].real() == doctest::Approx(loc[i].real()).epsilon(1e-12).scale(1e-300));
    auto g = global_variation_operator(f, 2.0, -2, 1, 9);
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(g.pooled[i].real() <= g.bound[i].real() * (1 + 1e-12) + 1e-300);
        CHECK(g.bound[i].real() == doctest::Approx(g.long_part[i].real() + 2 * g.short_part[i].real()));
    }
}

TEST_CASE("pooled variation at selected points equals the full operator") {
    GridSpec spec{2, 64, 8.0};
    auto f = bump(spec);
    auto g = global_variation_operator(f, 3.0, -2, 1, 9);
    std::vector<std::size_t> pts{0, 100, 2080, 2113, 4095};
    auto v = pooled_variation_at(f, 3.0, -2, 1, 9, pts);
    for (std::size_t k = 0; k < pts.size(); ++k) CHECK(v[k] == g.pooled[pts[k]].real());
    CHECK(code_of([&] { pooled_variation_at(f, 3.0, -2, 1, 9, {4096}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("support radius") {
    GridSpec spec{2, 128, 8.0};
    auto f = bump(spec);
    double s = support_radius(f);
    CHECK(s <= 1.25 + 1e-12);
    CHECK(s >= 1.25 - 2 * spec.h());
    CHECK(support_radius(GridFunction::zeros(spec)) == 0.0);
}

TEST_CASE("operators reject out-of-window times and oversized spheres") {
    GridSpec spec{2, 64, 8.0};
    auto f = bump(spec);
    CHECK(code_of([&] { calA(f, {0.4}); }) == ErrorCode::OutOfDomain);
    CHECK(code_of([&] { dt_calA_j(f, 2, {4.5}); }) == ErrorCode::OutOfDomain);
    CHECK(code_of([&] { averages(f, {0.0}); }) == ErrorCode::OutOfDomain);
    CHECK(code_of([&] { global_variation_operator(f, 2.0, 0, 2, 9); }) == ErrorCode::OutOfDomain);
    CHECK(code_of([&] { local_variation_operator(f, 0.5); }) == ErrorCode::InvalidExponent);
    CHECK(code_of([&] { local_variation_operator(f, 2.0, 1); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { calA_j(f, -1, {1.0}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("probe ratio: Plancherel route matches the space-side mixed norm") {
    GridSpec spec{2, 64, 8.0};
    auto times = uniform_times(0.5, 4.0, 57);
    for (int index : {0, 4, 6}) {
        auto spectrum = probe_trial(spec, 3, index, 7);
        double fast = probe_ratio(spec, spectrum, 3, 2.0, 2.0, 2.0, TimeOperator::Average, times);
        auto f = idft(GridFunction(spec, spectrum, Domain::Frequency));
        double direct = mixed_norm(calA_j(f, 3, times), 2.0, 2.0) / lp_norm(f, 2.0);
        CHECK_MESSAGE(fast == doctest::Approx(direct).epsilon(1e-10), "trial " << index);
    }
    std::vector<cplx> zero(spec.total());
    CHECK(code_of([&] { probe_ratio(spec, zero, 3, 2.0, 2.0, 2.0, TimeOperator::Average, times); }) ==
          ErrorCode::DegenerateInput);
}

TEST_CASE("radial shell route agrees with the grid probe") {
    GridSpec spec{3, 64, 8.0};
    const int j = 3;
    auto times = uniform_times(0.5, 4.0, 57);
    auto spectrum = probe_trial(spec, j, 0, 1);
    for (double q : {2.0, 4.0}) {
        double grid = probe_ratio(spec, spectrum, j, 2.0, q, 2.0, TimeOperator::Average, times);
        double radial = radial_shell_ratio(j, 1.0, q, 2.0);
        CHECK_MESSAGE(std::fabs(grid - radial) <= 0.15 * radial, "q=" << q << " grid=" << grid << " radial=" << radial);
    }
}
