#include "doctest.h"

#include "sphvar/average.hpp"
#include "sphvar/cutoff.hpp"
#include "sphvar/error.hpp"
#include "sphvar/fft.hpp"
#include "sphvar/field.hpp"
#include "sphvar/grid.hpp"
#include "sphvar/norms.hpp"
#include "sphvar/parallel.hpp"
#include "sphvar/quadrature.hpp"
#include "sphvar/simd.hpp"
#include "sphvar/special.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

using namespace sphvar;
using std::numbers::pi;

TEST_CASE("Bessel values against reference tables") {
    // scipy.special.jv
    const double xs[] = {0.3, 1.0, 7.5, 19.9, 20.1, 42.0, 150.0};
    const double ref[5][7] = {
        {0.9776262465382961, 0.7651976865579666, 0.26633965788037844, 0.17287775639261846, 0.15953606793729705,
         -0.11473949671358284, -0.0007740903753942912},
        {0.43049351732812513, 0.6713967071418039, 0.27328277400550405, 0.1551869299194029, 0.16891384247363958,
         -0.11283870575236604, -0.04657205589560011},
        {0.148318816273104, 0.44005058574493355, 0.13524842757970548, 0.05011742480737982, 0.08280100576020982,
         -0.045993888221887144, -0.06514516365772735},
        {0.04330988191837836, 0.24029783912342725, -0.0645531961295171, -0.08112837386996159, -0.047638625552985765,
         0.04655806043099772, -0.04586457377203422},
        {0.011165861949063964, 0.1149034849319005, -0.23027341052579028, -0.16784082927629887, -0.15129716189150502,
         0.1125493115601596, -9.451180670874019e-05}};
    const double nus[] = {0.0, 0.5, 1.0, 1.5, 2.0};
    for (int a = 0; a < 5; ++a)
        for (int k = 0; k < 7; ++k) CHECK(bessel_j(nus[a], xs[k]) == doctest::Approx(ref[a][k]).epsilon(1e-11));
}

TEST_CASE("half-integer Bessel closed forms") {
    for (double x = 0.05; x < 60.0; x += 0.37) {
        double s = std::sqrt(2.0 / (pi * x));
        CHECK(std::fabs(bessel_j(0.5, x) - s * std::sin(x)) < 1e-12);
        CHECK(std::fabs(bessel_j(1.5, x) - s * (std::sin(x) / x - std::cos(x))) < 1e-12);
    }
    CHECK_THROWS_AS(bessel_j(2.5, 1.0), Error);
    CHECK_THROWS_AS(bessel_j(0.0, -1.0), Error);
}

TEST_CASE("sphere multiplier normalization and derivative") {
    for (int d = 2; d <= 4; ++d) {
        CHECK(sphere_multiplier(d, 0.0, 1.0) == 1.0);
        for (double z = 0.1; z < 40.0; z += 0.77) {
            // five-point stencil: the Bessel rounding is amplified by 1/h
            double h = 1e-3;
            auto m = [&](double u) { return sphere_multiplier(d, u, 1.0); };
            double fd = (m(z - 2 * h) - 8 * m(z - h) + 8 * m(z + h) - m(z + 2 * h)) / (12 * h);
            CHECK(std::fabs(sphere_multiplier_derivative(d, z) - fd) < 1e-8);
        }
    }
    // m_2 = J_0
    CHECK(sphere_multiplier(2, 3.0, 2.5) == doctest::Approx(bessel_j(0.0, 7.5)).epsilon(1e-13));
}

TEST_CASE("cutoffs") {
    CHECK(smooth_step(-1.0) == 0.0);
    CHECK(smooth_step(1.0) == 1.0);
    for (double u = -0.99; u < 1.0; u += 0.0731) {
        CHECK(std::fabs(smooth_step(u) + smooth_step(-u) - 1.0) < 1e-12);
        double h = 1e-6;
        CHECK(std::fabs(smooth_step_derivative(u) - (smooth_step(u + h) - smooth_step(u - h)) / (2 * h)) < 1e-6);
    }
    CHECK(beta0(0.5) == 1.0);
    CHECK(beta0(1.0) == 0.0);
    // telescoping: beta_0 + sum_{j=1}^J beta_j = beta_0(2^-J .)
    for (double s = 0.0; s < 100.0; s += 0.913) {
        double acc = beta(0, s);
        for (int j = 1; j <= 8; ++j) acc += beta(j, s);
        CHECK(std::fabs(acc - beta0(std::ldexp(s, -8))) < 1e-14);
    }
    CHECK(chi(1.0) == 1.0);
    CHECK(chi(2.1) == 1.0);
    CHECK(chi(0.5) == 0.0);
    CHECK(chi(4.0) == 0.0);
    CutoffProfile bj{CutoffKind::BetaJ, 3};
    CHECK(bj(6.0) == beta(3, 6.0));
}

TEST_CASE("Gauss-Legendre is exact to degree 2n-1") {
    const auto& g = gauss_legendre(8);
    double s = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 14);
    CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 16, 2) == doctest::Approx(std::exp(1.0) - 1));
    // kink handled by a breakpoint
    CHECK(integrate([](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0, 4, 1, {0.3}) ==
          doctest::Approx(0.045 + 0.245).epsilon(1e-14));
}

TEST_CASE("FFT against a naive DFT") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    const int n0 = 6, n1 = 8;
    std::vector<std::complex<double>> x(n0 * n1), y;
    for (auto& v : x) v = {g(rng), g(rng)};
    y = x;
    fft::transform(y.data(), {n0, n1}, -1);
    for (int k0 = 0; k0 < n0; ++k0)
        for (int k1 = 0; k1 < n1; ++k1) {
            std::complex<double> s = 0;
            for (int a = 0; a < n0; ++a)
                for (int b = 0; b < n1; ++b)
                    s += x[a * n1 + b] * std::polar(1.0, -2 * pi * (double(k0 * a) / n0 + double(k1 * b) / n1));
            CHECK(std::abs(s - y[k0 * n1 + k1]) < 1e-12);
        }
}

TEST_CASE("grid DFT: delta at the origin, Parseval, round trip") {
    GridSpec s{2, 32, 8.0};
    std::vector<cplx> v(s.total(), 0.0);
    int origin[2] = {16, 16};
    auto delta = GridFunction(s, v);
    v[delta.ravel(origin)] = 1.0;
    auto F = dft(GridFunction(s, v));
    for (const auto& z : F.values()) CHECK(std::abs(z - 1.0 / 32.0) < 1e-15);

    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    for (auto& z : v) z = {g(rng), g(rng)};
    GridFunction f(s, v);
    auto Ff = dft(f);
    double e1 = 0, e2 = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        e1 += std::norm(v[i]);
        e2 += std::norm(Ff[i]);
    }
    CHECK(e1 == doctest::Approx(e2).epsilon(1e-12));
    auto back = idft(Ff);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(back[i] - v[i]) < 1e-13);
    CHECK_THROWS_AS(dft(Ff), Error);
}

TEST_CASE("grid validation and binary round trip") {
    CHECK_THROWS_AS((GridSpec{2, 48, 8.0}.validate()), Error);
    CHECK_THROWS_AS((GridSpec{5, 32, 8.0}.validate()), Error);
    CHECK_THROWS_AS((GridSpec{2, 32, 4.0}.validate()), Error);
    GridSpec s{3, 16, 8.0};
    auto f = GridFunction::sample(s, [](const double* x) { return cplx(x[0] * 0.25, x[2]); });
    std::stringstream buf;
    write_binary(buf, f);
    auto g = read_binary(buf);
    CHECK(g.spec() == s);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(g[i] - f[i]) < 1e-5);
    std::stringstream bad("NOTAGRID");
    CHECK_THROWS_AS(read_binary(bad), Error);
}

TEST_CASE("plane waves are eigenfunctions of A_t") {
    GridSpec s{2, 64, 8.0};
    const int k0 = 5, k1 = -3;
    auto f = GridFunction::sample(s, [&](const double* x) { return std::polar(1.0, pi * (k0 * x[0] + k1 * x[1]) / s.L); });
    double rho = pi * std::hypot(k0, k1) / s.L;
    for (double t : {0.5, 1.3, 3.7}) {
        auto a = spherical_average_spectral(f, t);
        double m = sphere_multiplier(2, rho, t);
        for (std::size_t i = 0; i < f.size(); i += 97) CHECK(std::abs(a[i] - m * f[i]) < 1e-12);
    }
    CHECK_THROWS_AS(spherical_average_spectral(f, 0.2), Error);
}

TEST_CASE("sphere rules: unit mass and second moments") {
    for (int d : {2, 3}) {
        auto rule = SphereRule::default_for(d);
        double w = 0, m2 = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            w += rule.weights[i];
            m2 += rule.weights[i] * rule.nodes[i][0] * rule.nodes[i][0];
        }
        CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m2 == doctest::Approx(1.0 / d).epsilon(1e-13));
        // A_t |y|^2 at x: |x|^2 + t^2
        double x[3] = {0.3, -0.2, 0.1};
        auto sq = [d](const double* y) {
            double s = 0;
            for (int a = 0; a < d; ++a) s += y[a] * y[a];
            return cplx(s, 0.0);
        };
        double ref = 0.09 + 0.04 + (d == 3 ? 0.01 : 0.0) + 1.44;
        CHECK(spherical_average_quadrature(sq, d, 1.2, x, rule).real() == doctest::Approx(ref).epsilon(1e-13));
    }
}

TEST_CASE("grid quadrature of a smooth field follows the spectral average") {
    GridSpec s{2, 128, 8.0};
    auto f = GridFunction::sample(s, [](const double* x) { return cplx(std::exp(-(x[0] * x[0] + x[1] * x[1])), 0.0); });
    auto a = spherical_average_spectral(f, 1.5);
    int m[2] = {70, 60};
    std::size_t lin = f.ravel(m);
    double x[2];
    f.point(lin, x);
    CHECK(std::abs(spherical_average_quadrature(f, 1.5, x) - a[lin]) < 5e-3);
    double far[2] = {7.5, 0.0};
    CHECK_THROWS_AS(spherical_average_quadrature(f, 1.5, far), Error);
}

TEST_CASE("norms") {
    GridSpec s{2, 16, 8.0};
    auto one = GridFunction::constant(s, 2.0);
    double vol = 256.0;
    CHECK(lp_norm(one, 1.0) == doctest::Approx(2.0 * vol));
    CHECK(lp_norm(one, 2.0) == doctest::Approx(std::sqrt(4.0 * vol)));
    CHECK(lp_norm(one, kInf) == 2.0);
    CHECK(weak_norm(one, 2.0) == doctest::Approx(lp_norm(one, 2.0)));
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    auto f = GridFunction::sample(s, [&](const double*) { return cplx(g(rng), 0.0); });
    CHECK(weak_norm(f, 1.5) <= lp_norm(f, 1.5) * (1 + 1e-12));
    CHECK_THROWS_AS(lp_norm(f, 0.5), Error);

    std::vector<double> times = uniform_times(1.0, 2.0, 5);
    std::vector<cplx> vals(times.size() * s.total(), cplx(3.0, 0.0));
    SpaceTimeField F(s, times, vals);
    // L^q_x(L^r_t) of the constant 3 over [1,2] x box
    CHECK(mixed_norm(F, 2.0, 3.0) == doctest::Approx(3.0 * std::sqrt(vol)).epsilon(1e-12));
    CHECK(spacetime_norm(F, 1.0) == doctest::Approx(3.0 * vol).epsilon(1e-12));
    auto w = trapezoid_weights(times);
    CHECK(w.front() == doctest::Approx(0.125));
}

TEST_CASE("space-time field binary round trip") {
    GridSpec s{2, 16, 8.0};
    std::vector<double> times{1.0, 1.5, 2.0};
    std::vector<cplx> vals(3 * s.total());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = cplx(double(i % 7), -double(i % 3));
    SpaceTimeField F(s, times, vals);
    std::stringstream buf;
    write_binary(buf, F);
    auto G = read_space_time(buf);
    CHECK(G.times() == times);
    CHECK(G.values() == vals);
    CHECK(G.path(5).size() == 3);
}

TEST_CASE("SIMD kernels agree with the scalar versions") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    const std::size_t n = 1037;
    std::vector<std::complex<double>> z(n), o1(n), o2(n);
    std::vector<std::uint32_t> idx(n);
    std::vector<double> table(64);
    for (auto& v : z) v = {g(rng), g(rng)};
    for (auto& i : idx) i = static_cast<std::uint32_t>(rng() % 64);
    for (auto& t : table) t = g(rng);
    std::vector<double> re(n), im(n), best(n), scratch(n);
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = g(rng);
        im[i] = g(rng);
        best[i] = std::fabs(g(rng));
    }
    simd::scalar::apply_radial(z.data(), o1.data(), idx.data(), table.data(), n);
    std::vector<double> a1(n, 1.0), a2(n, 1.0);
    simd::scalar::accumulate_weighted_abs2(a1.data(), z.data(), 0.37, n);
    if (!simd::avx2_available()) {
        MESSAGE("AVX2 not available; only the scalar path ran");
        return;
    }
    simd::avx2::apply_radial(z.data(), o2.data(), idx.data(), table.data(), n);
    CHECK(o1 == o2);
    simd::avx2::accumulate_weighted_abs2(a2.data(), z.data(), 0.37, n);
    CHECK(a1 == a2);
    for (double r : {1.0, 1.5, 2.0, 3.0, 7.25})
        for (std::size_t m : {std::size_t(0), std::size_t(1), std::size_t(3), std::size_t(4), std::size_t(5), n}) {
            double s = simd::scalar::variation_relax(best.data(), re.data(), im.data(), m, 0.3, -0.2, r, scratch.data());
            double v = simd::avx2::variation_relax(best.data(), re.data(), im.data(), m, 0.3, -0.2, r, scratch.data());
            CHECK(s == v);
        }
}

TEST_CASE("parallel helpers") {
    std::vector<int> hit(1000, 0);
    parallel_for(hit.size(), [&](std::size_t b, std::size_t e, int) {
        for (std::size_t i = b; i < e; ++i) hit[i] += 1;
    });
    for (int h : hit) CHECK(h == 1);
    std::vector<double> x(1001, 0.1);
    CHECK(pairwise_sum(x) == doctest::Approx(100.1).epsilon(1e-14));
}
