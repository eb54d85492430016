#include "doctest.h"

#include "sphvar/average.hpp"
#include "sphvar/counterexamples.hpp"
#include "sphvar/error.hpp"
#include "sphvar/norms.hpp"

#include <cmath>
#include <numbers>

using namespace sphvar;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an sphvar::Error");
    return ErrorCode::Io;
}

double quadrature_average(const ExampleSpec& spec, double t, const double* x, const SphereRule& rule) {
    auto f = [&](const double* y) { return cplx(spec.value(y), 0.0); };
    return spherical_average_quadrature(f, spec.d, t, x, rule).real();
}

} // namespace

TEST_CASE("closed-form averages match brute-force sphere quadrature") {
    // indicators converge slowly under quadrature, so the rules are very fine
    auto circle = SphereRule::make(2, 1 << 18);
    auto sphere = SphereRule::make(3, 600);
    const ExampleKind kinds[] = {ExampleKind::Shell0, ExampleKind::Knapp, ExampleKind::Disks, ExampleKind::KnappPlates,
                                 ExampleKind::AlternatingShells, ExampleKind::Stein};
    for (int d : {2, 3}) {
        const auto& rule = d == 2 ? circle : sphere;
        const double tol = d == 2 ? 1e-4 : 3e-3;
        for (auto kind : kinds) {
            ExampleSpec spec{kind, d, 4};
            for (double xd : {0.0, 0.02, 0.9, 1.05}) {
                double x[3] = {0.01, 0.0, 0.0};
                x[d - 1] = xd;
                for (double t : {0.95, 1.0, 1.03, 1.1, 1.5}) {
                    double exact = average_exact(spec, t, x);
                    double quad = quadrature_average(spec, t, x, rule);
                    double scale = kind == ExampleKind::Stein ? std::max(1.0, std::fabs(exact)) : 1.0;
                    CHECK_MESSAGE(std::fabs(exact - quad) <= tol * scale,
                                  example_name(kind) << " d=" << d << " x_d=" << xd << " t=" << t << ": " << exact
                                                     << " vs " << quad);
                }
            }
        }
    }
}

TEST_CASE("generated grids reproduce the exact L^p norms") {
    for (auto kind : {ExampleKind::Shell0, ExampleKind::Disks, ExampleKind::AlternatingShells}) {
        ExampleSpec spec{kind, 2, 2};
        GridSpec grid{2, 2048, 8.0};
        auto f = generate(spec, grid);
        for (double p : {1.0, 2.0})
            CHECK_MESSAGE(lp_norm(f, p) == doctest::Approx(spec.lp_norm(p)).epsilon(0.1), example_name(kind));
        CHECK(lp_norm(f, kInf) == 1.0);
    }
}

TEST_CASE("piece volumes and counts") {
    ExampleSpec shells{ExampleKind::AlternatingShells, 3, 5};
    CHECK(shells.count() == 8);
    auto ps = shells.pieces();
    REQUIRE(ps.size() == 8);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(ps[i].sign == (i % 2 == 0 ? -1 : 1));
        double want = 4.0 / 3.0 * std::numbers::pi * (std::pow(ps[i].outer, 3) - std::pow(ps[i].inner, 3));
        CHECK(ps[i].volume(3) == doctest::Approx(want));
    }
    Piece plate;
    plate.shape = Piece::Shape::Plate;
    plate.half_perp = 0.5;
    plate.half_axis = 0.25;
    CHECK(plate.volume(2) == doctest::Approx(0.5));
    CHECK(plate.volume(3) == doctest::Approx(std::numbers::pi * 0.25 * 0.5));
    CHECK(ExampleSpec{ExampleKind::Disks, 2, 1}.count() == 0);
    CHECK(ExampleSpec{ExampleKind::Knapp, 2, 1}.count() == 1);
}

TEST_CASE("predicted exponents") {
    CHECK(predicted_slope(ExampleKind::AlternatingShells, 2, 1, 1, 2) == doctest::Approx(-1.5));
    CHECK(predicted_slope(ExampleKind::Shell0, 3, 2, 4, 2) == doctest::Approx(-0.25));
    CHECK(predicted_slope(ExampleKind::Disks, 2, 1, 2, 3) == doctest::Approx(1.0 / 3));
    CHECK(predicted_slope(ExampleKind::KnappPlates, 3, 2, 2, 2) == doctest::Approx(-0.5));
    CHECK(predicted_slope(ExampleKind::Knapp, 2, 1, 1, 2) == doctest::Approx(0.5));
    CHECK(code_of([] { predicted_slope(ExampleKind::Stein, 2, 1, 1, 2); }) == ErrorCode::NoPrediction);
}

TEST_CASE("resolution and sampling limits") {
    CHECK(code_of([] { generate({ExampleKind::Disks, 2, 6}, GridSpec{2, 256, 8.0}); }) == ErrorCode::Unresolvable);
    CHECK(code_of([] { generate({ExampleKind::Disks, 2, 1}, GridSpec{2, 4096, 8.0}); }) == ErrorCode::Unresolvable);
    CHECK(code_of([] { generate({ExampleKind::Disks, 3, 3}, GridSpec{2, 4096, 8.0}); }) == ErrorCode::ShapeMismatch);
    CHECK(scaling_time_samples(3, 0) == 257);
    CHECK(scaling_time_samples(3, 300) == 300);
    CHECK(code_of([] { scaling_time_samples(3, 200); }) == ErrorCode::Unresolvable);
    CHECK(code_of([] { parse_example_kind("Circles"); }) == ErrorCode::InvalidInput);
    for (auto k : {ExampleKind::Stein, ExampleKind::Knapp, ExampleKind::AlternatingShells})
        CHECK(parse_example_kind(example_name(k)) == k);
    ScalingOptions o;
    o.jmin = 3;
    o.jmax = 5;
    CHECK(code_of([&] { run_scaling(ExampleKind::Disks, 2, o); }) == ErrorCode::InvalidInput);
}

TEST_CASE("Disks in d=3 at j=4") {
    ExampleSpec spec{ExampleKind::Disks, 3, 4};
    auto ps = spec.pieces();
    REQUIRE(ps.size() == 4);
    for (std::size_t n = 1; n <= ps.size(); ++n) {
        CHECK(ps[n - 1].center == -static_cast<double>(n) / 16);
        CHECK(ps[n - 1].outer == std::ldexp(1.0, -8));
        CHECK(ps[n - 1].sign == (n % 2 == 0 ? 1 : -1));
    }
    CHECK(spec.lp_norm(kInf) == 1.0);
}

TEST_CASE("alternating shells stay bounded in L^p across j") {
    for (double p : {1.0, 2.0, 4.0}) {
        double first = ExampleSpec{ExampleKind::AlternatingShells, 2, 3}.lp_norm(p);
        for (int j = 4; j <= 6; ++j) {
            double ratio = ExampleSpec{ExampleKind::AlternatingShells, 2, j}.lp_norm(p) / first;
            CHECK(ratio >= 0.5);
            CHECK(ratio <= 2.0);
        }
    }
}

TEST_CASE("Knapp slab measure on the grid") {
    // delta = 2^{-j/2}: a delta x delta^2 slab (full widths 2 delta, 2 delta^2)
    ExampleSpec spec{ExampleKind::Knapp, 2, 2};
    GridSpec grid{2, 2048, 8.0};
    auto f = generate(spec, grid);
    const double delta = 0.5;
    const double want = 2 * delta * 2 * delta * delta;
    // one-cell boundary layer on each side
    const double layer = 2 * grid.h() * (2 * delta + 2 * delta * delta) + 4 * grid.h() * grid.h();
    CHECK(std::fabs(lp_norm(f, 1.0) - want) <= layer);
}
