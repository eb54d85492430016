#include "doctest.h"

#include "sphvar/error.hpp"
#include "sphvar/geometry.hpp"
#include "sphvar/rational.hpp"
#include "sphvar/sparse.hpp"

#include "json.hpp"

#include <cmath>
#include <numbers>
#include <random>

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

Cube cube2(double x, double y, double side) {
    Cube q;
    q.corner = {x, y, 0.0, 0.0};
    q.side = side;
    return q;
}

Certificate full(std::uint64_t cells) { return Certificate{{{0, cells}}}; }

ExponentPoint centroid(const RegionPolygon& poly) {
    ExponentPoint c{0, 0};
    for (const auto& v : poly.vertices) {
        c.inv_p += v.point.to_double().inv_p / static_cast<double>(poly.vertices.size());
        c.inv_q += v.point.to_double().inv_q / static_cast<double>(poly.vertices.size());
    }
    return c;
}

} // namespace

TEST_CASE("verify_sparsity on hand-built families") {
    SparseFamily fam;
    fam.cell = 0.25;
    // unit cube (16 cells) keeping its left half, then the right-half quadrants
    fam.cubes = {cube2(0, 0, 1), cube2(0.5, 0, 0.5), cube2(0.5, 0.5, 0.5)};
    fam.certificates = {Certificate{{{0, 8}}}, full(4), full(4)};
    CHECK(verify_sparsity(fam).ok);

    auto overlap = fam;
    overlap.certificates[0] = Certificate{{{0, 9}}};
    auto res = verify_sparsity(overlap);
    CHECK_FALSE(res.ok);
    CHECK(res.violation == "certificates of two cubes intersect");

    auto thin = fam;
    thin.certificates[0] = Certificate{{{0, 7}}};
    CHECK(verify_sparsity(thin).violation == "certificate covers less than half of its cube");

    auto off = fam;
    off.cubes[1].corner[0] = 0.6;
    CHECK(verify_sparsity(off).violation == "corner is off the lattice");

    auto leaks = fam;
    leaks.certificates[1] = Certificate{{{2, 3}}};
    CHECK(verify_sparsity(leaks).violation == "certificate leaves its cube");
    CHECK(verify_sparsity(leaks).cube == 1);
}

TEST_CASE("sparse form: single cube, zero, homogeneity, monotonicity") {
    ShapeSource f(2), g(2);
    f.add_box({0, 0, 0, 0}, {0.5, 1, 0, 0}, 2.0);
    g.add_box({0, 0, 0, 0}, {1, 1, 0, 0}, 3.0);
    SparseFamily fam;
    fam.cell = 0.25;
    fam.cubes = {cube2(0, 0, 1)};
    fam.certificates = {full(16)};
    // |Q| <f>_{Q,2} <g>_{Q,2} with p = q = 2
    CHECK(sparse_form(fam, f, g, 2.0, 2.0) == doctest::Approx(std::sqrt(2.0) * 3.0));
    ShapeSource zero(2);
    CHECK(sparse_form(fam, zero, g, 2.0, 2.0) == 0.0);
    ShapeSource f3(2);
    f3.add_box({0, 0, 0, 0}, {0.5, 1, 0, 0}, 6.0);
    CHECK(sparse_form(fam, f3, g, 1.0, 3.0) == doctest::Approx(3.0 * sparse_form(fam, f, g, 1.0, 3.0)));
    auto more = fam;
    more.cubes.push_back(cube2(0, 0, 0.5));
    more.certificates.push_back(full(4));
    CHECK(sparse_form(more, f, g, 2.0, 2.0) > sparse_form(fam, f, g, 2.0, 2.0));
    CHECK(code_of([&] { sparse_form(fam, f, g, 2.0, 1.0); }) == ErrorCode::InvalidExponent);
    CHECK(code_of([&] { sparse_form(fam, f, g, 0.5, 2.0); }) == ErrorCode::InvalidExponent);
}

TEST_CASE("indicator of a lattice cube gives a single root cube") {
    ShapeSource f(2);
    f.add_box({0, 0, 0, 0}, {1, 1, 0, 0});
    SparseOptions o;
    o.cell = 1.0 / 16;
    auto fam = build_sparse_family(f, f, 2.0, 2.0, o, {0, 0, 0, 0});
    REQUIRE(fam.cubes.size() == 1);
    CHECK(fam.cubes[0].side == 1.0);
    CHECK(fam.certificates[0].count() == 256);
    CHECK(verify_sparsity(fam).ok);
}

TEST_CASE("left and right half indicators") {
    ShapeSource left(2), right(2);
    left.add_box({0, 0, 0, 0}, {0.5, 1, 0, 0});
    right.add_box({0.5, 0, 0, 0}, {1, 1, 0, 0});
    SparseOptions o;
    o.cell = 1.0 / 64;
    // child averages exceed the parent's by 2 at most, below the default threshold 4
    auto fam = build_sparse_family(left, right, 1.0, 2.0, o, {0, 0, 0, 0});
    CHECK(fam.cubes.size() == 1);
    CHECK(verify_sparsity(fam).ok);
    // threshold 1.5: the two left quadrants stop through f1, the right ones do not (sqrt 2 < 1.5)
    o.threshold = 1.5;
    fam = build_sparse_family(left, right, 1.0, 2.0, o, {0, 0, 0, 0});
    REQUIRE(fam.cubes.size() == 3);
    CHECK(fam.cubes[1].side == 0.5);
    CHECK(fam.cubes[2].side == 0.5);
    CHECK(fam.cubes[1].corner[0] == 0.0);
    CHECK(fam.cubes[2].corner[0] == 0.0);
    CHECK(fam.certificates[0].count() == 64 * 64 / 2);
    CHECK(verify_sparsity(fam).ok);
}

TEST_CASE("disk-rectangle area matches a fine midpoint count") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        double cx = u(rng), cy = u(rng), R = 0.2 + std::fabs(u(rng));
        double x0 = u(rng), y0 = u(rng);
        double x1 = x0 + 0.1 + std::fabs(u(rng)), y1 = y0 + 0.1 + std::fabs(u(rng));
        const int K = 1500;
        double hx = (x1 - x0) / K, hy = (y1 - y0) / K, count = 0;
        for (int a = 0; a < K; ++a)
            for (int b = 0; b < K; ++b) {
                double x = x0 + (a + 0.5) * hx - cx, y = y0 + (b + 0.5) * hy - cy;
                count += x * x + y * y <= R * R;
            }
        CHECK(disk_rectangle_area(cx, cy, R, x0, x1, y0, y1) == doctest::Approx(count * hx * hy).epsilon(2e-3));
    }
    CHECK(disk_rectangle_area(0, 0, 1, -2, 2, -2, 2) == doctest::Approx(std::numbers::pi));
    CHECK(disk_rectangle_area(0, 0, 1, 2, 3, 0, 1) == 0.0);
}

TEST_CASE("property: random bump pairs give sparse families") {
    std::mt19937_64 rng(21);
    GridSpec spec{2, 128, 8.0};
    for (int trial = 0; trial < 10; ++trial) {
        auto f1 = sample_bumps(spec, random_bumps(2, 1 + trial % 3, rng));
        auto f2 = sample_bumps(spec, random_bumps(2, 1 + (trial + 1) % 3, rng));
        auto fam = build_sparse_family(f1, f2, 1.5, 3.0);
        auto res = verify_sparsity(fam);
        CHECK_MESSAGE(res.ok, res.violation);
        CHECK(fam.cubes.size() >= 1);
    }
    GridSpec spec3{3, 32, 8.0};
    auto g1 = sample_bumps(spec3, random_bumps(3, 2, rng));
    auto g2 = sample_bumps(spec3, random_bumps(3, 2, rng));
    CHECK(verify_sparsity(build_sparse_family(g1, g2, 2.0, 2.0)).ok);
}

TEST_CASE("domination check: a ratio for interior points, errors otherwise") {
    GridSpec spec{2, 64, 8.0};
    std::mt19937_64 rng(22);
    auto f1 = sample_bumps(spec, random_bumps(2, 2, rng));
    auto f2 = sample_bumps(spec, random_bumps(2, 2, rng));
    auto rs = RegionSpec::finite(2, Rational(3));
    auto c = centroid(region(rs));
    auto res = domination_check(f1, f2, 1.0 / c.inv_p, 1.0 / c.inv_q, rs);
    CHECK(res.pairing > 0.0);
    CHECK(res.form > 0.0);
    CHECK(res.ratio == doctest::Approx(res.pairing / res.form));
    CHECK(res.cubes >= 1);

    CHECK(code_of([&] { domination_check(f1, f2, 1.0, 1.0 / 0.95, rs); }) == ErrorCode::RegionViolation);
    auto neg = GridFunction::sample(spec, [&](const double* x) { return cplx(x[0] < 0 ? -1.0 : 0.0); });
    CHECK(code_of([&] { domination_check(neg, f2, 2.0, 2.0, rs); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { domination_check(GridFunction::zeros(spec), f2, 2.0, 2.0, rs); }) ==
          ErrorCode::DegenerateInput);
    CHECK(code_of([&] { domination_check(f1, f2, 2.0, 2.0, RegionSpec::finite(3, Rational(3))); }) ==
          ErrorCode::ShapeMismatch);
}

TEST_CASE("family JSON lists cubes and certificate runs") {
    ShapeSource left(2), right(2);
    left.add_box({0, 0, 0, 0}, {0.5, 1, 0, 0});
    right.add_box({0.5, 0, 0, 0}, {1, 1, 0, 0});
    SparseOptions o;
    o.cell = 0.25;
    o.threshold = 1.5;
    o.min_side = 0.5;
    auto fam = build_sparse_family(left, right, 1.0, 2.0, o, {0, 0, 0, 0});
    auto js = nlohmann::json::parse(family_to_json(fam));
    CHECK(js["d"] == 2);
    CHECK(js["cell"] == 0.25);
    REQUIRE(js["cubes"].size() == fam.cubes.size());
    CHECK(js["cubes"][0]["side"] == 1.0);
    CHECK(js["cubes"][0]["certificate"][0][0] == fam.certificates[0].runs[0].first);
}

TEST_CASE("sharpness scan keeps the pieces away from the region") {
    CHECK(code_of([] { sharpness_scaling(1, 2, 3, 3, 4); }) == ErrorCode::InvalidInput);
    auto rep = sharpness_scaling(1, 2, 3, 3, 5);
    CHECK(rep.separation >= 1.0);
    CHECK(rep.predicted == doctest::Approx(1.0 / 3));
    CHECK(rep.j.size() == 3);
    for (double v : rep.ratio) CHECK(v > 0.0);
}
