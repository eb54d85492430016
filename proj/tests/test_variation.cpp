#include "doctest.h"

#include "sphvar/error.hpp"
#include "sphvar/variation.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace sphvar;

namespace {

const double kInfR = std::numeric_limits<double>::infinity();

SampledPath random_path(std::mt19937_64& rng, std::size_t n, bool real) {
    std::normal_distribution<double> g;
    std::vector<std::complex<double>> v(n);
    for (auto& z : v) z = {g(rng), real ? 0.0 : g(rng)};
    return SampledPath::indexed(v);
}

} // namespace

TEST_CASE("the four-sample example") {
    auto p = SampledPath::from_real({0, 1, 2, 3}, {0, 1, 0, 1});
    CHECK(variation_exact(p, 2.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(variation_bruteforce(p, 2.0) == variation_exact(p, 2.0));
    CHECK(variation_exact(p, 1.0) == 3.0);
    CHECK(variation_exact(p, kInfR) == 1.0);
    CHECK(variation_norm(p, 2.0) == doctest::Approx(1.0 + std::sqrt(3.0)));
}

TEST_CASE("hand-computed values") {
    // 0, 2, 1, 3 with r = 2: 0 -> 2 -> 1 -> 3 and 0 -> 3 both give 9
    auto p = SampledPath::from_real({0, 1, 2, 3}, {0, 2, 1, 3});
    CHECK(variation_exact(p, 2.0) == 3.0);
    // with r = 3 the single jump 0 -> 3 wins: 27 > 8 + 1 + 8
    CHECK(variation_exact(p, 3.0) == doctest::Approx(3.0).epsilon(1e-15));
    // complex path: a square traversal
    auto c = SampledPath::indexed({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(variation_exact(c, kInfR) == doctest::Approx(std::sqrt(2.0)));
    CHECK(variation_exact(c, 1.0) == doctest::Approx(3.0));
}

TEST_CASE("input validation") {
    auto p = SampledPath::from_real({0, 1}, {0, 1});
    CHECK_THROWS_AS(variation_exact(p, 0.5), Error);
    auto bad = SampledPath::from_real({0, 0}, {0, 1});
    CHECK_THROWS_AS(variation_exact(bad, 2.0), Error);
    SampledPath empty;
    CHECK_THROWS_AS(variation_exact(empty, 2.0), Error);
    std::mt19937_64 rng(1);
    try {
        variation_bruteforce(random_path(rng, 17, false), 2.0);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    CHECK(variation_exact(SampledPath::from_real({0}, {5}), 2.0) == 0.0);
}

TEST_CASE("property: exact equals brute force bit for bit") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto p = random_path(rng, 2 + i % 11, i % 3 == 0);
        for (double r : {1.0, 1.25, 2.0, 2.5, 4.0, kInfR}) CHECK(variation_exact(p, r) == variation_bruteforce(p, r));
    }
}

TEST_CASE("property: fast real route agrees with the DP") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        auto p = random_path(rng, 5 + i, true);
        // plateaus
        if (p.size() > 4) p.values[3] = p.values[2];
        for (double r : {1.0, 1.5, 2.0, 3.0, kInfR})
            CHECK(variation_fast(p, r) == doctest::Approx(variation_exact(p, r)).epsilon(1e-13));
    }
}

TEST_CASE("property: monotone in r, subsequence and translation behaviour") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        auto p = random_path(rng, 40, false);
        double prev = kInfR;
        for (double r : {1.0, 1.5, 2.0, 3.0, 6.0, kInfR}) {
            double v = variation_exact(p, r);
            CHECK(v <= prev * (1 + 1e-14));
            prev = v;
        }
        SampledPath sub;
        for (std::size_t k = 0; k < p.size(); k += 3) {
            sub.times.push_back(p.times[k]);
            sub.values.push_back(p.values[k]);
        }
        CHECK(variation_exact(sub, 2.0) <= variation_exact(p, 2.0) * (1 + 1e-14));
        auto shifted = p;
        for (auto& z : shifted.values) z += std::complex<double>(3.0, -1.0);
        CHECK(variation_exact(shifted, 2.0) == doctest::Approx(variation_exact(p, 2.0)).epsilon(1e-12));
        auto scaled = p;
        for (auto& z : scaled.values) z *= 2.5;
        CHECK(variation_exact(scaled, 1.5) == doctest::Approx(2.5 * variation_exact(p, 1.5)).epsilon(1e-12));
    }
}

TEST_CASE("turning points") {
    double v[] = {0, 1, 1, 2, 1, 1, 0, 3};
    auto tp = turning_points(v, 8);
    std::vector<std::size_t> want{0, 3, 6, 7};
    CHECK(tp == want);
}

TEST_CASE("Besov norms control the variation") {
    // smooth path: V_r <= C ||u||_{B^{1/r}_{r,1}}
    for (double r : {1.5, 2.0, 3.0}) {
        std::vector<double> t, v;
        for (int k = 0; k <= 400; ++k) {
            double s = 1.0 + k / 400.0;
            t.push_back(s);
            v.push_back(std::sin(7 * s) + 0.3 * std::cos(23 * s));
        }
        auto p = SampledPath::from_real(t, v);
        double sum = besov_norm(p, r, BesovFlavor::SumOverLevels);
        double sup = besov_norm(p, r, BesovFlavor::SupOverLevels);
        CHECK(sup <= sum);
        CHECK(variation_exact(p, r) <= 10.0 * sum);
        CHECK(sum > 0.0);
    }
}

TEST_CASE("long plus twice short bounds the pooled variation") {
    std::mt19937_64 rng(14);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<SampledPath> paths;
        for (int k = 0; k < 4; ++k) {
            SampledPath p;
            double a = std::ldexp(1.0, k), b = 2 * a;
            for (int m = 0; m <= 6; ++m) {
                p.times.push_back(a + (b - a) * m / 6.0);
                p.values.push_back({g(rng), g(rng)});
            }
            if (k > 0) p.values.front() = paths.back().values.back();
            paths.push_back(p);
        }
        auto pooled = pool_paths(paths);
        CHECK(pooled.size() == 25);
        for (double r : {1.0, 2.0, 3.0, kInfR}) {
            auto ls = long_short_split(paths, r);
            CHECK(variation_exact(pooled, r) <= (ls.long_part + 2 * ls.short_part) * (1 + 1e-12));
        }
    }
}

TEST_CASE("long plus short alone is not an upper bound") {
    SampledPath a, b;
    a.times = {1, 1.5, 2};
    a.values = {0, -1, 0};
    b.times = {2, 3, 4};
    b.values = {0, 1, 0};
    auto ls = long_short_split({a, b}, 2.0);
    CHECK(ls.long_part == 0.0);
    CHECK(ls.short_part == doctest::Approx(2.0));
    CHECK(variation_exact(pool_paths({a, b}), 2.0) == doctest::Approx(std::sqrt(6.0)));
}
