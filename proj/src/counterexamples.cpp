#include "sphvar/counterexamples.hpp"

#include "sphvar/error.hpp"
#include "sphvar/field.hpp"
#include "sphvar/parallel.hpp"
#include "sphvar/quadrature.hpp"
#include "sphvar/variation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace sphvar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSteinRadius = 0.1;

double ball_volume(int d, double rho) {
    return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0) * std::pow(rho, d);
}

double sphere_area(int d) { return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d); }

// normalized measure of {omega in S^{d-1}: <omega, e> >= a}
double cap_measure(int d, double a) {
    if (a <= -1.0) return 1.0;
    if (a >= 1.0) return 0.0;
    switch (d) {
    case 2: return std::acos(a) / kPi;
    case 3: return 0.5 * (1.0 - a);
    case 4: return (std::acos(a) - a * std::sqrt(1.0 - a * a)) / kPi;
    default: fail(ErrorCode::InvalidInput, "cap measure implemented for d = 2, 3, 4");
    }
}

// fraction of the sphere of radius t about x lying in a ball of radius rho whose centre is at distance D
double ball_fraction(int d, double t, double D, double rho) {
    if (rho <= 0.0) return 0.0;
    if (D + t <= rho) return 1.0;
    if (t >= D + rho || t <= D - rho) return 0.0;
    return cap_measure(d, (t * t + D * D - rho * rho) / (2.0 * t * D));
}

double overlap(double a0, double a1, double b0, double b1) { return std::max(0.0, std::min(a1, b1) - std::max(a0, b0)); }

// d = 2: arc measure of {phi: |x1 + t cos phi| <= w, |x2 + t sin phi - c| <= h} / (2 pi)
double plate_fraction_2d(double t, double x1, double x2, const Piece& P) {
    double c0 = std::max(-1.0, (-P.half_perp - x1) / t), c1 = std::min(1.0, (P.half_perp - x1) / t);
    double s0 = std::max(-1.0, (P.center - P.half_axis - x2) / t), s1 = std::min(1.0, (P.center + P.half_axis - x2) / t);
    if (c1 <= c0 || s1 <= s0) return 0.0;
    const std::array<std::array<double, 2>, 2> A{{{std::asin(s0), std::asin(s1)},
                                                  {kPi - std::asin(s1), kPi - std::asin(s0)}}};
    const std::array<std::array<double, 2>, 2> B{{{std::acos(c1), std::acos(c0)},
                                                  {-std::acos(c0), -std::acos(c1)}}};
    double total = 0.0;
    for (const auto& a : A)
        for (const auto& b : B)
            for (int k = -1; k <= 1; ++k) total += overlap(a[0], a[1], b[0] + 2.0 * kPi * k, b[1] + 2.0 * kPi * k);
    return total / (2.0 * kPi);
}

// d = 3: integrate over the height u = omega_3 (uniform with density 1/2) the
// fraction of the horizontal circle of radius t sqrt(1-u^2) about x' inside |y'| <= w
double plate_fraction_3d(double t, double xs, double x3, const Piece& P) {
    double u0 = std::max(-1.0, (P.center - P.half_axis - x3) / t);
    double u1 = std::min(1.0, (P.center + P.half_axis - x3) / t);
    if (u1 <= u0) return 0.0;
    const double w = P.half_perp;
    std::vector<double> bps;
    for (double rad : {std::fabs(w - xs), w + xs}) {
        if (rad >= t) continue;
        double u = std::sqrt(1.0 - (rad * rad) / (t * t));
        bps.push_back(-u);
        bps.push_back(u);
    }
    std::sort(bps.begin(), bps.end());
    auto integrand = [&](double u) {
        double s = t * std::sqrt(std::max(0.0, 1.0 - u * u));
        return ball_fraction(2, s, xs, w);
    };
    return 0.5 * integrate(integrand, u0, u1, 16, 2, bps);
}

double piece_fraction(int d, const Piece& P, double t, double xs, double xd) {
    const double D = std::hypot(xs, xd - P.center);
    switch (P.shape) {
    case Piece::Shape::Ball: return ball_fraction(d, t, D, P.outer);
    case Piece::Shape::Shell: return ball_fraction(d, t, D, P.outer) - ball_fraction(d, t, D, P.inner);
    case Piece::Shape::Plate: {
        double bound = std::hypot(P.half_perp, P.half_axis);
        if (std::fabs(t - D) >= bound) return 0.0;
        return d == 2 ? plate_fraction_2d(t, xs, xd, P) : plate_fraction_3d(t, xs, xd, P);
    }
    }
    return 0.0;
}

double stein_cap(int j) { return std::ldexp(1.0, -j - 4); }

double stein_profile(int d, int j, double rho) {
    if (rho > kSteinRadius) return 0.0;
    rho = std::max(rho, stein_cap(j));
    double l = std::log(1.0 / rho);
    return std::pow(rho, 1.0 - d) / (l * std::log(l));
}

// average of the radial Stein profile over the sphere of radius t about a point at distance D from 0
double stein_average(int d, int j, double t, double D) {
    if (t - D >= kSteinRadius || D - t >= kSteinRadius) return 0.0;
    const double cap = stein_cap(j);
    if (d == 3) {
        double lo = std::fabs(D - t), hi = std::min(D + t, kSteinRadius);
        if (hi <= lo) return 0.0;
        std::vector<double> bps;
        if (cap > lo && cap < hi) bps.push_back(cap);
        double v = integrate([&](double rho) { return stein_profile(3, j, rho) * rho; }, lo, hi, 16, 8, bps);
        return v / (2.0 * t * D);
    }
    // d = 2: rho(phi)^2 = D^2 + t^2 - 2 t D cos(phi), phi in [0, pi]
    auto phi_at = [&](double rho) {
        double a = (D * D + t * t - rho * rho) / (2.0 * t * D);
        return std::acos(std::clamp(a, -1.0, 1.0));
    };
    double phimax = phi_at(kSteinRadius);
    if (phimax <= 0.0) return 0.0;
    std::vector<double> bps;
    double pc = phi_at(cap);
    if (pc > 0.0 && pc < phimax) bps.push_back(pc);
    double v = integrate(
        [&](double phi) {
            double rho = std::sqrt(std::max(0.0, D * D + t * t - 2.0 * t * D * std::cos(phi)));
            return stein_profile(2, j, rho);
        },
        0.0, phimax, 16, 8, bps);
    return v / kPi;
}

void check_dimension(int d) {
    if (d != 2 && d != 3) fail(ErrorCode::InvalidInput, "closed-form averages implemented for d = 2 and d = 3");
}

// midpoint samples (|x'|, x_d, weight) of the evaluation region, weights summing to its exact volume
struct RegionSample {
    double s, xd, w;
};

std::vector<RegionSample> region_samples(const ExampleSpec& e, int K) {
    const int d = e.d;
    std::vector<RegionSample> out;
    auto cylinder = [&](double a, double z0, double z1) {
        double ds = a / K, dz = (z1 - z0) / K;
        for (int i = 0; i < K; ++i)
            for (int k = 0; k < K; ++k) {
                double s = (i + 0.5) * ds;
                double w = d == 2 ? 2.0 * ds * dz : 2.0 * kPi * s * ds * dz;
                out.push_back({s, z0 + (k + 0.5) * dz, w});
            }
        return d == 2 ? 2.0 * a * (z1 - z0) : kPi * a * a * (z1 - z0);
    };
    auto ball = [&](double rho) {
        double ds = rho / K, dz = 2.0 * rho / (2 * K);
        for (int i = 0; i < K; ++i)
            for (int k = 0; k < 2 * K; ++k) {
                double s = (i + 0.5) * ds, z = -rho + (k + 0.5) * dz;
                if (s * s + z * z > rho * rho) continue;
                double w = d == 2 ? 2.0 * ds * dz : 2.0 * kPi * s * ds * dz;
                out.push_back({s, z, w});
            }
        return ball_volume(d, rho);
    };
    double volume = 0.0;
    switch (e.kind) {
    case ExampleKind::Disks: volume = cylinder(1.0 / (4.0 * d), 1.0, 1.5); break;
    case ExampleKind::KnappPlates: volume = cylinder(std::exp2(-0.5 * e.j - 2.0), 1.0, 1.5); break;
    case ExampleKind::Knapp: volume = cylinder(std::exp2(-0.5 * e.j), 1.0, 2.0); break;
    case ExampleKind::AlternatingShells: volume = ball(std::ldexp(1.0, -e.j - 5)); break;
    case ExampleKind::Shell0: volume = ball(std::ldexp(1.0, -e.j - 2)); break;
    case ExampleKind::Stein: {
        // radial: one sample per radius on the axis
        const int R = 4 * K;
        const double r0 = 1.25, r1 = 1.75, dr = (r1 - r0) / R;
        for (int i = 0; i < R; ++i) {
            double rho = r0 + (i + 0.5) * dr;
            out.push_back({0.0, rho, sphere_area(d) * std::pow(rho, d - 1) * dr});
        }
        volume = ball_volume(d, r1) - ball_volume(d, r0);
        break;
    }
    }
    double sum = 0.0;
    for (const auto& s : out) sum += s.w;
    for (auto& s : out) s.w *= volume / sum;
    return out;
}

} // namespace

const char* example_name(ExampleKind k) {
    switch (k) {
    case ExampleKind::Stein: return "Stein";
    case ExampleKind::Shell0: return "Shell0";
    case ExampleKind::Knapp: return "Knapp";
    case ExampleKind::Disks: return "Disks";
    case ExampleKind::KnappPlates: return "KnappPlates";
    case ExampleKind::AlternatingShells: return "AlternatingShells";
    }
    return "?";
}

ExampleKind parse_example_kind(const std::string& name) {
    for (auto k : {ExampleKind::Stein, ExampleKind::Shell0, ExampleKind::Knapp, ExampleKind::Disks,
                   ExampleKind::KnappPlates, ExampleKind::AlternatingShells})
        if (name == example_name(k)) return k;
    fail(ErrorCode::InvalidInput, "unknown example kind: " + name);
}

bool Piece::contains(const double* y, int d) const {
    double perp2 = 0.0;
    for (int a = 0; a < d - 1; ++a) perp2 += y[a] * y[a];
    double axis = y[d - 1] - center;
    switch (shape) {
    case Shape::Ball: return perp2 + axis * axis <= outer * outer;
    case Shape::Shell: {
        double r2 = perp2 + axis * axis;
        return r2 >= inner * inner && r2 <= outer * outer;
    }
    case Shape::Plate: return perp2 <= half_perp * half_perp && std::fabs(axis) <= half_axis;
    }
    return false;
}

double Piece::volume(int d) const {
    switch (shape) {
    case Shape::Ball: return ball_volume(d, outer);
    case Shape::Shell: return ball_volume(d, outer) - ball_volume(d, inner);
    case Shape::Plate: return ball_volume(d - 1, half_perp) * 2.0 * half_axis;
    }
    return 0.0;
}

int ExampleSpec::count() const {
    switch (kind) {
    case ExampleKind::Disks:
    case ExampleKind::KnappPlates:
    case ExampleKind::AlternatingShells: return j >= 2 ? 1 << (j - 2) : 0;
    default: return 1;
    }
}

std::vector<Piece> ExampleSpec::pieces() const {
    std::vector<Piece> out;
    const int N = count();
    switch (kind) {
    case ExampleKind::Stein: break;
    case ExampleKind::Shell0: {
        Piece p;
        p.shape = Piece::Shape::Shell;
        p.inner = 1.0 - std::ldexp(1.0, -j - 2);
        p.outer = 1.0 + std::ldexp(1.0, -j - 2);
        out.push_back(p);
        break;
    }
    case ExampleKind::Knapp: {
        Piece p;
        p.shape = Piece::Shape::Plate;
        p.half_perp = std::exp2(-0.5 * j);
        p.half_axis = std::ldexp(1.0, -j);
        out.push_back(p);
        break;
    }
    case ExampleKind::Disks:
        for (int n = 1; n <= N; ++n) {
            Piece p;
            p.shape = Piece::Shape::Ball;
            p.center = -n * std::ldexp(1.0, -j);
            p.outer = std::ldexp(1.0, -j - 4);
            p.sign = (n % 2 == 0) ? 1 : -1;
            out.push_back(p);
        }
        break;
    case ExampleKind::KnappPlates:
        for (int n = 1; n <= N; ++n) {
            Piece p;
            p.shape = Piece::Shape::Plate;
            p.center = -n * std::ldexp(1.0, -j);
            p.half_perp = std::exp2(-0.5 * j - 2.0);
            p.half_axis = std::ldexp(1.0, -j - 4);
            p.sign = (n % 2 == 0) ? 1 : -1;
            out.push_back(p);
        }
        break;
    case ExampleKind::AlternatingShells:
        for (int n = 1; n <= N; ++n) {
            Piece p;
            p.shape = Piece::Shape::Shell;
            double radius = 1.0 + n * std::ldexp(1.0, -j);
            p.inner = radius - std::ldexp(1.0, -j - 2);
            p.outer = radius + std::ldexp(1.0, -j - 2);
            p.sign = (n % 2 == 0) ? 1 : -1;
            out.push_back(p);
        }
        break;
    }
    return out;
}

double ExampleSpec::value(const double* y) const {
    if (kind == ExampleKind::Stein) {
        double s = 0.0;
        for (int a = 0; a < d; ++a) s += y[a] * y[a];
        return stein_profile(d, j, std::sqrt(s));
    }
    for (const auto& p : pieces())
        if (p.contains(y, d)) return p.sign;
    return 0.0;
}

double ExampleSpec::lp_norm(double p) const {
    if (!(p >= 1.0)) fail(ErrorCode::InvalidExponent, "p must be >= 1");
    if (kind == ExampleKind::Stein) {
        if (std::isinf(p)) return stein_profile(d, j, 0.0);
        const double cap = stein_cap(j);
        double v = integrate([&](double rho) { return std::pow(stein_profile(d, j, rho), p) * std::pow(rho, d - 1); },
                             0.0, kSteinRadius, 16, 16, {cap});
        return std::pow(sphere_area(d) * v, 1.0 / p);
    }
    auto ps = pieces();
    if (ps.empty()) return 0.0;
    if (std::isinf(p)) return 1.0;
    double vol = 0.0;
    for (const auto& piece : ps) vol += piece.volume(d);
    return std::pow(vol, 1.0 / p);
}

double feature_size(const ExampleSpec& spec) { return std::ldexp(1.0, -spec.j - 4); }

GridFunction generate(const ExampleSpec& spec, const GridSpec& grid) {
    grid.validate();
    if (grid.d != spec.d) fail(ErrorCode::ShapeMismatch, "grid dimension differs from example dimension");
    if (spec.count() < 1) fail(ErrorCode::Unresolvable, "example is empty at this j");
    if (feature_size(spec) < 2.0 * grid.h()) fail(ErrorCode::Unresolvable, "feature 2^{-j-4} is below two grid cells");
    auto pieces = spec.pieces();
    GridFunction f = GridFunction::sample(grid, [&](const double* y) -> cplx {
        if (spec.kind == ExampleKind::Stein) return spec.value(y);
        for (const auto& p : pieces)
            if (p.contains(y, spec.d)) return static_cast<double>(p.sign);
        return 0.0;
    });
    bool any = false;
    for (const auto& z : f.values())
        if (z != 0.0) {
            any = true;
            break;
        }
    if (!any) fail(ErrorCode::Unresolvable, "rasterized example is identically zero");
    return f;
}

double average_exact(const ExampleSpec& spec, double t, const double* x) {
    check_dimension(spec.d);
    if (!(t > 0.0)) fail(ErrorCode::OutOfDomain, "sphere radius must be positive");
    const int d = spec.d;
    double perp2 = 0.0;
    for (int a = 0; a < d - 1; ++a) perp2 += x[a] * x[a];
    const double xs = std::sqrt(perp2), xd = x[d - 1];
    if (spec.kind == ExampleKind::Stein) return stein_average(d, spec.j, t, std::hypot(xs, xd));
    double acc = 0.0;
    for (const auto& p : spec.pieces()) acc += p.sign * piece_fraction(d, p, t, xs, xd);
    return acc;
}

double predicted_slope(ExampleKind kind, int d, double p, double q, double r) {
    const double ip = 1.0 / p, iq = 1.0 / q, ir = 1.0 / r;
    switch (kind) {
    case ExampleKind::Stein: fail(ErrorCode::NoPrediction, "Stein's example diverges without a rate");
    case ExampleKind::Shell0: return ip - d * iq;
    case ExampleKind::Knapp: return 0.5 * ((d + 1) * ip - (d - 1) * (1.0 + iq));
    case ExampleKind::Disks: return ir - (d - 1) * (1.0 - ip);
    case ExampleKind::KnappPlates: return ir - 0.5 * (d - 1) * (iq + 1.0 - ip);
    case ExampleKind::AlternatingShells: return ir - d * iq;
    }
    return 0.0;
}

int scaling_time_samples(int j, int M) {
    const long need = (1L << (j + 5)) + 1;
    if (M == 0) return static_cast<int>(need);
    if (M < need) fail(ErrorCode::Unresolvable, "time sampling coarser than half the feature size 2^{-j-4}");
    return M;
}

double region_variation_norm(const ExampleSpec& spec, double q, double r, int M, int K) {
    check_dimension(spec.d);
    if (!(q >= 1.0)) fail(ErrorCode::InvalidExponent, "q must be >= 1");
    if (!(r >= 1.0)) fail(ErrorCode::InvalidExponent, "r must be >= 1");
    if (spec.count() < 1) fail(ErrorCode::Unresolvable, "example is empty at this j");
    auto samples = region_samples(spec, K);
    const auto pieces = spec.pieces();
    const auto times = uniform_times(1.0, 2.0, M);
    std::vector<double> V(samples.size());
    parallel_for(samples.size(), [&](std::size_t begin, std::size_t end, int) {
        std::vector<double> path(times.size());
        double x[3] = {0.0, 0.0, 0.0};
        for (std::size_t i = begin; i < end; ++i) {
            x[0] = samples[i].s;
            x[spec.d - 1] = samples[i].xd;
            for (std::size_t k = 0; k < times.size(); ++k) {
                if (spec.kind == ExampleKind::Stein) {
                    path[k] = average_exact(spec, times[k], x);
                    continue;
                }
                double acc = 0.0;
                for (const auto& p : pieces) acc += p.sign * piece_fraction(spec.d, p, times[k], samples[i].s, samples[i].xd);
                path[k] = acc;
            }
            V[i] = variation_real(path.data(), path.size(), r);
        }
    });
    if (std::isinf(q)) return *std::max_element(V.begin(), V.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < V.size(); ++i) acc += samples[i].w * std::pow(V[i], q);
    return std::pow(acc, 1.0 / q);
}

ScalingReport run_scaling(ExampleKind kind, int d, const ScalingOptions& o) {
    check_dimension(d);
    if (o.jmax - o.jmin + 1 < 4) fail(ErrorCode::InvalidInput, "slope fit needs at least four levels");
    if (o.region_samples < 1) fail(ErrorCode::InvalidInput, "region_samples must be positive");
    ScalingReport rep;
    rep.kind = kind;
    rep.d = d;
    rep.p = o.p;
    rep.q = o.q;
    rep.r = o.r;
    bool has_rate = kind != ExampleKind::Stein;
    rep.predicted = has_rate ? predicted_slope(kind, d, o.p, o.q, o.r) : std::numeric_limits<double>::quiet_NaN();
    for (int j = o.jmin; j <= o.jmax; ++j) scaling_time_samples(j, o.M);
    for (int j = o.jmin; j <= o.jmax; ++j) {
        ExampleSpec spec{kind, d, j};
        if (spec.count() < 1) fail(ErrorCode::Unresolvable, "example is empty at this j");
        const int M = scaling_time_samples(j, o.M);
        double num = region_variation_norm(spec, o.q, o.r, M, o.region_samples);
        double den = spec.lp_norm(o.p);
        if (!(num > 0.0)) fail(ErrorCode::Unresolvable, "variation vanishes on the evaluation region");
        rep.j.push_back(j);
        rep.time_samples.push_back(M);
        rep.numerator.push_back(num);
        rep.f_norm.push_back(den);
        rep.ratio.push_back(num / den);
    }
    rep.fit = fit_log2_slope(rep.j, rep.ratio);
    rep.pass = has_rate ? rep.fit.slope >= rep.predicted - rep.tolerance : rep.ratio.back() > rep.ratio.front();
    return rep;
}

} // namespace sphvar
