#include "sphvar/sparse.hpp"

#include "sphvar/counterexamples.hpp"
#include "sphvar/error.hpp"
#include "sphvar/operators.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace sphvar {

double Cube::volume() const { return std::pow(side, d); }

Cube Cube::child(int index) const {
    Cube c = *this;
    c.side = 0.5 * side;
    for (int a = 0; a < d; ++a)
        if ((index >> (d - 1 - a)) & 1) c.corner[static_cast<std::size_t>(a)] += c.side;
    return c;
}

std::uint64_t Certificate::count() const {
    std::uint64_t c = 0;
    for (const auto& r : runs) c += r.second;
    return c;
}

namespace {

// nearest integer to v when v is within 1e-6 of it
bool lattice_index(double v, std::int64_t& out) {
    double r = std::round(v);
    if (std::fabs(v - r) > 1e-6) return false;
    out = static_cast<std::int64_t>(r);
    return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

} // namespace

SparsityCheck verify_sparsity(const SparseFamily& fam) {
    SparsityCheck res;
    auto bad = [&](std::size_t k, std::string why) {
        res.ok = false;
        res.cube = static_cast<long>(k);
        res.violation = std::move(why);
        return res;
    };
    if (fam.cubes.size() != fam.certificates.size()) return bad(0, "cube and certificate counts differ");
    if (!(fam.cell > 0.0)) return bad(0, "cell size must be positive");
    const int d = fam.d;
    // (row key, begin, end, owner) along the last axis, in global lattice units
    using Segment = std::tuple<std::array<std::int64_t, 3>, std::int64_t, std::int64_t, std::size_t>;
    std::vector<Segment> segments;
    for (std::size_t k = 0; k < fam.cubes.size(); ++k) {
        const Cube& Q = fam.cubes[k];
        if (Q.d != d) return bad(k, "cube dimension differs from family dimension");
        std::int64_t m = 0;
        if (!(Q.side > 0.0) || !lattice_index(Q.side / fam.cell, m) || m < 1) return bad(k, "side is not a positive multiple of the cell");
        std::array<std::int64_t, 4> g{};
        for (int a = 0; a < d; ++a)
            if (!lattice_index((Q.corner[static_cast<std::size_t>(a)] - fam.origin[static_cast<std::size_t>(a)]) / fam.cell,
                               g[static_cast<std::size_t>(a)]))
                return bad(k, "corner is off the lattice");
        const std::uint64_t total = ipow(static_cast<std::uint64_t>(m), d);
        std::uint64_t prev_end = 0, count = 0;
        for (const auto& [start, len] : fam.certificates[k].runs) {
            if (len == 0) continue;
            if (start < prev_end) return bad(k, "certificate runs overlap or are unsorted");
            if (start + len > total) return bad(k, "certificate leaves its cube");
            prev_end = start + len;
            count += len;
            std::uint64_t idx = start, left = len;
            while (left > 0) {
                std::uint64_t row = idx / static_cast<std::uint64_t>(m), col = idx % static_cast<std::uint64_t>(m);
                std::uint64_t take = std::min<std::uint64_t>(left, static_cast<std::uint64_t>(m) - col);
                std::array<std::int64_t, 3> key{0, 0, 0};
                std::uint64_t rest = row;
                for (int a = d - 2; a >= 0; --a) {
                    key[static_cast<std::size_t>(a)] =
                        g[static_cast<std::size_t>(a)] + static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(m));
                    rest /= static_cast<std::uint64_t>(m);
                }
                std::int64_t b = g[static_cast<std::size_t>(d - 1)] + static_cast<std::int64_t>(col);
                segments.emplace_back(key, b, b + static_cast<std::int64_t>(take), k);
                idx += take;
                left -= take;
            }
        }
        if (2 * count < total) return bad(k, "certificate covers less than half of its cube");
    }
    std::sort(segments.begin(), segments.end());
    for (std::size_t i = 1; i < segments.size(); ++i) {
        const auto& [k0, b0, e0, o0] = segments[i - 1];
        const auto& [k1, b1, e1, o1] = segments[i];
        (void)b0;
        (void)e1;
        if (k0 == k1 && b1 < e0) return bad(std::max(o0, o1), "certificates of two cubes intersect");
    }
    return res;
}

GridSource::GridSource(const GridFunction& f) : spec_(f.spec()), abs_(f.size()) {
    if (f.domain() != Domain::Space) fail(ErrorCode::ShapeMismatch, "expected a Space-domain function");
    for (std::size_t i = 0; i < f.size(); ++i) abs_[i] = std::abs(f[i]);
    const std::size_t n1 = static_cast<std::size_t>(spec_.n) + 1;
    count_prefix_.assign(ipow(n1, spec_.d), 0);
    std::vector<std::int64_t>& P = count_prefix_;
    int m[4];
    for (std::size_t i = 0; i < abs_.size(); ++i) {
        f.unravel(i, m);
        std::size_t idx = 0;
        for (int a = 0; a < spec_.d; ++a) idx = idx * n1 + static_cast<std::size_t>(m[a] + 1);
        P[idx] = abs_[i] != 0.0 ? 1 : 0;
    }
    std::size_t stride = 1;
    for (int a = spec_.d - 1; a >= 0; --a) {
        for (std::size_t idx = 0; idx < P.size(); ++idx)
            if ((idx / stride) % n1 != 0) P[idx] += P[idx - stride];
        stride *= n1;
    }
}

const std::vector<long double>& GridSource::prefix_for(double s) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = prefix_.find(s);
    if (it != prefix_.end()) return *it->second;
    const std::size_t n1 = static_cast<std::size_t>(spec_.n) + 1;
    auto P = std::make_shared<std::vector<long double>>(ipow(n1, spec_.d), 0.0L);
    const std::size_t n = static_cast<std::size_t>(spec_.n);
    for (std::size_t i = 0; i < abs_.size(); ++i) {
        std::size_t rest = i, idx = 0, mul = 1;
        for (int a = spec_.d - 1; a >= 0; --a) {
            idx += (rest % n + 1) * mul;
            rest /= n;
            mul *= n1;
        }
        (*P)[idx] = abs_[i] == 0.0 ? 0.0L : static_cast<long double>(std::pow(abs_[i], s));
    }
    std::size_t stride = 1;
    for (int a = spec_.d - 1; a >= 0; --a) {
        for (std::size_t idx = 0; idx < P->size(); ++idx)
            if ((idx / stride) % n1 != 0) (*P)[idx] += (*P)[idx - stride];
        stride *= n1;
    }
    prefix_.emplace(s, P);
    return *P;
}

template <class T> T GridSource::box_sum(const std::vector<T>& prefix, const Cube& q) const {
    const std::size_t n1 = static_cast<std::size_t>(spec_.n) + 1;
    const double h = spec_.h();
    std::int64_t lo[4], hi[4];
    for (int a = 0; a < spec_.d; ++a) {
        double c = (q.corner[static_cast<std::size_t>(a)] + spec_.L) / h;
        std::int64_t i0 = static_cast<std::int64_t>(std::llround(c));
        std::int64_t i1 = i0 + static_cast<std::int64_t>(std::llround(q.side / h));
        lo[a] = std::clamp<std::int64_t>(i0, 0, spec_.n);
        hi[a] = std::clamp<std::int64_t>(i1, 0, spec_.n);
        if (hi[a] <= lo[a]) return T(0);
    }
    T acc = 0;
    for (int c = 0; c < (1 << spec_.d); ++c) {
        std::size_t idx = 0;
        int parity = 0;
        for (int a = 0; a < spec_.d; ++a) {
            bool upper = (c >> a) & 1;
            idx = idx * n1 + static_cast<std::size_t>(upper ? hi[a] : lo[a]);
            if (!upper) ++parity;
        }
        if (parity & 1) acc -= prefix[idx];
        else acc += prefix[idx];
    }
    return acc;
}

double GridSource::power_integral(const Cube& q, double s) const {
    if (vanishes_on(q)) return 0.0;
    long double v = box_sum(prefix_for(s), q);
    return std::max(0.0, static_cast<double>(v)) * spec_.cell_volume();
}

bool GridSource::vanishes_on(const Cube& q) const { return box_sum(count_prefix_, q) == 0; }

bool GridSource::support_box(double* lo, double* hi) const {
    const std::size_t n = static_cast<std::size_t>(spec_.n);
    std::int64_t mn[4], mx[4];
    for (int a = 0; a < spec_.d; ++a) {
        mn[a] = spec_.n;
        mx[a] = -1;
    }
    bool any = false;
    for (std::size_t i = 0; i < abs_.size(); ++i) {
        if (abs_[i] == 0.0) continue;
        any = true;
        std::size_t rest = i;
        for (int a = spec_.d - 1; a >= 0; --a) {
            auto m = static_cast<std::int64_t>(rest % n);
            rest /= n;
            mn[a] = std::min(mn[a], m);
            mx[a] = std::max(mx[a], m);
        }
    }
    if (!any) return false;
    for (int a = 0; a < spec_.d; ++a) {
        lo[a] = spec_.coordinate(static_cast<int>(mn[a]));
        hi[a] = spec_.coordinate(static_cast<int>(mx[a])) + spec_.h();
    }
    return true;
}

double disk_rectangle_area(double cx, double cy, double R, double x0, double x1, double y0, double y1) {
    if (!(R > 0.0) || x1 <= x0 || y1 <= y0) return 0.0;
    const double a = std::max(x0, cx - R), b = std::min(x1, cx + R);
    if (b <= a) return 0.0;
    auto G = [R](double u) {
        u = std::clamp(u, -R, R);
        return 0.5 * (u * std::sqrt(std::max(0.0, R * R - u * u)) + R * R * std::asin(u / R));
    };
    std::vector<double> cuts{a, b};
    for (double y : {y0, y1}) {
        double dy = y - cy;
        if (std::fabs(dy) >= R) continue;
        double w = std::sqrt(R * R - dy * dy);
        for (double x : {cx - w, cx + w})
            if (x > a && x < b) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double u = cuts[i], v = cuts[i + 1];
        if (v <= u) continue;
        double mid = 0.5 * (u + v);
        double S = std::sqrt(std::max(0.0, R * R - (mid - cx) * (mid - cx)));
        bool top_arc = cy + S < y1, bottom_arc = cy - S > y0;
        double top_mid = top_arc ? cy + S : y1, bottom_mid = bottom_arc ? cy - S : y0;
        if (top_mid <= bottom_mid) continue;
        double arc = G(v - cx) - G(u - cx);
        double top = top_arc ? cy * (v - u) + arc : y1 * (v - u);
        double bottom = bottom_arc ? cy * (v - u) - arc : y0 * (v - u);
        area += top - bottom;
    }
    return area;
}

void ShapeSource::add_disk(double cx, double cy, double radius, double amplitude) {
    if (d_ != 2) fail(ErrorCode::InvalidInput, "disks are supported in d = 2 only");
    Shape s;
    s.disk = true;
    s.cx = cx;
    s.cy = cy;
    s.radius = radius;
    s.amplitude = std::fabs(amplitude);
    s.lo = {cx - radius, cy - radius, 0.0, 0.0};
    s.hi = {cx + radius, cy + radius, 0.0, 0.0};
    shapes_.push_back(s);
}

void ShapeSource::add_box(const std::array<double, 4>& lo, const std::array<double, 4>& hi, double amplitude) {
    Shape s;
    s.lo = lo;
    s.hi = hi;
    s.amplitude = std::fabs(amplitude);
    shapes_.push_back(s);
}

double ShapeSource::overlap(const Shape& s, const Cube& q) const {
    if (s.disk)
        return disk_rectangle_area(s.cx, s.cy, s.radius, q.corner[0], q.corner[0] + q.side, q.corner[1],
                                   q.corner[1] + q.side);
    double v = 1.0;
    for (int a = 0; a < d_; ++a) {
        auto i = static_cast<std::size_t>(a);
        double w = std::min(s.hi[i], q.corner[i] + q.side) - std::max(s.lo[i], q.corner[i]);
        if (w <= 0.0) return 0.0;
        v *= w;
    }
    return v;
}

double ShapeSource::power_integral(const Cube& q, double s) const {
    double acc = 0.0;
    for (const auto& sh : shapes_) {
        if (sh.amplitude == 0.0) continue;
        double o = overlap(sh, q);
        if (o > 0.0) acc += std::pow(sh.amplitude, s) * o;
    }
    return acc;
}

bool ShapeSource::vanishes_on(const Cube& q) const {
    for (const auto& sh : shapes_)
        if (sh.amplitude != 0.0 && overlap(sh, q) > 0.0) return false;
    return true;
}

bool ShapeSource::support_box(double* lo, double* hi) const {
    bool any = false;
    for (const auto& sh : shapes_) {
        if (sh.amplitude == 0.0) continue;
        for (int a = 0; a < d_; ++a) {
            auto i = static_cast<std::size_t>(a);
            lo[a] = any ? std::min(lo[a], sh.lo[i]) : sh.lo[i];
            hi[a] = any ? std::max(hi[a], sh.hi[i]) : sh.hi[i];
        }
        any = true;
    }
    return any;
}

double dual_exponent(double q) {
    if (!(q > 1.0)) fail(ErrorCode::InvalidExponent, "q must exceed 1 for the dual exponent");
    return std::isinf(q) ? 1.0 : q / (q - 1.0);
}

double cube_average(const MeasureSource& f, const Cube& q, double s) {
    return std::pow(f.power_integral(q, s) / q.volume(), 1.0 / s);
}

namespace {

void check_form_exponents(double p, double q) {
    if (!(p >= 1.0) || std::isinf(p)) fail(ErrorCode::InvalidExponent, "p must be finite and >= 1");
    dual_exponent(q);
}

Certificate certificate_for(const Cube& Q, const std::vector<Cube>& children, double cell) {
    const int d = Q.d;
    const auto m = static_cast<std::uint64_t>(std::llround(Q.side / cell));
    struct Box {
        std::uint64_t lo[4], hi[4];
    };
    std::vector<Box> boxes;
    for (const auto& c : children) {
        Box b{};
        auto w = static_cast<std::uint64_t>(std::llround(c.side / cell));
        for (int a = 0; a < d; ++a) {
            auto i = static_cast<std::size_t>(a);
            b.lo[a] = static_cast<std::uint64_t>(std::llround((c.corner[i] - Q.corner[i]) / cell));
            b.hi[a] = b.lo[a] + w;
        }
        boxes.push_back(b);
    }
    Certificate cert;
    const std::uint64_t rows = ipow(m, d - 1);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cuts;
    std::uint64_t coords[4];
    for (std::uint64_t row = 0; row < rows; ++row) {
        std::uint64_t rest = row;
        for (int a = d - 2; a >= 0; --a) {
            coords[a] = rest % m;
            rest /= m;
        }
        cuts.clear();
        for (const auto& b : boxes) {
            bool hit = true;
            for (int a = 0; a < d - 1 && hit; ++a) hit = coords[a] >= b.lo[a] && coords[a] < b.hi[a];
            if (hit) cuts.emplace_back(b.lo[d - 1], b.hi[d - 1]);
        }
        std::sort(cuts.begin(), cuts.end());
        std::uint64_t pos = 0;
        auto emit = [&](std::uint64_t b, std::uint64_t e) {
            if (e <= b) return;
            std::uint64_t start = row * m + b;
            if (!cert.runs.empty() && cert.runs.back().first + cert.runs.back().second == start)
                cert.runs.back().second += e - b;
            else
                cert.runs.emplace_back(start, e - b);
        };
        for (const auto& [b, e] : cuts) {
            emit(pos, b);
            pos = std::max(pos, e);
        }
        emit(pos, m);
    }
    return cert;
}

SparseFamily build_from_root(const MeasureSource& f1, const MeasureSource& f2, double p, double q,
                             const SparseOptions& o, const std::array<double, 4>& origin, const Cube& root) {
    const double qd = dual_exponent(q);
    const double cell = o.cell;
    const double min_side = o.min_side > 0.0 ? o.min_side : 4.0 * cell;
    SparseFamily fam;
    fam.d = root.d;
    fam.cell = cell;
    fam.origin = origin;
    std::vector<Cube> work{root};
    while (!work.empty()) {
        Cube Q = work.back();
        work.pop_back();
        const double a1 = cube_average(f1, Q, p), a2 = cube_average(f2, Q, qd);
        std::vector<Cube> selected, stack;
        if (Q.side * 0.5 >= min_side)
            for (int c = 0; c < (1 << Q.d); ++c) stack.push_back(Q.child(c));
        while (!stack.empty()) {
            Cube S = stack.back();
            stack.pop_back();
            bool z1 = f1.vanishes_on(S), z2 = f2.vanishes_on(S);
            if (z1 && z2) continue;
            bool stop = (!z1 && cube_average(f1, S, p) > o.threshold * a1) ||
                        (!z2 && cube_average(f2, S, qd) > o.threshold * a2);
            if (stop) {
                selected.push_back(S);
            } else if (S.side * 0.5 >= min_side) {
                for (int c = 0; c < (1 << S.d); ++c) stack.push_back(S.child(c));
            }
        }
        std::sort(selected.begin(), selected.end(), [](const Cube& x, const Cube& y) { return x.corner < y.corner; });
        fam.cubes.push_back(Q);
        fam.certificates.push_back(certificate_for(Q, selected, cell));
        for (auto it = selected.rbegin(); it != selected.rend(); ++it) work.push_back(*it);
    }
    return fam;
}

Cube root_cube(const MeasureSource& f1, const MeasureSource& f2, double cell, const std::array<double, 4>& origin) {
    const int d = f1.dimension();
    double lo1[4], hi1[4], lo2[4], hi2[4];
    bool s1 = f1.support_box(lo1, hi1), s2 = f2.support_box(lo2, hi2);
    if (!s1 || !s2) fail(ErrorCode::DegenerateInput, "sparse family needs two nonzero functions");
    Cube root;
    root.d = d;
    double extent = cell;
    for (int a = 0; a < d; ++a) {
        auto i = static_cast<std::size_t>(a);
        double lo = std::min(lo1[a], lo2[a]), hi = std::max(hi1[a], hi2[a]);
        root.corner[i] = origin[i] + std::floor((lo - origin[i]) / cell + 1e-9) * cell;
        extent = std::max(extent, hi - root.corner[i]);
    }
    int m = static_cast<int>(std::ceil(std::log2(extent / cell) - 1e-9));
    root.side = std::ldexp(cell, std::max(0, m));
    return root;
}

} // namespace

double sparse_form(const SparseFamily& fam, const MeasureSource& f1, const MeasureSource& f2, double p, double q) {
    check_form_exponents(p, q);
    const double qd = dual_exponent(q);
    double acc = 0.0;
    for (const auto& Q : fam.cubes) {
        if (f1.vanishes_on(Q) || f2.vanishes_on(Q)) continue;
        acc += Q.volume() * cube_average(f1, Q, p) * cube_average(f2, Q, qd);
    }
    return acc;
}

SparseFamily build_sparse_family(const MeasureSource& f1, const MeasureSource& f2, double p, double q,
                                 const SparseOptions& options, const std::array<double, 4>& origin) {
    check_form_exponents(p, q);
    if (f1.dimension() != f2.dimension()) fail(ErrorCode::ShapeMismatch, "sources differ in dimension");
    if (!(options.cell > 0.0)) fail(ErrorCode::InvalidInput, "sparse construction needs a positive cell size");
    if (!(options.threshold > 1.0)) fail(ErrorCode::InvalidInput, "stopping threshold must exceed 1");
    return build_from_root(f1, f2, p, q, options, origin, root_cube(f1, f2, options.cell, origin));
}

SparseFamily build_sparse_family(const GridFunction& f1, const GridFunction& f2, double p, double q,
                                 const SparseOptions& options) {
    if (!(f1.spec() == f2.spec())) fail(ErrorCode::ShapeMismatch, "functions live on different grids");
    check_form_exponents(p, q);
    const GridSpec& s = f1.spec();
    SparseOptions o = options;
    if (o.cell == 0.0) o.cell = s.h();
    if (!(o.threshold > 1.0)) fail(ErrorCode::InvalidInput, "stopping threshold must exceed 1");
    GridSource g1(f1), g2(f2);
    std::array<double, 4> origin{-s.L, -s.L, -s.L, -s.L};
    Cube root = root_cube(g1, g2, o.cell, origin);
    for (int a = 0; a < s.d; ++a) {
        auto i = static_cast<std::size_t>(a);
        if (root.side >= 2.0 * s.L) root.corner[i] = -s.L;
        else root.corner[i] = std::min(root.corner[i], s.L - root.side);
    }
    root.side = std::min(root.side, 2.0 * s.L);
    return build_from_root(g1, g2, p, q, o, origin, root);
}

DominationResult domination_check(const GridFunction& f1, const GridFunction& f2, double p, double q,
                                  const RegionSpec& rs, const DominationOptions& options) {
    if (!(f1.spec() == f2.spec())) fail(ErrorCode::ShapeMismatch, "functions live on different grids");
    if (rs.d != f1.spec().d) fail(ErrorCode::ShapeMismatch, "region dimension differs from grid dimension");
    check_form_exponents(p, q);
    bool z1 = true, z2 = true;
    for (std::size_t i = 0; i < f1.size(); ++i) {
        if (f1[i].imag() != 0.0 || f1[i].real() < 0.0 || f2[i].imag() != 0.0 || f2[i].real() < 0.0)
            fail(ErrorCode::InvalidInput, "domination check needs nonnegative real functions");
        z1 = z1 && f1[i] == 0.0;
        z2 = z2 && f2[i] == 0.0;
    }
    if (z1 || z2) fail(ErrorCode::DegenerateInput, "domination check needs two nonzero functions");
    RegionPolygon poly = region(rs);
    if (!poly.contains_interior({1.0 / p, 1.0 / q}))
        fail(ErrorCode::RegionViolation, "(1/p, 1/q) is not interior to the region");
    // only the support of f2 enters the pairing
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < f2.size(); ++i)
        if (f2[i].real() != 0.0) support.push_back(i);
    std::vector<double> V = pooled_variation_at(f1, rs.r_value(), options.kmin, options.kmax, options.M, support);
    double pairing = 0.0;
    for (std::size_t k = 0; k < support.size(); ++k) pairing += V[k] * f2[support[k]].real();
    pairing *= f1.spec().cell_volume();
    SparseFamily fam = build_sparse_family(f1, f2, p, q, options.sparse);
    GridSource g1(f1), g2(f2);
    DominationResult res;
    res.pairing = pairing;
    res.form = sparse_form(fam, g1, g2, p, q);
    res.ratio = res.pairing / res.form;
    res.cubes = fam.cubes.size();
    return res;
}

GridFunction sample_bumps(const GridSpec& spec, const std::vector<Bump>& bumps) {
    return GridFunction::sample(spec, [&](const double* x) -> cplx {
        double acc = 0.0;
        for (const auto& b : bumps) {
            double r2 = 0.0;
            for (int a = 0; a < spec.d; ++a) {
                double u = x[a] - b.center[static_cast<std::size_t>(a)];
                r2 += u * u;
            }
            double s = r2 / (b.radius * b.radius);
            if (s < 1.0) acc += b.amplitude * std::exp(1.0 - 1.0 / (1.0 - s));
        }
        return acc;
    });
}

std::vector<Bump> random_bumps(int d, int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(-1.5, 1.5), rad(0.3, 1.0), amp(0.5, 2.0);
    std::vector<Bump> out;
    for (int k = 0; k < count; ++k) {
        Bump b;
        for (int a = 0; a < d; ++a) b.center[static_cast<std::size_t>(a)] = pos(rng);
        b.radius = rad(rng);
        b.amplitude = amp(rng);
        out.push_back(b);
    }
    return out;
}

SharpnessReport sharpness_scaling(double p, double q, double r, int jmin, int jmax, int M) {
    constexpr int d = 2;
    if (jmax - jmin < 2) fail(ErrorCode::InvalidInput, "sharpness scan needs at least 3 levels");
    SharpnessReport rep;
    rep.p = p;
    rep.q = q;
    rep.r = r;
    rep.predicted = (1.0 / r - d + 1.0) + (d - 1.0) / p;
    rep.separation = std::numeric_limits<double>::infinity();
    // R = {|x_1| <= 1/(4d), 1 <= x_2 <= 3/2}
    const double half = 1.0 / (4.0 * d);
    ShapeSource indicator(d);
    indicator.add_box({-half, 1.0, 0.0, 0.0}, {half, 1.5, 0.0, 0.0});
    for (int j = jmin; j <= jmax; ++j) {
        ExampleSpec spec{ExampleKind::Disks, d, j};
        ShapeSource disks(d);
        for (const auto& piece : spec.pieces()) {
            disks.add_disk(0.0, piece.center, piece.outer);
            // nearest point of R to the disk lies on its bottom edge
            double gap = 1.0 - (piece.center + piece.outer);
            rep.separation = std::min(rep.separation, gap);
        }
        int samples = scaling_time_samples(j, M);
        double pairing = region_variation_norm(spec, 1.0, r, samples);
        SparseOptions o;
        o.cell = std::ldexp(1.0, -j - 6);
        SparseFamily fam = build_sparse_family(disks, indicator, p, q, o, {0.0, 0.0, 0.0, 0.0});
        double form = sparse_form(fam, disks, indicator, p, q);
        if (!(form > 0.0)) fail(ErrorCode::DegenerateInput, "sparse form vanished");
        rep.j.push_back(j);
        rep.pairing.push_back(pairing);
        rep.form.push_back(form);
        rep.ratio.push_back(pairing / form);
        rep.cubes.push_back(fam.cubes.size());
    }
    rep.fit = fit_log2_slope(rep.j, rep.ratio);
    rep.pass = std::fabs(rep.fit.slope - rep.predicted) <= rep.tolerance;
    return rep;
}

std::string family_to_json(const SparseFamily& fam) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["d"] = fam.d;
    j["cell"] = fam.cell;
    j["origin"] = std::vector<double>(fam.origin.begin(), fam.origin.begin() + fam.d);
    ordered_json cubes = ordered_json::array();
    for (std::size_t k = 0; k < fam.cubes.size(); ++k) {
        const Cube& Q = fam.cubes[k];
        ordered_json runs = ordered_json::array();
        for (const auto& [start, len] : fam.certificates[k].runs) runs.push_back({start, len});
        cubes.push_back({{"corner", std::vector<double>(Q.corner.begin(), Q.corner.begin() + Q.d)},
                         {"side", Q.side},
                         {"certificate", runs}});
    }
    j["cubes"] = cubes;
    return j.dump(2);
}

} // namespace sphvar
