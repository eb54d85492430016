#include "sphvar/geometry.hpp"

#include "sphvar/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace sphvar {

RegionSpec RegionSpec::finite(int d, Rational r) {
    if (d < 2) fail(ErrorCode::InvalidInput, "dimension must be at least 2");
    if (r < Rational(1)) fail(ErrorCode::InvalidExponent, "variation exponent r must be >= 1, got " + r.str());
    RegionSpec s;
    s.d = d;
    s.r = r;
    s.r_infinite = false;
    return s;
}

RegionSpec RegionSpec::infinite(int d) {
    if (d < 2) fail(ErrorCode::InvalidInput, "dimension must be at least 2");
    RegionSpec s;
    s.d = d;
    s.r = Rational(0);
    s.r_infinite = true;
    return s;
}

RegionSpec RegionSpec::parse(int d, const std::string& r_text) {
    std::string t = r_text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "inf" || t == "infinity" || t == "oo") return infinite(d);
    return finite(d, Rational::parse(r_text));
}

double RegionSpec::r_value() const {
    return r_infinite ? std::numeric_limits<double>::infinity() : r.to_double();
}

std::string RegionSpec::r_str() const { return r_infinite ? "inf" : r.str(); }

Rational RegionSpec::inv_r() const { return r_infinite ? Rational(0) : Rational(1) / r; }

const char* regime_name(Regime regime) {
    switch (regime) {
    case Regime::PentagonLargeR: return "PentagonLargeR";
    case Regime::PentagonMidR: return "PentagonMidR";
    case Regime::QuadSmallR: return "QuadSmallR";
    case Regime::D2LargeR: return "D2LargeR";
    case Regime::D2MidR: return "D2MidR";
    case Regime::Empty: return "Empty";
    }
    return "?";
}

const char* status_name(StatusKind kind) {
    switch (kind) {
    case StatusKind::StrongType: return "StrongType";
    case StatusKind::RestrictedStrongType: return "RestrictedStrongType";
    case StatusKind::RestrictedWeakType: return "RestrictedWeakType";
    case StatusKind::Unbounded: return "Unbounded";
    case StatusKind::OpenProblem: return "OpenProblem";
    }
    return "?";
}

double LinearEquation::residual(ExponentPoint pt) const {
    return a.to_double() * pt.inv_p + b.to_double() * pt.inv_q - c.to_double();
}

bool LinearEquation::holds_exactly(const RationalPoint& pt) const {
    return a * pt.inv_p + b * pt.inv_q == c;
}

namespace {

double norm_ab(const LinearEquation& eq) {
    return std::hypot(eq.a.to_double(), eq.b.to_double());
}

double dist(ExponentPoint u, ExponentPoint v) { return std::hypot(u.inv_p - v.inv_p, u.inv_q - v.inv_q); }

double segment_distance(ExponentPoint x, ExponentPoint u, ExponentPoint v) {
    double dx = v.inv_p - u.inv_p;
    double dy = v.inv_q - u.inv_q;
    double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist(x, u);
    double s = ((x.inv_p - u.inv_p) * dx + (x.inv_q - u.inv_q) * dy) / len2;
    s = std::clamp(s, 0.0, 1.0);
    return dist(x, {u.inv_p + s * dx, u.inv_q + s * dy});
}

struct Draft {
    std::vector<LabeledVertex> vertices;
    // edges[i] joins vertices[i] and vertices[i+1 mod n]
    std::vector<std::pair<LinearEquation, MappingStatus>> edges;
};

MappingStatus st(StatusKind k, std::string src) { return {k, std::move(src)}; }

RationalPoint rp(Rational x, Rational y) { return {x, y}; }

/** Merges coincident consecutive vertices and checks every edge equation exactly. */
RegionPolygon finish(const RegionSpec& spec, Regime regime, Draft draft, MappingStatus interior) {
    std::size_t n = draft.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& eq = draft.edges[i].first;
        if (!eq.holds_exactly(draft.vertices[i].point) || !eq.holds_exactly(draft.vertices[(i + 1) % n].point))
            throw std::logic_error("edge equation does not pass through its endpoints");
    }
    RegionPolygon poly;
    poly.spec = spec;
    poly.regime = regime;
    poly.interior = std::move(interior);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (!keep.empty() && draft.vertices[keep.back()].point == draft.vertices[i].point) {
            draft.vertices[keep.back()].label += "=" + draft.vertices[i].label;
            // the zero-length edge between them disappears; the outgoing edge of i survives
            draft.edges[keep.back()] = draft.edges[i];
            continue;
        }
        keep.push_back(i);
    }
    if (keep.size() > 1 && draft.vertices[keep.front()].point == draft.vertices[keep.back()].point) {
        draft.vertices[keep.front()].label = draft.vertices[keep.back()].label + "=" + draft.vertices[keep.front()].label;
        keep.pop_back();
    }
    for (std::size_t i : keep) poly.vertices.push_back(draft.vertices[i]);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        RegionEdge e;
        e.from = poly.vertices[k].label;
        e.to = poly.vertices[(k + 1) % keep.size()].label;
        e.equation = draft.edges[keep[k]].first;
        e.status = draft.edges[keep[k]].second;
        poly.edges.push_back(std::move(e));
    }
    return poly;
}

RegionPolygon build_large(const RegionSpec& spec) {
    const int d = spec.d;
    const Rational D(d), one(1), ir = spec.inv_r();
    const Rational dm1_d = Rational(d - 1, d);
    Draft g;
    g.vertices = {
        {"P(r)", rp(ir, ir / D), st(StatusKind::StrongType, "large-r closed segment [P(r),Q1(r)]")},
        {"Q1(r)", rp(ir / D, ir / D), st(StatusKind::StrongType, "large-r closed segment [P(r),Q1(r)]")},
        {"Q2", rp(dm1_d, dm1_d), st(StatusKind::RestrictedStrongType, "large-r segment [Q2,Q3)")},
        {"Q3", rp(dm1_d, Rational(1, d)), st(StatusKind::RestrictedWeakType, "large-r endpoints {Q3,Q4}")},
        {"Q4", rp(Rational(d * (d - 1), d * d + 1), Rational(d - 1, d * d + 1)),
         st(StatusKind::RestrictedWeakType, "large-r endpoints {Q3,Q4}")},
    };
    g.edges = {
        {{Rational(0), one, ir / D}, st(StatusKind::StrongType, "large-r closed segment [P(r),Q1(r)]")},
        {{one, -one, Rational(0)}, st(StatusKind::StrongType, "large-r segment [Q1(r),Q2)")},
        {{one, Rational(0), dm1_d}, st(StatusKind::RestrictedStrongType, "large-r segment [Q2,Q3)")},
        {{Rational(d + 1, d - 1), -one, one}, st(StatusKind::StrongType, "large-r open segment (Q4,Q3)")},
        {{one, -D, Rational(0)}, st(StatusKind::StrongType, "large-r segment [P(r),Q4)")},
    };
    return finish(spec, Regime::PentagonLargeR, std::move(g), st(StatusKind::StrongType, "large-r interior"));
}

RegionPolygon build_mid(const RegionSpec& spec) {
    const int d = spec.d;
    const Rational D(d), one(1), ir = spec.inv_r();
    const Rational dm1_d = Rational(d - 1, d);
    const Rational knapp_slope = Rational(d + 1, d - 1);
    Draft g;
    g.vertices = {
        {"Q1(r)", rp(ir / D, ir / D), st(StatusKind::StrongType, "mid-r segments (Q4(r),Q1(r)] and [Q1(r),Q2)")},
        {"Q2", rp(dm1_d, dm1_d), st(StatusKind::RestrictedStrongType, "mid-r segment [Q2,Q3)")},
        {"Q3", rp(dm1_d, Rational(1, d)), st(StatusKind::RestrictedWeakType, "mid-r endpoint Q3")},
        {"P(r)", rp(ir, knapp_slope * ir - one), st(StatusKind::OpenProblem, "mid-r vertex P(r) left open")},
        {"Q4(r)", rp(one - Rational(d + 1, d * (d - 1)) * ir, ir / D),
         st(StatusKind::OpenProblem, "mid-r vertex Q4(r) left open")},
    };
    g.edges = {
        {{one, -one, Rational(0)}, st(StatusKind::StrongType, "mid-r segment [Q1(r),Q2)")},
        {{one, Rational(0), dm1_d}, st(StatusKind::RestrictedStrongType, "mid-r segment [Q2,Q3)")},
        {{knapp_slope, -one, one}, st(StatusKind::OpenProblem, "mid-r segment (Q3,P(r)) left open")},
        {{-one, one, Rational(2) * ir / Rational(d - 1) - one},
         st(StatusKind::OpenProblem, "mid-r segment (P(r),Q4(r)) left open")},
        {{Rational(0), one, ir / D}, st(StatusKind::StrongType, "mid-r segment (Q4(r),Q1(r)]")},
    };
    return finish(spec, Regime::PentagonMidR, std::move(g), st(StatusKind::StrongType, "mid-r interior"));
}

RegionPolygon build_small(const RegionSpec& spec) {
    const int d = spec.d;
    const Rational D(d), one(1), ir = spec.inv_r();
    const Rational s = ir / Rational(d - 1);
    const bool r_one = !spec.r_infinite && spec.r == one && d >= 4;
    Draft g;
    g.vertices = {
        {"Q1(r)", rp(ir / D, ir / D), st(StatusKind::StrongType, "small-r segments (Q4(r),Q1(r)] and [Q1(r),Q2(r))")},
        {"Q2(r)", rp(one - s, one - s),
         r_one ? st(StatusKind::RestrictedStrongType, "r=1 segment [Q2(1),Q3(1))")
               : st(StatusKind::OpenProblem, "small-r segment [Q2(r),Q3(r)] left open")},
        {"Q3(r)", rp(one - s, s),
         r_one ? st(StatusKind::RestrictedWeakType, "r=1 endpoint Q3(1)")
               : st(StatusKind::OpenProblem, "small-r segment [Q3(r),Q4(r)] left open")},
        {"Q4(r)", rp(one - Rational(d + 1, d * (d - 1)) * ir, ir / D),
         st(StatusKind::OpenProblem, "small-r segment [Q3(r),Q4(r)] left open")},
    };
    g.edges = {
        {{one, -one, Rational(0)}, st(StatusKind::StrongType, "small-r segment [Q1(r),Q2(r))")},
        {{one, Rational(0), one - s},
         r_one ? st(StatusKind::RestrictedStrongType, "r=1 segment [Q2(1),Q3(1))")
               : st(StatusKind::OpenProblem, "small-r segment [Q2(r),Q3(r)] left open")},
        {{-one, one, Rational(2) * s - one}, st(StatusKind::OpenProblem, "small-r segment [Q3(r),Q4(r)] left open")},
        {{Rational(0), one, ir / D}, st(StatusKind::StrongType, "small-r segment (Q4(r),Q1(r)]")},
    };
    return finish(spec, Regime::QuadSmallR, std::move(g), st(StatusKind::StrongType, "small-r interior"));
}

RegionPolygon build_d2_large(const RegionSpec& spec) {
    const Rational one(1), two(2), ir = spec.inv_r(), half(1, 2);
    const MappingStatus open = st(StatusKind::OpenProblem, "d=2 boundary outside the open segment (Q1(r),Q2) left open");
    Draft g;
    g.vertices = {
        {"P(r)", rp(ir, ir / two), open},
        {"Q1(r)", rp(ir / two, ir / two), open},
        {"Q2=Q3", rp(half, half), open},
        {"Q4", rp(Rational(2, 5), Rational(1, 5)), open},
    };
    g.edges = {
        {{Rational(0), one, ir / two}, open},
        {{one, -one, Rational(0)}, st(StatusKind::StrongType, "d=2 open segment (Q1(r),Q2)")},
        {{Rational(3), -one, one}, open},
        {{one, -two, Rational(0)}, open},
    };
    return finish(spec, Regime::D2LargeR, std::move(g), st(StatusKind::StrongType, "d=2 large-r interior"));
}

RegionPolygon build_d2_mid(const RegionSpec& spec) {
    const Rational one(1), two(2), ir = spec.inv_r(), half(1, 2);
    const MappingStatus open = st(StatusKind::OpenProblem, "d=2 boundary outside the open segment (Q1(r),Q2) left open");
    Draft g;
    g.vertices = {
        {"Q1(r)", rp(ir / two, ir / two), open},
        {"Q2=Q3", rp(half, half), open},
        {"P(r)", rp(ir, Rational(3) * ir - one), open},
        {"Q4(r)", rp(one - Rational(3, 2) * ir, ir / two), open},
    };
    g.edges = {
        {{one, -one, Rational(0)}, st(StatusKind::StrongType, "d=2 open segment (Q1(r),Q2)")},
        {{Rational(3), -one, one}, open},
        {{-one, one, two * ir - one}, open},
        {{Rational(0), one, ir / two}, open},
    };
    return finish(spec, Regime::D2MidR, std::move(g), st(StatusKind::StrongType, "d=2 mid-r interior"));
}

/** Per-edge sign making the interior side negative. */
std::vector<double> edge_orientation(const RegionPolygon& poly) {
    double cx = 0, cy = 0;
    for (const auto& v : poly.vertices) {
        cx += v.point.inv_p.to_double();
        cy += v.point.inv_q.to_double();
    }
    cx /= static_cast<double>(poly.vertices.size());
    cy /= static_cast<double>(poly.vertices.size());
    std::vector<double> sign;
    for (const auto& e : poly.edges) sign.push_back(e.equation.residual({cx, cy}) > 0 ? -1.0 : 1.0);
    return sign;
}

double max_outside_distance(const RegionPolygon& poly, ExponentPoint pt) {
    auto sign = edge_orientation(poly);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.edges.size(); ++i) {
        double s = sign[i] * poly.edges[i].equation.residual(pt) / norm_ab(poly.edges[i].equation);
        worst = std::max(worst, s);
    }
    return worst;
}

} // namespace

const LabeledVertex* RegionPolygon::vertex(const std::string& label) const {
    for (const auto& v : vertices) {
        if (v.label == label) return &v;
        // merged labels such as "P(r)=Q4(r)"
        std::string key = "=" + v.label + "=";
        if (key.find("=" + label + "=") != std::string::npos) return &v;
    }
    return nullptr;
}

bool RegionPolygon::contains_closed(ExponentPoint pt, double tol) const {
    if (vertices.empty()) return false;
    return max_outside_distance(*this, pt) <= tol;
}

bool RegionPolygon::contains_interior(ExponentPoint pt, double tol) const {
    if (vertices.empty()) return false;
    return max_outside_distance(*this, pt) < -tol;
}

bool HalfPlane::contains(ExponentPoint pt, double tol) const {
    return boundary.residual(pt) / norm_ab(boundary) <= tol;
}

bool satisfies_all(const std::vector<HalfPlane>& planes, ExponentPoint pt, double tol) {
    for (const auto& h : planes)
        if (!h.contains(pt, tol)) return false;
    return true;
}

RegionPolygon region(const RegionSpec& spec) {
    if (spec.d < 2) fail(ErrorCode::InvalidInput, "dimension must be at least 2");
    if (!spec.r_infinite && spec.r < Rational(1))
        fail(ErrorCode::InvalidExponent, "variation exponent r must be >= 1");
    const int d = spec.d;
    if (d == 2) {
        if (spec.r_infinite || spec.r > Rational(5, 2)) return build_d2_large(spec);
        if (spec.r > Rational(2)) return build_d2_mid(spec);
        if (spec.r == Rational(2))
            fail(ErrorCode::UnsupportedRegime, "d=2, r=2: the boundedness question is not settled");
        RegionPolygon empty;
        empty.spec = spec;
        empty.regime = Regime::Empty;
        empty.interior = st(StatusKind::Unbounded, "d=2, r<2: no L^p to L^q bounds");
        return empty;
    }
    const Rational large_threshold(d * d + 1, d * (d - 1));
    const Rational mid_threshold(d, d - 1);
    if (spec.r_infinite || spec.r > large_threshold) return build_large(spec);
    if (spec.r > mid_threshold) return build_mid(spec);
    if (d >= 4) return build_small(spec);
    if (spec.r > Rational(4, 3)) return build_small(spec);
    fail(ErrorCode::UnsupportedRegime, "d=3, 1 <= r <= 4/3: the type set is conjectural");
}

std::vector<HalfPlane> necessary_halfplanes(const RegionSpec& spec) {
    if (spec.d < 2) fail(ErrorCode::InvalidInput, "dimension must be at least 2");
    if (!spec.r_infinite && spec.r < Rational(1)) fail(ErrorCode::InvalidExponent, "r must be >= 1");
    const int d = spec.d;
    const Rational one(1), zero(0), ir = spec.inv_r(), D(d);
    return {
        {{-one, one, zero}, "p <= q"},
        {{one, zero, Rational(d - 1, d)}, "p >= d/(d-1)"},
        {{one, -D, zero}, "d/q >= 1/p"},
        {{Rational(d + 1, d - 1), -one, one}, "1/q >= (d+1)/((d-1)p) - 1"},
        {{one, zero, one - ir / Rational(d - 1)}, "1/p <= 1 - 1/(r(d-1))"},
        {{one, -one, one - Rational(2) * ir / Rational(d - 1)}, "(d-1)/2 (1/q + 1/p') >= 1/r"},
        {{zero, -one, -(ir / D)}, "d/q >= 1/r"},
    };
}

MappingStatus classify(const RegionPolygon& poly, ExponentPoint pt) {
    const double tol = kBoundaryTolerance;
    if (!(pt.inv_p >= -tol && pt.inv_p <= 1 + tol && pt.inv_q >= -tol && pt.inv_q <= 1 + tol))
        fail(ErrorCode::InvalidInput, "exponent point outside the unit square");
    if (poly.regime == Regime::Empty) return poly.interior;
    for (const auto& v : poly.vertices)
        if (dist(pt, v.point.to_double()) <= tol) return v.status;
    for (std::size_t i = 0; i < poly.edges.size(); ++i) {
        auto u = poly.vertices[i].point.to_double();
        auto v = poly.vertices[(i + 1) % poly.vertices.size()].point.to_double();
        if (segment_distance(pt, u, v) <= tol) return poly.edges[i].status;
    }
    if (poly.contains_closed(pt, 0.0)) return poly.interior;
    for (const auto& h : necessary_halfplanes(poly.spec))
        if (!h.contains(pt, 0.0)) return st(StatusKind::Unbounded, "outside the closure: violates " + h.name);
    return st(StatusKind::Unbounded, "outside the closure");
}

MappingStatus classify(const RegionSpec& spec, ExponentPoint pt) { return classify(region(spec), pt); }

std::vector<LabeledVertex> maximal_quadrangle(int d) {
    if (d < 2) fail(ErrorCode::InvalidInput, "dimension must be at least 2");
    const Rational dm1_d(d - 1, d);
    std::vector<LabeledVertex> out;
    out.push_back({"Q1", {Rational(0), Rational(0)}, {}});
    out.push_back({"Q2", {dm1_d, dm1_d}, {}});
    if (d > 2) out.push_back({"Q3", {dm1_d, Rational(1, d)}, {}});
    else out.back().label = "Q2=Q3";
    out.push_back({"Q4", {Rational(d * (d - 1), d * d + 1), Rational(d - 1, d * d + 1)}, {}});
    return out;
}

std::string region_to_json(const RegionPolygon& poly) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["d"] = poly.spec.d;
    j["r"] = poly.spec.r_str();
    j["regime"] = regime_name(poly.regime);
    j["interior"] = {{"status", status_name(poly.interior.kind)}, {"source", poly.interior.source}};
    ordered_json verts = ordered_json::array();
    for (const auto& v : poly.vertices) {
        verts.push_back({
            {"label", v.label},
            {"inv_p_num", v.point.inv_p.num()},
            {"inv_p_den", v.point.inv_p.den()},
            {"inv_q_num", v.point.inv_q.num()},
            {"inv_q_den", v.point.inv_q.den()},
            {"inv_p", v.point.inv_p.to_double()},
            {"inv_q", v.point.inv_q.to_double()},
            {"status", status_name(v.status.kind)},
            {"source", v.status.source},
        });
    }
    j["vertices"] = verts;
    ordered_json edges = ordered_json::array();
    for (const auto& e : poly.edges) {
        edges.push_back({
            {"from", e.from},
            {"to", e.to},
            {"a", e.equation.a.str()},
            {"b", e.equation.b.str()},
            {"c", e.equation.c.str()},
            {"status", status_name(e.status.kind)},
            {"source", e.status.source},
        });
    }
    j["edges"] = edges;
    return j.dump(2);
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string region_to_svg(const RegionPolygon& poly) {
    // plot area: unit square mapped to [60,540] x [540,60] pixels
    const double origin_x = 60, origin_y = 540, scale = 480;
    auto px = [&](double x) { return origin_x + scale * x; };
    auto py = [&](double y) { return origin_y - scale * y; };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    s << "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"0.02\" height=\"0.02\" "
         "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"0.02\" stroke=\"#555\" "
         "stroke-width=\"0.004\"/></pattern></defs>\n";
    s << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
    s << "<title>d=" << poly.spec.d << " r=" << poly.spec.r_str() << " regime=" << regime_name(poly.regime)
      << "</title>\n";
    s << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1.05) << "\" y2=\"" << py(0)
      << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(1.05)
      << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << px(1.05) << "\" y=\"" << py(0) + 25 << "\" font-size=\"16\">1/p</text>\n";
    s << "<text x=\"" << px(0) - 45 << "\" y=\"" << py(1.05) << "\" font-size=\"16\">1/q</text>\n";
    s << "<text x=\"" << px(1) - 4 << "\" y=\"" << py(0) + 18 << "\" font-size=\"12\">1</text>\n";
    s << "<text x=\"" << px(0) - 16 << "\" y=\"" << py(1) + 4 << "\" font-size=\"12\">1</text>\n";
    s << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(1)
      << "\" stroke=\"#999\" stroke-dasharray=\"2,4\"/>\n";
    s << "<g transform=\"translate(" << origin_x << "," << origin_y << ") scale(" << scale << "," << -scale
      << ")\">\n";
    auto quad = maximal_quadrangle(poly.spec.d);
    s << "<polygon id=\"maximal\" points=\"";
    for (std::size_t i = 0; i < quad.size(); ++i) {
        auto p = quad[i].point.to_double();
        s << (i ? " " : "") << fmt17(p.inv_p) << "," << fmt17(p.inv_q);
    }
    s << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" "
         "vector-effect=\"non-scaling-stroke\"/>\n";
    if (!poly.vertices.empty()) {
        s << "<polygon id=\"region\" points=\"";
        for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
            auto p = poly.vertices[i].point.to_double();
            s << (i ? " " : "") << fmt17(p.inv_p) << "," << fmt17(p.inv_q);
        }
        s << "\" fill=\"url(#hatch)\" stroke=\"black\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    s << "</g>\n";
    for (const auto& v : poly.vertices) {
        auto p = v.point.to_double();
        s << "<circle cx=\"" << fmt3(px(p.inv_p)) << "\" cy=\"" << fmt3(py(p.inv_q)) << "\" r=\"3\" fill=\"black\"/>\n";
        s << "<text x=\"" << fmt3(px(p.inv_p) + 6) << "\" y=\"" << fmt3(py(p.inv_q) - 6)
          << "\" font-size=\"13\">" << v.label << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::vector<ExponentPoint> svg_polygon_vertices(const std::string& svg) {
    std::vector<ExponentPoint> out;
    auto at = svg.find("<polygon id=\"region\"");
    if (at == std::string::npos) return out;
    auto start = svg.find("points=\"", at);
    if (start == std::string::npos) return out;
    start += 8;
    auto stop = svg.find('"', start);
    std::istringstream in(svg.substr(start, stop - start));
    std::string pair;
    while (in >> pair) {
        auto comma = pair.find(',');
        out.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
    }
    return out;
}

} // namespace sphvar
