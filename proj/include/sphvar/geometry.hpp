#pragma once

#include "sphvar/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphvar {

/** A point (1/p, 1/q) of the unit square of reciprocal exponents. */
struct ExponentPoint {
    double inv_p = 0.0;
    double inv_q = 0.0;
};

struct RationalPoint {
    Rational inv_p;
    Rational inv_q;

    ExponentPoint to_double() const { return {inv_p.to_double(), inv_q.to_double()}; }
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/** Dimension d >= 2 and variation exponent r in [1, inf]. */
struct RegionSpec {
    int d = 3;
    Rational r{1};
    bool r_infinite = false;

    static RegionSpec finite(int d, Rational r);
    static RegionSpec infinite(int d);
    /** Accepts "inf", "infinity", an integer, a fraction "a/b" or a decimal. */
    static RegionSpec parse(int d, const std::string& r_text);

    double r_value() const;
    std::string r_str() const;
    /** 1/r as an exact rational (0 for r = inf). */
    Rational inv_r() const;
};

enum class Regime { PentagonLargeR, PentagonMidR, QuadSmallR, D2LargeR, D2MidR, Empty };

enum class StatusKind { StrongType, RestrictedStrongType, RestrictedWeakType, Unbounded, OpenProblem };

const char* regime_name(Regime regime);
const char* status_name(StatusKind kind);

struct MappingStatus {
    StatusKind kind = StatusKind::Unbounded;
    /** Which statement the verdict rests on, e.g. "large-r segment [Q2,Q3)". */
    std::string source;
};

/** a * inv_p + b * inv_q = c. */
struct LinearEquation {
    Rational a;
    Rational b;
    Rational c;

    double residual(ExponentPoint pt) const;
    bool holds_exactly(const RationalPoint& pt) const;
};

struct LabeledVertex {
    std::string label;
    RationalPoint point;
    MappingStatus status;
};

/** Open edge between two consecutive vertices. */
struct RegionEdge {
    std::string from;
    std::string to;
    LinearEquation equation;
    MappingStatus status;
};

struct RegionPolygon {
    RegionSpec spec;
    Regime regime = Regime::Empty;
    std::vector<LabeledVertex> vertices;
    std::vector<RegionEdge> edges;
    MappingStatus interior;

    const LabeledVertex* vertex(const std::string& label) const;
    /** Closed-polygon membership with tolerance `tol` in the (1/p,1/q) plane. */
    bool contains_closed(ExponentPoint pt, double tol = 1e-9) const;
    /** Strict interior membership: inside and at distance > tol from every edge. */
    bool contains_interior(ExponentPoint pt, double tol = 1e-9) const;
};

/** Closed half-plane a * inv_p + b * inv_q <= c. */
struct HalfPlane {
    LinearEquation boundary;
    std::string name;

    bool contains(ExponentPoint pt, double tol = 0.0) const;
};

constexpr double kBoundaryTolerance = 1e-9;

/** Region of boundedness for V_r^I A; throws UnsupportedRegime where the type set is unknown. */
RegionPolygon region(const RegionSpec& spec);

MappingStatus classify(const RegionSpec& spec, ExponentPoint pt);
MappingStatus classify(const RegionPolygon& poly, ExponentPoint pt);

/** The seven closed necessary conditions coming from the counterexamples. */
std::vector<HalfPlane> necessary_halfplanes(const RegionSpec& spec);

bool satisfies_all(const std::vector<HalfPlane>& planes, ExponentPoint pt, double tol = 0.0);

/** Vertices of the type set of the local spherical maximal function (dashed overlay). */
std::vector<LabeledVertex> maximal_quadrangle(int d);

std::string region_to_json(const RegionPolygon& poly);
std::string region_to_svg(const RegionPolygon& poly);

/** Extracts polygon vertex coordinates from an SVG produced by region_to_svg. */
std::vector<ExponentPoint> svg_polygon_vertices(const std::string& svg);

} // namespace sphvar
