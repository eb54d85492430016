#pragma once

#include "sphvar/fit.hpp"
#include "sphvar/grid.hpp"

#include <string>
#include <vector>

namespace sphvar {

enum class ExampleKind { Stein, Shell0, Knapp, Disks, KnappPlates, AlternatingShells };

const char* example_name(ExampleKind k);
/** Accepts the names printed by example_name; InvalidInput otherwise. */
ExampleKind parse_example_kind(const std::string& name);

/** Ball, shell or plate with its centre on the x_d axis at height `center`. */
struct Piece {
    enum class Shape { Ball, Shell, Plate };
    Shape shape = Shape::Ball;
    double center = 0.0;
    /** Ball: radius in `outer`. Shell: radii inner <= |y - c e_d| <= outer. */
    double inner = 0.0;
    double outer = 0.0;
    /** Plate: |y'| <= half_perp, |y_d - c| <= half_axis. */
    double half_perp = 0.0;
    double half_axis = 0.0;
    int sign = 1;

    bool contains(const double* y, int d) const;
    double volume(int d) const;
};

struct ExampleSpec {
    ExampleKind kind = ExampleKind::AlternatingShells;
    int d = 2;
    int j = 4;

    /** Number of components N: 2^{j-2} for Disks, KnappPlates, AlternatingShells; 1 otherwise. */
    int count() const;
    /** Signed components; Stein has none (it is a radial profile). */
    std::vector<Piece> pieces() const;
    /** Point value f_j(y). Stein's profile is held constant inside |y| = 2^{-j-4}. */
    double value(const double* y) const;
    /** ||f_j||_p from the exact geometry (components are disjoint). */
    double lp_norm(double p) const;
};

/** Smallest feature 2^{-j-4}; a grid resolves the example when this is at least 2h. */
double feature_size(const ExampleSpec& spec);

/**
 * Rasterizes f_j by point sampling at the grid nodes. Stein's cap radius
 * 2^{-j-4} spans at least two cells. Throws Unresolvable when 2^{-j-4} < 2h or when the
 * example is empty (j too small for N >= 1).
 */
GridFunction generate(const ExampleSpec& spec, const GridSpec& grid);

/**
 * A_t f_j(x) in closed form: exact normalized sphere measure of each component
 * (ball caps, shell differences, plate arcs in d = 2 and a one-dimensional
 * Gauss-Legendre integral in d = 3); Stein's profile by radial quadrature.
 * Supports d in {2, 3}.
 */
double average_exact(const ExampleSpec& spec, double t, const double* x);

/** Exponent of 2^j in ||V_r^I A f_j||_q / ||f_j||_p. Throws NoPrediction for Stein. */
double predicted_slope(ExampleKind kind, int d, double p, double q, double r);

struct ScalingOptions {
    int jmin = 3;
    int jmax = 6;
    double p = 2.0;
    double q = 2.0;
    double r = 2.0;
    /** Time samples on [1, 2]; 0 picks 2^{j+5} + 1 per level. */
    int M = 0;
    /** Midpoint cells per axis of the (|x'|, x_d) evaluation half-plane. */
    int region_samples = 12;
};

struct ScalingReport {
    ExampleKind kind = ExampleKind::AlternatingShells;
    int d = 2;
    double p = 0.0, q = 0.0, r = 0.0;
    std::vector<int> j;
    std::vector<int> time_samples;
    std::vector<double> numerator;
    std::vector<double> f_norm;
    std::vector<double> ratio;
    LineFit fit;
    /** NaN when the example has no stated rate (Stein). */
    double predicted = 0.0;
    double tolerance = 0.2;
    bool pass = false;
};

/** Time samples used at level j: M if given, else 2^{j+5} + 1. Unresolvable if M - 1 < 2^{j+5}. */
int scaling_time_samples(int j, int M);

/**
 * ||V_r^I A f_j||_{L^q(region)} with the evaluation region designated for the
 * example (R for Disks, Omega for KnappPlates and Knapp, |x| <= 2^{-j-5} for
 * AlternatingShells, |x| <= 2^{-j-2} for Shell0, 5/4 <= |x| <= 7/4 for Stein).
 * The averages come from average_exact; the region integral is a midpoint rule
 * in (|x'|, x_d) using the rotational symmetry about the x_d axis.
 */
double region_variation_norm(const ExampleSpec& spec, double q, double r, int M, int region_samples = 12);

/**
 * Runs the harness over j in [jmin, jmax] (at least 4 levels) and fits the log2
 * slope. pass iff fitted >= predicted - 0.2; Stein passes when the ratio grows.
 */
ScalingReport run_scaling(ExampleKind kind, int d, const ScalingOptions& options);

} // namespace sphvar
