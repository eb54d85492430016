#pragma once

#include "sphvar/fit.hpp"
#include "sphvar/geometry.hpp"
#include "sphvar/grid.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace sphvar {

/** Axis-parallel cube [corner, corner + side)^d. */
struct Cube {
    int d = 2;
    std::array<double, 4> corner{0.0, 0.0, 0.0, 0.0};
    double side = 1.0;

    double volume() const;
    Cube child(int index) const;
};

/**
 * Subset of a cube on its cell raster: runs (start, length) of kept cells in
 * row-major order, axis 0 slowest, with (side / cell)^d cells in total.
 */
struct Certificate {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    std::uint64_t count() const;
};

/**
 * Cubes on the lattice origin + cell Z^d, each with a certificate subset E_Q.
 * Sparse when E_Q lies in Q, |E_Q| >= |Q|/2 and the E_Q are pairwise disjoint.
 */
struct SparseFamily {
    int d = 2;
    double cell = 1.0;
    std::array<double, 4> origin{0.0, 0.0, 0.0, 0.0};
    std::vector<Cube> cubes;
    std::vector<Certificate> certificates;
};

struct SparsityCheck {
    bool ok = true;
    /** Index of the first offending cube (or -1) and a description. */
    long cube = -1;
    std::string violation;
};

/** Exact cell counting of on-lattice placement, containment, the half-measure bound and disjointness. */
SparsityCheck verify_sparsity(const SparseFamily& fam);

/** Source of the integrals int_Q |f|^s used by the sparse form and the stopping rule. */
class MeasureSource {
public:
    virtual ~MeasureSource() = default;
    virtual int dimension() const = 0;
    virtual double power_integral(const Cube& q, double s) const = 0;
    /** True when f vanishes on q (exactly). */
    virtual bool vanishes_on(const Cube& q) const = 0;
    /** Bounding box [lo, hi) of the support; false when f = 0. */
    virtual bool support_box(double* lo, double* hi) const = 0;
};

/**
 * |f| on a grid. Cell m covers [x_m, x_m + h) along each axis with the value of
 * sample m. Cubes must sit on this cell lattice. Prefix sums of |f|^s are built
 * once per exponent; a prefix count of nonzero cells decides vanishing exactly.
 */
class GridSource : public MeasureSource {
public:
    explicit GridSource(const GridFunction& f);
    int dimension() const override { return spec_.d; }
    double power_integral(const Cube& q, double s) const override;
    bool vanishes_on(const Cube& q) const override;
    bool support_box(double* lo, double* hi) const override;
    const GridSpec& spec() const { return spec_; }

private:
    template <class T> T box_sum(const std::vector<T>& prefix, const Cube& q) const;
    const std::vector<long double>& prefix_for(double s) const;

    GridSpec spec_;
    std::vector<double> abs_;
    std::vector<std::int64_t> count_prefix_;
    mutable std::mutex mutex_;
    mutable std::map<double, std::shared_ptr<std::vector<long double>>> prefix_;
};

/** Union of disjoint disks (d = 2) and boxes (any d), each carrying a constant |f|. */
class ShapeSource : public MeasureSource {
public:
    explicit ShapeSource(int d) : d_(d) {}
    void add_disk(double cx, double cy, double radius, double amplitude = 1.0);
    void add_box(const std::array<double, 4>& lo, const std::array<double, 4>& hi, double amplitude = 1.0);
    int dimension() const override { return d_; }
    double power_integral(const Cube& q, double s) const override;
    bool vanishes_on(const Cube& q) const override;
    bool support_box(double* lo, double* hi) const override;

private:
    struct Shape {
        bool disk = false;
        std::array<double, 4> lo{}, hi{};
        double cx = 0.0, cy = 0.0, radius = 0.0;
        double amplitude = 1.0;
    };
    double overlap(const Shape& s, const Cube& q) const;
    int d_;
    std::vector<Shape> shapes_;
};

/** Exact area of a disk intersected with the rectangle [x0, x1] x [y0, y1]. */
double disk_rectangle_area(double cx, double cy, double radius, double x0, double x1, double y0, double y1);

struct SparseOptions {
    double threshold = 4.0;
    /** Lattice spacing; 0 takes the grid spacing h for GridSource inputs. */
    double cell = 0.0;
    /** Smallest cube side examined; 0 takes 4 cells. */
    double min_side = 0.0;
};

/** Dual exponent q' = q/(q-1); InvalidExponent unless q > 1. */
double dual_exponent(double q);

/** (|Q|^{-1} int_Q |f|^s)^{1/s}. */
double cube_average(const MeasureSource& f, const Cube& q, double s);

/** sum_Q |Q| <f1>_{Q,p} <f2>_{Q,q'}. Throws InvalidExponent unless p >= 1 and q > 1. */
double sparse_form(const SparseFamily& fam, const MeasureSource& f1, const MeasureSource& f2, double p, double q);

/**
 * Dyadic stopping time. The root is the smallest cell * 2^m cube on the lattice
 * containing both supports. Inside each selected cube Q, the maximal dyadic
 * subcubes (side >= min_side) with <f1>_{Q',p} > T <f1>_{Q,p} or
 * <f2>_{Q',q'} > T <f2>_{Q,q'} are selected, and E_Q = Q minus them.
 * Throws DegenerateInput when either function vanishes.
 */
SparseFamily build_sparse_family(const MeasureSource& f1, const MeasureSource& f2, double p, double q,
                                 const SparseOptions& options, const std::array<double, 4>& origin);
SparseFamily build_sparse_family(const GridFunction& f1, const GridFunction& f2, double p, double q,
                                 const SparseOptions& options = {});

struct DominationOptions {
    int kmin = -3;
    int kmax = 1;
    int M = 17;
    SparseOptions sparse;
};

struct DominationResult {
    /** int V_r A f1 . f2 over the grid, with V_r A the pooled global variation. */
    double pairing = 0.0;
    double form = 0.0;
    double ratio = 0.0;
    std::size_t cubes = 0;
};

/**
 * Ratio of the pairing to the sparse form of the constructed family. Requires
 * (1/p, 1/q) in the interior of the region for (d, r) (RegionViolation),
 * f1, f2 >= 0 (InvalidInput) and neither zero (DegenerateInput).
 */
DominationResult domination_check(const GridFunction& f1, const GridFunction& f2, double p, double q,
                                  const RegionSpec& region_spec, const DominationOptions& options = {});

/** Smooth bump amplitude * exp(1 - 1/(1 - |x - center|^2 / radius^2)) inside the ball, 0 outside. */
struct Bump {
    std::array<double, 4> center{0.0, 0.0, 0.0, 0.0};
    double radius = 1.0;
    double amplitude = 1.0;
};

/** Sum of bumps sampled at the grid nodes; the same bumps on finer grids give refinements. */
GridFunction sample_bumps(const GridSpec& spec, const std::vector<Bump>& bumps);

/** count bumps with centres in |x_i| <= 1.5, radii in [0.3, 1] and amplitudes in [0.5, 2]. */
std::vector<Bump> random_bumps(int d, int count, std::mt19937_64& rng);

struct SharpnessReport {
    double p = 1.0, q = 2.0, r = 3.0;
    std::vector<int> j;
    /** int_R V_r^I A f_j, the pairing against f2 = 1_R. */
    std::vector<double> pairing;
    std::vector<double> form;
    std::vector<double> ratio;
    std::vector<std::size_t> cubes;
    /** Smallest distance between supp f_j and R over the levels. */
    double separation = 0.0;
    LineFit fit;
    /** (1/r - d + 1) + (d - 1)/p. */
    double predicted = 0.0;
    double tolerance = 0.3;
    bool pass = false;
};

/**
 * Growth of the sparse ratio for f1 = the Disks example f_j (d = 2) and
 * f2 = 1_R, R its evaluation region. The pairing grows like 2^{j(1/r - 1)}
 * while the form stays near ||f_j||_p ~ 2^{-j/p}, so the ratio cannot be
 * bounded when the predicted slope is positive. The family is built on the
 * exact shapes with cell 2^{-j-6}. The region check is skipped on purpose:
 * the point of interest lies outside the closed region. pass iff
 * |fitted - predicted| <= 0.3. M = 0 picks 2^{j+5} + 1 time samples.
 */
SharpnessReport sharpness_scaling(double p, double q, double r, int jmin, int jmax, int M = 0);

/** JSON: d, cell, origin, and per cube its corner, side and certificate runs. */
std::string family_to_json(const SparseFamily& fam);

} // namespace sphvar
