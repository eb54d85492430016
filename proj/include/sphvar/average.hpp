#pragma once

#include "sphvar/grid.hpp"

#include <array>
#include <functional>
#include <random>
#include <vector>

namespace sphvar {

/** Applies the radial Fourier multiplier m(|xi|) to a Space-domain function. */
GridFunction apply_radial_multiplier(const GridFunction& f, const std::function<double(double)>& m);

/** Littlewood-Paley piece: multiplier beta_j(|xi|). */
GridFunction lp_piece(const GridFunction& f, int j);

/** A_t f via the multiplier m_d(t|xi|). Requires t in [1/2, 4]. */
GridFunction spherical_average_spectral(const GridFunction& f, double t);

/** Nodes and weights (summing to 1) for normalized measure on S^{d-1}, d in {2, 3}. */
struct SphereRule {
    int d = 2;
    std::vector<std::array<double, 3>> nodes;
    std::vector<double> weights;

    /** d = 2: `resolution` equispaced angles. d = 3: Gauss-Legendre in cos(theta) x trapezoid in phi. */
    static SphereRule make(int d, int resolution);
    static SphereRule default_for(int d);
};

/** Default resolutions: 512 angles (d=2), 48 x 96 nodes (d=3). */
constexpr int kDefaultCircleNodes = 512;
constexpr int kDefaultPolarNodes = 48;

/**
 * Direct quadrature of A_t f(x) for a point evaluator f. No domain check;
 * the evaluator decides what happens far away.
 */
cplx spherical_average_quadrature(const std::function<cplx(const double*)>& f, int d, double t, const double* x,
                                  const SphereRule& rule);

/**
 * Direct quadrature of A_t f(x) with multilinear interpolation of the grid
 * samples. Error is the quadrature error plus O(h^2 |D^2 f|) from the
 * interpolation. Throws OutOfDomain if the sphere leaves the box.
 */
cplx spherical_average_quadrature(const GridFunction& f, double t, const double* x);
cplx spherical_average_quadrature(const GridFunction& f, double t, const double* x, const SphereRule& rule);

/** Multilinear interpolation of grid samples at x (periodic wrap). */
cplx interpolate(const GridFunction& f, const double* x);

/**
 * Finite trigonometric sum f(x) = sum_c a_c exp(i pi k_c . x / L) with integer
 * wavevectors, periodic on the grid box. Exactly representable on the grid
 * when |k| components stay below n/2, and evaluable anywhere in closed form.
 */
struct BandLimitedField {
    GridSpec spec;
    std::vector<std::array<int, 4>> wavevectors;
    std::vector<cplx> amplitudes;

    cplx operator()(const double* x) const;
    GridFunction rasterize() const;

    /**
     * Random real field: `modes` cosine pairs with components |k_i| <= kmax
     * and unit-variance Gaussian amplitudes.
     */
    static BandLimitedField random_real(const GridSpec& spec, int modes, int kmax, std::mt19937_64& rng);
};

} // namespace sphvar
