#pragma once

#include "sphvar/field.hpp"
#include "sphvar/grid.hpp"

#include <vector>

namespace sphvar {

enum class TimeOperator { Average, TimeDerivative };

/**
 * Radial multiplier of the space-time operator at (t, rho):
 * Average: chi(t) m_d(t rho); TimeDerivative: chi'(t) m_d(t rho) + chi(t) rho m_d'(t rho).
 */
double space_time_multiplier(int d, TimeOperator op, double t, double rho);

/** chi(t) A_t f for every t in the grid. Times must lie in [1/2, 4] (OutOfDomain). */
SpaceTimeField calA(const GridFunction& f, const std::vector<double>& times);
/** chi(t) A_t L_j f. */
SpaceTimeField calA_j(const GridFunction& f, int j, const std::vector<double>& times);
/** d/dt (chi(t) A_t f), computed spectrally. */
SpaceTimeField dt_calA(const GridFunction& f, const std::vector<double>& times);
SpaceTimeField dt_calA_j(const GridFunction& f, int j, const std::vector<double>& times);

/**
 * Plain averages A_t f for arbitrary t > 0 by dilating the multiplier. The
 * periodic box wraps spheres that leave it; callers check support. A
 * real-valued f gives real-valued slices (imaginary rounding dropped).
 */
SpaceTimeField averages(const GridFunction& f, const std::vector<double>& times);

/**
 * Radial profile of the kernel of A_t L_j at the given radii:
 * K(x) = (2 pi)^-d |S^{d-1}| int m_d(t rho) beta_j(rho) m_d(|x| rho) rho^{d-1} d rho.
 * Requires j >= 1 and d in {2, 3, 4}.
 */
std::vector<double> kernel_K(int d, int j, double t, const std::vector<double>& radii);

constexpr int kDefaultTimeSamples = 65;

/**
 * Per grid point, variation_exact of t -> A_t f(x) over M uniform samples of
 * [a, b] (default [1, 2]). Output values are real (stored as complex).
 */
GridFunction local_variation_operator(const GridFunction& f, double r, int M = kDefaultTimeSamples, double a = 1.0,
                                      double b = 2.0);

struct GlobalVariation {
    GridFunction long_part;
    GridFunction short_part;
    /** Variation over the pooled samples of every dyadic interval. */
    GridFunction pooled;
    /** long + 2 short, a guaranteed upper bound for the pooled variation. */
    GridFunction bound;
};

/**
 * Variation of t -> A_t f(x) over dyadic intervals [2^k, 2^{k+1}], kmin <= k <= kmax,
 * each sampled at M uniform points. Throws OutOfDomain when the largest sphere
 * plus the support radius of f exceeds the box half-width.
 */
GlobalVariation global_variation_operator(const GridFunction& f, double r, int kmin, int kmax,
                                          int M = kDefaultTimeSamples);

/**
 * The pooled variation of global_variation_operator at the listed linear
 * sample indices only, with the same numbers. Streams one time slice at a
 * time, so memory stays at one grid plus the selected paths.
 */
std::vector<double> pooled_variation_at(const GridFunction& f, double r, int kmin, int kmax, int M,
                                        const std::vector<std::size_t>& points);

/** Largest |x| over grid points where |f| exceeds 1e-13 of its maximum; 0 for f = 0. */
double support_radius(const GridFunction& f);

} // namespace sphvar
