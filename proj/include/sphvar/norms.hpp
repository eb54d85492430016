#pragma once

#include "sphvar/field.hpp"
#include "sphvar/grid.hpp"

#include <limits>

namespace sphvar {

constexpr double kInf = std::numeric_limits<double>::infinity();

/** (h^d sum |f|^p)^{1/p}; p = inf gives the max. Throws InvalidExponent for p < 1. */
double lp_norm(const GridFunction& f, double p);
double lp_norm(const cplx* values, std::size_t count, double cell_volume, double p);
double lp_norm_real(const double* values, std::size_t count, double cell_volume, double p);

/** sup_lambda lambda |{|f| > lambda}|^{1/p} computed by sorting. */
double weak_norm(const GridFunction& f, double p);
double weak_norm_real(const double* values, std::size_t count, double cell_volume, double p);

/** L^q_x(L^r_t) with trapezoid weights in t and h^d in x. */
double mixed_norm(const SpaceTimeField& F, double q, double r);

/** Flat L^p over space-time with the same weights. */
double spacetime_norm(const SpaceTimeField& F, double p);

} // namespace sphvar
