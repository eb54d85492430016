#pragma once

namespace sphvar {

/**
 * Smooth step: 0 for u <= -1, 1 for u >= 1, and the normalized integral of
 * exp(-1/(1-s^2)) in between. Tabulated once, evaluated by cubic Hermite
 * interpolation with exact node derivatives.
 */
double smooth_step(double u);
double smooth_step_derivative(double u);

/** beta_0(s): 1 for |s| <= 1/2, 0 for |s| >= 1, smooth monotone transition. */
double beta0(double s);
/** beta_j(s) = beta_0(2^-j s) - beta_0(2^(1-j) s) for j >= 1; beta_0 for j = 0. */
double beta(int j, double s);

/** chi(t): 1 on [0.9, 2.1], 0 outside (1/2, 4). */
double chi(double t);
double chi_derivative(double t);

constexpr double kChiPlateauLow = 0.9;
constexpr double kChiPlateauHigh = 2.1;
constexpr double kChiSupportLow = 0.5;
constexpr double kChiSupportHigh = 4.0;

enum class CutoffKind { Beta0, BetaJ, Chi };

/** A cutoff selected at run time: Beta0, BetaJ(j) or Chi. */
struct CutoffProfile {
    CutoffKind kind = CutoffKind::Beta0;
    int j = 0;

    double operator()(double s) const;
};

} // namespace sphvar
