#pragma once

namespace sphvar {

/**
 * Bessel function of the first kind J_nu(x) for nu in {0, 1/2, 1, 3/2, 2}
 * and x >= 0. Power series (long double) below x = 20, Hankel asymptotic
 * expansion above; absolute error below 1e-12 on the tested range.
 * Throws UnsupportedOrder for other orders and InvalidInput for x < 0.
 */
double bessel_j(double nu, double x);

/**
 * Gamma(nu+1) (z/2)^(-nu) J_nu(z), the Bessel profile normalized to 1 at
 * z = 0. Same order set and accuracy as bessel_j.
 */
double normalized_bessel(double nu, double z);

/**
 * Fourier transform of normalized surface measure on the unit sphere of R^d
 * at frequency t*rho: m_d(z) = Gamma(d/2) (z/2)^(-(d-2)/2) J_{(d-2)/2}(z),
 * so m_d(0) = 1 and m_3(z) = sin(z)/z. Supports d in {2, 3, 4}.
 */
double sphere_multiplier(int d, double rho, double t);

/** Derivative m_d'(z) = -(z/d) m_{d+2}(z). */
double sphere_multiplier_derivative(int d, double z);

} // namespace sphvar
