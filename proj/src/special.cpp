#include "sphvar/special.hpp"

#include "sphvar/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sphvar {

namespace {

constexpr double kSeriesLimit = 20.0;

void check_order(double nu) {
    if (!(nu == 0.0 || nu == 0.5 || nu == 1.0 || nu == 1.5 || nu == 2.0))
        fail(ErrorCode::UnsupportedOrder, "unsupported Bessel order " + std::to_string(nu));
}

// sum_k (-1)^k (z/2)^(2k) Gamma(nu+1) / (k! Gamma(k+nu+1))
long double normalized_series(long double nu, long double z) {
    long double q = 0.25L * z * z;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * (static_cast<long double>(k) + nu));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && static_cast<long double>(k) > q) break;
    }
    return sum;
}

// Hankel expansion J_nu(x) = sqrt(2/(pi x)) (P cos w - Q sin w), w = x - nu pi/2 - pi/4
double hankel(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev = 1e300;
    for (int k = 1; k < 60; ++k) {
        double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0 * x);
        if (std::fabs(term) > prev) break;
        prev = std::fabs(term);
        if (k % 2 == 1) q += (k % 4 == 1 ? term : -term);
        else p += (k % 4 == 2 ? -term : term);
        if (std::fabs(term) < 1e-17) break;
    }
    double w = x - (0.5 * nu + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(w) - q * std::sin(w));
}

} // namespace

double bessel_j(double nu, double x) {
    check_order(nu);
    if (!(x >= 0.0)) fail(ErrorCode::InvalidInput, "bessel_j needs x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x < kSeriesLimit) {
        long double lx = x;
        long double scale = std::pow(0.5L * lx, static_cast<long double>(nu)) / std::tgamma(static_cast<long double>(nu) + 1.0L);
        return static_cast<double>(scale * normalized_series(nu, lx));
    }
    return hankel(nu, x);
}

double normalized_bessel(double nu, double z) {
    check_order(nu);
    if (!(z >= 0.0)) fail(ErrorCode::InvalidInput, "normalized_bessel needs z >= 0");
    if (z < kSeriesLimit) return static_cast<double>(normalized_series(nu, z));
    return std::tgamma(nu + 1.0) * std::pow(0.5 * z, -nu) * hankel(nu, z);
}

double sphere_multiplier(int d, double rho, double t) {
    if (d < 2 || d > 4) fail(ErrorCode::InvalidInput, "sphere_multiplier supports d in {2,3,4}");
    double z = t * rho;
    if (z < 0.0) z = -z;
    return normalized_bessel(0.5 * (d - 2), z);
}

double sphere_multiplier_derivative(int d, double z) {
    if (d < 2 || d > 4) fail(ErrorCode::InvalidInput, "sphere_multiplier supports d in {2,3,4}");
    if (z < 0.0) return -sphere_multiplier_derivative(d, -z);
    return -(z / d) * normalized_bessel(0.5 * d, z);
}

} // namespace sphvar
