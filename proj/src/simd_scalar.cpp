#include "sphvar/simd.hpp"

#include <algorithm>
#include <limits>

namespace sphvar::simd::scalar {

void apply_radial(const std::complex<double>* in, std::complex<double>* out, const std::uint32_t* index,
                  const double* table, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double m = table[index[i]];
        out[i] = {in[i].real() * m, in[i].imag() * m};
    }
}

void accumulate_weighted_abs2(double* acc, const std::complex<double>* z, double w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double re = z[i].real(), im = z[i].imag();
        acc[i] += w * (re * re + im * im);
    }
}

double variation_relax(const double* best, const double* re, const double* im, std::size_t n, double a_re,
                       double a_im, double r, double* scratch) {
    (void)scratch;
    double out = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double dx = a_re - re[i];
        double dy = a_im - im[i];
        double cand = best[i] + increment_power(dx * dx + dy * dy, r);
        out = std::max(out, cand);
    }
    return out;
}

} // namespace sphvar::simd::scalar
