#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>

namespace sphvar::simd {

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);
bool avx2_available();
/** Backend used by the dispatching entry points. Honors SPHVAR_SIMD=scalar|avx2 at first use. */
Backend active_backend();
/** Throws InvalidInput when asking for AVX2 on a host without it. */
void set_backend(Backend b);

/** |z|^r for a squared modulus d2, shared by every variation routine so results agree bit for bit. */
inline double increment_power(double d2, double r) { return r == 2.0 ? d2 : std::pow(d2, 0.5 * r); }

// out[i] = in[i] * table[index[i]]; in may alias out.
void apply_radial(const std::complex<double>* in, std::complex<double>* out, const std::uint32_t* index,
                  const double* table, std::size_t n);
// acc[i] += w * |z[i]|^2
void accumulate_weighted_abs2(double* acc, const std::complex<double>* z, double w, std::size_t n);
/**
 * max over i < n of best[i] + increment_power(|a - v_i|^2, r), where v_i = (re[i], im[i]).
 * scratch must hold n doubles. Returns -inf for n == 0.
 */
double variation_relax(const double* best, const double* re, const double* im, std::size_t n, double a_re,
                       double a_im, double r, double* scratch);

namespace scalar {
void apply_radial(const std::complex<double>* in, std::complex<double>* out, const std::uint32_t* index,
                  const double* table, std::size_t n);
void accumulate_weighted_abs2(double* acc, const std::complex<double>* z, double w, std::size_t n);
double variation_relax(const double* best, const double* re, const double* im, std::size_t n, double a_re,
                       double a_im, double r, double* scratch);
} // namespace scalar

namespace avx2 {
void apply_radial(const std::complex<double>* in, std::complex<double>* out, const std::uint32_t* index,
                  const double* table, std::size_t n);
void accumulate_weighted_abs2(double* acc, const std::complex<double>* z, double w, std::size_t n);
double variation_relax(const double* best, const double* re, const double* im, std::size_t n, double a_re,
                       double a_im, double r, double* scratch);
} // namespace avx2

} // namespace sphvar::simd
