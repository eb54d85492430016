#pragma once

#include <complex>
#include <vector>

namespace sphvar::fft {

/**
 * In-place unnormalized complex DFT over a row-major array with the given
 * axis lengths; sign = -1 forward, +1 backward. Backed by FFTW; plans are
 * cached per (dims, sign) and execution is thread-safe.
 */
void transform(std::complex<double>* data, const std::vector<int>& dims, int sign);

} // namespace sphvar::fft
