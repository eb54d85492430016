#include "sphvar/simd.hpp"

#include <algorithm>
#include <limits>

#include <immintrin.h>

namespace sphvar::simd::avx2 {

void apply_radial(const std::complex<double>* in, std::complex<double>* out, const std::uint32_t* index,
                  const double* table, std::size_t n) {
    const double* src = reinterpret_cast<const double*>(in);
    double* dst = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        double m0 = table[index[i]];
        double m1 = table[index[i + 1]];
        __m256d m = _mm256_set_pd(m1, m1, m0, m0);
        __m256d v = _mm256_loadu_pd(src + 2 * i);
        _mm256_storeu_pd(dst + 2 * i, _mm256_mul_pd(v, m));
    }
    for (; i < n; ++i) {
        double m = table[index[i]];
        out[i] = {in[i].real() * m, in[i].imag() * m};
    }
}

void accumulate_weighted_abs2(double* acc, const std::complex<double>* z, double w, std::size_t n) {
    const double* src = reinterpret_cast<const double*>(z);
    const __m256d vw = _mm256_set1_pd(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_loadu_pd(src + 2 * i);
        __m256d b = _mm256_loadu_pd(src + 2 * i + 4);
        __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        // h = (|z0|^2, |z2|^2, |z1|^2, |z3|^2)
        __m256d s = _mm256_permute4x64_pd(h, 0xD8);
        __m256d acc_v = _mm256_loadu_pd(acc + i);
        _mm256_storeu_pd(acc + i, _mm256_add_pd(acc_v, _mm256_mul_pd(vw, s)));
    }
    for (; i < n; ++i) {
        double re = z[i].real(), im = z[i].imag();
        acc[i] += w * (re * re + im * im);
    }
}

double variation_relax(const double* best, const double* re, const double* im, std::size_t n, double a_re,
                       double a_im, double r, double* scratch) {
    const __m256d ar = _mm256_set1_pd(a_re);
    const __m256d ai = _mm256_set1_pd(a_im);
    __m256d vmax = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    if (r == 2.0) {
        for (; i + 4 <= n; i += 4) {
            __m256d dx = _mm256_sub_pd(ar, _mm256_loadu_pd(re + i));
            __m256d dy = _mm256_sub_pd(ai, _mm256_loadu_pd(im + i));
            __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
            vmax = _mm256_max_pd(vmax, _mm256_add_pd(_mm256_loadu_pd(best + i), d2));
        }
    } else {
        std::size_t m = n & ~static_cast<std::size_t>(3);
        for (std::size_t k = 0; k < m; k += 4) {
            __m256d dx = _mm256_sub_pd(ar, _mm256_loadu_pd(re + k));
            __m256d dy = _mm256_sub_pd(ai, _mm256_loadu_pd(im + k));
            _mm256_storeu_pd(scratch + k, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
        }
        for (std::size_t k = 0; k < m; ++k) scratch[k] = increment_power(scratch[k], r);
        for (; i < m; i += 4)
            vmax = _mm256_max_pd(vmax, _mm256_add_pd(_mm256_loadu_pd(best + i), _mm256_loadu_pd(scratch + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmax);
    double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < n; ++i) {
        double dx = a_re - re[i];
        double dy = a_im - im[i];
        out = std::max(out, best[i] + increment_power(dx * dx + dy * dy, r));
    }
    return out;
}

} // namespace sphvar::simd::avx2
