#include "sphvar/simd.hpp"

#include "sphvar/error.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace sphvar::simd {

namespace {

int initial_backend() {
    bool have = avx2_available();
    if (const char* env = std::getenv("SPHVAR_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return 0;
        if (std::strcmp(env, "avx2") == 0 && have) return 1;
    }
    return have ? 1 : 0;
}

std::atomic<int>& backend_slot() {
    static std::atomic<int> slot{initial_backend()};
    return slot;
}

} // namespace

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() { return backend_slot().load() == 1 ? Backend::Avx2 : Backend::Scalar; }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_available()) fail(ErrorCode::InvalidInput, "AVX2 is not available on this host");
    backend_slot().store(b == Backend::Avx2 ? 1 : 0);
}

void apply_radial(const std::complex<double>* in, std::complex<double>* out, const std::uint32_t* index,
                  const double* table, std::size_t n) {
    if (active_backend() == Backend::Avx2) avx2::apply_radial(in, out, index, table, n);
    else scalar::apply_radial(in, out, index, table, n);
}

void accumulate_weighted_abs2(double* acc, const std::complex<double>* z, double w, std::size_t n) {
    if (active_backend() == Backend::Avx2) avx2::accumulate_weighted_abs2(acc, z, w, n);
    else scalar::accumulate_weighted_abs2(acc, z, w, n);
}

double variation_relax(const double* best, const double* re, const double* im, std::size_t n, double a_re,
                       double a_im, double r, double* scratch) {
    if (active_backend() == Backend::Avx2) return avx2::variation_relax(best, re, im, n, a_re, a_im, r, scratch);
    return scalar::variation_relax(best, re, im, n, a_re, a_im, r, scratch);
}

} // namespace sphvar::simd
