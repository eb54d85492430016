#include "sphvar/fft.hpp"

#include "sphvar/error.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace sphvar::fft {

namespace {

struct PlanCache {
    std::mutex mutex;
    std::map<std::pair<std::vector<int>, int>, fftw_plan> plans;

    ~PlanCache() {
        for (auto& kv : plans) fftw_destroy_plan(kv.second);
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

fftw_plan plan_for(const std::vector<int>& dims, int sign) {
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    auto key = std::make_pair(dims, sign);
    auto it = c.plans.find(key);
    if (it != c.plans.end()) return it->second;
    std::size_t total = 1;
    for (int n : dims) total *= static_cast<std::size_t>(n);
    fftw_complex* buf = fftw_alloc_complex(total);
    fftw_plan p = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf,
                                sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (!p) fail(ErrorCode::InvalidInput, "FFTW could not create a plan");
    c.plans.emplace(key, p);
    return p;
}

} // namespace

void transform(std::complex<double>* data, const std::vector<int>& dims, int sign) {
    fftw_plan p = plan_for(dims, sign);
    auto* z = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, z, z);
}

} // namespace sphvar::fft
