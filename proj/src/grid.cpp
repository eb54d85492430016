#include "sphvar/grid.hpp"

#include "sphvar/error.hpp"
#include "sphvar/fft.hpp"
#include "sphvar/parallel.hpp"
#include "sphvar/simd.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>

namespace sphvar {

double GridSpec::cell_volume() const { return std::pow(h(), d); }

std::size_t GridSpec::total() const {
    std::size_t t = 1;
    for (int i = 0; i < d; ++i) t *= static_cast<std::size_t>(n);
    return t;
}

void GridSpec::validate() const {
    if (d < 2 || d > 4) fail(ErrorCode::InvalidInput, "grid dimension must be 2, 3 or 4");
    if (n < 16 || (n & (n - 1)) != 0) fail(ErrorCode::InvalidInput, "points per axis must be a power of two >= 16");
    if (!(L >= 8.0)) fail(ErrorCode::InvalidInput, "box half-extent L must be >= 8");
}

GridFunction::GridFunction(GridSpec spec, std::vector<cplx> values, Domain domain)
    : spec_(spec), domain_(domain), values_(std::move(values)) {
    spec_.validate();
    if (values_.size() != spec_.total()) fail(ErrorCode::ShapeMismatch, "value count does not match n^d");
}

GridFunction GridFunction::zeros(GridSpec spec, Domain domain) {
    spec.validate();
    return GridFunction(spec, std::vector<cplx>(spec.total()), domain);
}

GridFunction GridFunction::constant(GridSpec spec, cplx value) {
    spec.validate();
    return GridFunction(spec, std::vector<cplx>(spec.total(), value));
}

GridFunction GridFunction::sample(GridSpec spec, const std::function<cplx(const double*)>& f) {
    spec.validate();
    std::vector<cplx> v(spec.total());
    const std::size_t n = static_cast<std::size_t>(spec.n);
    parallel_for(v.size(), [&](std::size_t begin, std::size_t end, int) {
        double x[4];
        for (std::size_t i = begin; i < end; ++i) {
            std::size_t rest = i;
            for (int a = spec.d - 1; a >= 0; --a) {
                x[a] = spec.coordinate(static_cast<int>(rest % n));
                rest /= n;
            }
            v[i] = f(x);
        }
    });
    return GridFunction(spec, std::move(v));
}

void GridFunction::unravel(std::size_t linear, int* m) const {
    const std::size_t n = static_cast<std::size_t>(spec_.n);
    for (int a = spec_.d - 1; a >= 0; --a) {
        m[a] = static_cast<int>(linear % n);
        linear /= n;
    }
}

std::size_t GridFunction::ravel(const int* m) const {
    std::size_t idx = 0;
    for (int a = 0; a < spec_.d; ++a) idx = idx * static_cast<std::size_t>(spec_.n) + static_cast<std::size_t>(m[a]);
    return idx;
}

void GridFunction::point(std::size_t linear, double* x) const {
    int m[4];
    unravel(linear, m);
    for (int a = 0; a < spec_.d; ++a) x[a] = spec_.coordinate(m[a]);
}

std::vector<cplx> GridFunction::release() && { return std::move(values_); }

namespace {

std::vector<int> dims_of(const GridSpec& spec) { return std::vector<int>(static_cast<std::size_t>(spec.d), spec.n); }

// multiplies by (-1)^(k_0 + ... + k_{d-1}) and by the given scale
void origin_phase(const GridSpec& spec, std::vector<cplx>& v, double scale) {
    const std::size_t n = static_cast<std::size_t>(spec.n);
    parallel_for(v.size() / n, [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t row = begin; row < end; ++row) {
            std::size_t rest = row;
            int parity = 0;
            for (int a = 0; a < spec.d - 1; ++a) {
                parity += static_cast<int>(rest % n);
                rest /= n;
            }
            double s = (parity & 1) ? -scale : scale;
            cplx* p = v.data() + row * n;
            for (std::size_t k = 0; k < n; ++k) {
                p[k] *= s;
                s = -s;
            }
        }
    });
}

} // namespace

void dft_inplace(const GridSpec& spec, std::vector<cplx>& values) {
    if (values.size() != spec.total()) fail(ErrorCode::ShapeMismatch, "value count does not match n^d");
    fft::transform(values.data(), dims_of(spec), -1);
    origin_phase(spec, values, 1.0 / std::sqrt(static_cast<double>(spec.total())));
}

void idft_inplace(const GridSpec& spec, std::vector<cplx>& values) {
    if (values.size() != spec.total()) fail(ErrorCode::ShapeMismatch, "value count does not match n^d");
    origin_phase(spec, values, 1.0 / std::sqrt(static_cast<double>(spec.total())));
    fft::transform(values.data(), dims_of(spec), +1);
}

GridFunction dft(const GridFunction& f) {
    if (f.domain() != Domain::Space) fail(ErrorCode::ShapeMismatch, "dft expects a Space-domain function");
    std::vector<cplx> v = f.values();
    dft_inplace(f.spec(), v);
    return GridFunction(f.spec(), std::move(v), Domain::Frequency);
}

GridFunction idft(const GridFunction& F) {
    if (F.domain() != Domain::Frequency) fail(ErrorCode::ShapeMismatch, "idft expects a Frequency-domain function");
    std::vector<cplx> v = F.values();
    idft_inplace(F.spec(), v);
    return GridFunction(F.spec(), std::move(v), Domain::Space);
}

std::uint32_t max_radial_index(const GridSpec& spec) {
    std::uint32_t half = static_cast<std::uint32_t>(spec.n / 2);
    return static_cast<std::uint32_t>(spec.d) * half * half;
}

std::shared_ptr<const std::vector<std::uint32_t>> radial_index(const GridSpec& spec) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<std::uint32_t>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(spec.d, spec.n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto idx = std::make_shared<std::vector<std::uint32_t>>(spec.total());
    const std::size_t n = static_cast<std::size_t>(spec.n);
    std::vector<std::uint32_t> sq(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto w = static_cast<std::int64_t>(signed_wavenumber(static_cast<int>(k), spec.n));
        sq[k] = static_cast<std::uint32_t>(w * w);
    }
    for (std::size_t i = 0; i < idx->size(); ++i) {
        std::size_t rest = i;
        std::uint32_t s = 0;
        for (int a = 0; a < spec.d; ++a) {
            s += sq[rest % n];
            rest /= n;
        }
        (*idx)[i] = s;
    }
    cache.emplace(key, idx);
    return idx;
}

std::vector<double> radial_table(const GridSpec& spec, const std::function<double(double)>& m) {
    std::vector<double> table(max_radial_index(spec) + 1);
    const double dk = frequency_step(spec);
    for (std::size_t s = 0; s < table.size(); ++s) table[s] = m(dk * std::sqrt(static_cast<double>(s)));
    return table;
}

void apply_radial_table(const GridSpec& spec, std::vector<cplx>& spectrum, const std::vector<double>& table) {
    auto idx = radial_index(spec);
    if (spectrum.size() != idx->size()) fail(ErrorCode::ShapeMismatch, "spectrum size does not match grid");
    parallel_for(spectrum.size(), [&](std::size_t begin, std::size_t end, int) {
        simd::apply_radial(spectrum.data() + begin, spectrum.data() + begin, idx->data() + begin, table.data(),
                           end - begin);
    });
}

namespace {

template <class T> void put(std::ostream& out, T v) {
    static_assert(std::endian::native == std::endian::little, "serialization assumes a little-endian host");
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T> T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) fail(ErrorCode::Io, "truncated grid function stream");
    return v;
}

} // namespace

void write_binary(std::ostream& out, const GridFunction& f) {
    out.write("SPHVGF01", 8);
    put<std::int32_t>(out, f.spec().d);
    put<std::int32_t>(out, f.spec().n);
    put<double>(out, f.spec().L);
    put<std::int32_t>(out, f.domain() == Domain::Space ? 0 : 1);
    for (const auto& z : f.values()) {
        put<float>(out, static_cast<float>(z.real()));
        put<float>(out, static_cast<float>(z.imag()));
    }
    if (!out) fail(ErrorCode::Io, "failed writing grid function");
}

GridFunction read_binary(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, "SPHVGF01", 8) != 0) fail(ErrorCode::Io, "not a grid function stream");
    GridSpec spec;
    spec.d = get<std::int32_t>(in);
    spec.n = get<std::int32_t>(in);
    spec.L = get<double>(in);
    int tag = get<std::int32_t>(in);
    spec.validate();
    std::vector<cplx> v(spec.total());
    for (auto& z : v) {
        float re = get<float>(in);
        float im = get<float>(in);
        z = {re, im};
    }
    return GridFunction(spec, std::move(v), tag == 0 ? Domain::Space : Domain::Frequency);
}

void write_csv_slice(std::ostream& out, const GridFunction& f, const std::vector<int>& fixed) {
    const auto& s = f.spec();
    int m[4] = {0, 0, s.n / 2, s.n / 2};
    for (std::size_t a = 0; a < fixed.size() && a + 2 < 4; ++a) m[a + 2] = fixed[a];
    out << "x0,x1,re,im\n";
    char buf[128];
    for (int i = 0; i < s.n; ++i) {
        for (int k = 0; k < s.n; ++k) {
            m[0] = i;
            m[1] = k;
            const cplx& z = f[f.ravel(m)];
            std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.17g,%.17g\n", s.coordinate(i), s.coordinate(k), z.real(),
                          z.imag());
            out << buf;
        }
    }
}

} // namespace sphvar
