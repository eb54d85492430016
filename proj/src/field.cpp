#include "sphvar/field.hpp"

#include "sphvar/error.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>

namespace sphvar {

SpaceTimeField::SpaceTimeField(GridSpec spec, std::vector<double> times, std::vector<cplx> values)
    : spec_(spec), times_(std::move(times)), values_(std::move(values)) {
    spec_.validate();
    if (times_.size() < 2) fail(ErrorCode::InvalidInput, "space-time field needs at least two times");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (!(times_[i] > times_[i - 1])) fail(ErrorCode::InvalidInput, "time grid must be strictly increasing");
    if (values_.size() != times_.size() * spec_.total()) fail(ErrorCode::ShapeMismatch, "space-time value count");
    for (const auto& z : values_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(ErrorCode::InvalidInput, "space-time field has non-finite values");
}

GridFunction SpaceTimeField::slice_function(std::size_t i) const {
    std::vector<cplx> v(slice(i), slice(i) + slice_size());
    return GridFunction(spec_, std::move(v));
}

std::vector<cplx> SpaceTimeField::path(std::size_t x) const {
    std::vector<cplx> out(times_.size());
    for (std::size_t i = 0; i < times_.size(); ++i) out[i] = values_[i * slice_size() + x];
    return out;
}

std::vector<double> trapezoid_weights(const std::vector<double>& times) {
    const std::size_t m = times.size();
    if (m < 2) fail(ErrorCode::InvalidInput, "trapezoid weights need at least two times");
    std::vector<double> w(m, 0.0);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        double dt = times[i + 1] - times[i];
        w[i] += 0.5 * dt;
        w[i + 1] += 0.5 * dt;
    }
    return w;
}

std::vector<double> uniform_times(double a, double b, int m) {
    if (m < 2 || !(b > a)) fail(ErrorCode::InvalidInput, "uniform_times needs m >= 2 and b > a");
    std::vector<double> t(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) t[static_cast<std::size_t>(i)] = a + (b - a) * i / (m - 1);
    t.back() = b;
    return t;
}

namespace {

template <class T> void put(std::ostream& out, T v) {
    static_assert(std::endian::native == std::endian::little, "serialization assumes a little-endian host");
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T> T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) fail(ErrorCode::Io, "truncated space-time stream");
    return v;
}

} // namespace

void write_binary(std::ostream& out, const SpaceTimeField& f) {
    out.write("SPHVST01", 8);
    put<std::int32_t>(out, f.spec().d);
    put<std::int32_t>(out, f.spec().n);
    put<double>(out, f.spec().L);
    put<std::int32_t>(out, static_cast<std::int32_t>(f.times().size()));
    for (double t : f.times()) put<double>(out, t);
    for (const auto& z : f.values()) {
        put<float>(out, static_cast<float>(z.real()));
        put<float>(out, static_cast<float>(z.imag()));
    }
    if (!out) fail(ErrorCode::Io, "failed writing space-time field");
}

SpaceTimeField read_space_time(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, "SPHVST01", 8) != 0) fail(ErrorCode::Io, "not a space-time stream");
    GridSpec spec;
    spec.d = get<std::int32_t>(in);
    spec.n = get<std::int32_t>(in);
    spec.L = get<double>(in);
    int m = get<std::int32_t>(in);
    spec.validate();
    if (m < 2) fail(ErrorCode::Io, "space-time stream has fewer than two times");
    std::vector<double> times(static_cast<std::size_t>(m));
    for (auto& t : times) t = get<double>(in);
    std::vector<cplx> v(spec.total() * times.size());
    for (auto& z : v) {
        float re = get<float>(in);
        float im = get<float>(in);
        z = {re, im};
    }
    return SpaceTimeField(spec, std::move(times), std::move(v));
}

} // namespace sphvar
