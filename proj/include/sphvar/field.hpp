#pragma once

#include "sphvar/grid.hpp"

#include <iosfwd>
#include <vector>

namespace sphvar {

/**
 * Samples of a function of (x, t): one GridFunction-shaped slice per time,
 * stored t-major (values[i * N + x]).
 */
class SpaceTimeField {
public:
    SpaceTimeField(GridSpec spec, std::vector<double> times, std::vector<cplx> values);

    const GridSpec& spec() const { return spec_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<cplx>& values() const { return values_; }
    std::size_t slice_size() const { return spec_.total(); }
    const cplx* slice(std::size_t i) const { return values_.data() + i * spec_.total(); }
    GridFunction slice_function(std::size_t i) const;
    /** The time path at one spatial sample. */
    std::vector<cplx> path(std::size_t x) const;

private:
    GridSpec spec_;
    std::vector<double> times_;
    std::vector<cplx> values_;
};

/** Trapezoid weights for a strictly increasing time grid (length >= 2). */
std::vector<double> trapezoid_weights(const std::vector<double>& times);

/** Uniform grid of m points on [a, b]. */
std::vector<double> uniform_times(double a, double b, int m);

/** Header "SPHVST01", int32 d, n, float64 L, int32 M, float64 times[M], complex64 payload. */
void write_binary(std::ostream& out, const SpaceTimeField& f);
SpaceTimeField read_space_time(std::istream& in);

} // namespace sphvar
