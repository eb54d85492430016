#pragma once

#include <vector>

namespace sphvar {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/** Ordinary least squares y ~ slope x + intercept. Needs at least two distinct x. */
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/** Least-squares slope of log2(ratio) against j. Ratios must be positive. */
LineFit fit_log2_slope(const std::vector<int>& j, const std::vector<double>& ratio);

} // namespace sphvar
