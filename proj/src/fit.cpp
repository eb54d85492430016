#include "sphvar/fit.hpp"

#include "sphvar/error.hpp"

#include <cmath>

namespace sphvar {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) fail(ErrorCode::InvalidInput, "line fit needs two or more points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) fail(ErrorCode::InvalidInput, "line fit needs two distinct abscissae");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double e = y[i] - (fit.slope * x[i] + fit.intercept);
        ss += e * e;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

LineFit fit_log2_slope(const std::vector<int>& j, const std::vector<double>& ratio) {
    std::vector<double> x(j.begin(), j.end()), y;
    for (double v : ratio) {
        if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorCode::InvalidInput, "slope fit needs positive finite ratios");
        y.push_back(std::log2(v));
    }
    return fit_line(x, y);
}

} // namespace sphvar
