#pragma once

#include <functional>
#include <vector>

namespace sphvar {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights; // sum to 2
};

/** n-point Gauss-Legendre rule by Newton iteration on P_n. Cached per n. */
const GaussRule& gauss_legendre(int n);

/**
 * Composite Gauss-Legendre integral of f over [a, b] split at the sorted
 * breakpoints that fall inside, with `panels` equal panels per piece.
 */
double integrate(const std::function<double(double)>& f, double a, double b, int order = 16, int panels = 1,
                 const std::vector<double>& breakpoints = {});

} // namespace sphvar
