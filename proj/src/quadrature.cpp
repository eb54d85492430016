#include "sphvar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace sphvar {

const GaussRule& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (slot) return *slot;
    auto rule = std::make_unique<GaussRule>();
    rule->nodes.resize(static_cast<std::size_t>(n));
    rule->weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule->nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule->weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    slot = std::move(rule);
    return *slot;
}

double integrate(const std::function<double(double)>& f, double a, double b, int order, int panels,
                 const std::vector<double>& breakpoints) {
    if (!(b > a)) return 0.0;
    std::vector<double> cuts{a};
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    const GaussRule& g = gauss_legendre(order);
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        double lo = cuts[s], hi = cuts[s + 1];
        double w = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            double pa = lo + p * w;
            double mid = pa + 0.5 * w;
            double part = 0.0;
            for (std::size_t k = 0; k < g.nodes.size(); ++k) part += g.weights[k] * f(mid + 0.5 * w * g.nodes[k]);
            total += 0.5 * w * part;
        }
    }
    return total;
}

} // namespace sphvar
