#include "sphvar/cutoff.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace sphvar {

namespace {

constexpr int kNodes = 4096;

double bump(double s) {
    if (s <= -1.0 || s >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - s * s));
}

struct StepTable {
    std::vector<double> value;
    std::vector<double> slope;
    double total = 0.0;

    StepTable() : value(kNodes + 1), slope(kNodes + 1) {
        // Gauss-Legendre, 8 points per cell, integrates the bump cell by cell
        static const std::array<double, 8> x = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                                -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                                0.7966664774136267,  0.9602898564975363};
        static const std::array<double, 8> w = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                                0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                                0.2223810344533745, 0.1012285362903763};
        const double h = 2.0 / kNodes;
        std::vector<long double> acc(kNodes + 1, 0.0L);
        for (int i = 0; i < kNodes; ++i) {
            double a = -1.0 + i * h;
            long double cell = 0.0L;
            for (int k = 0; k < 8; ++k) cell += w[k] * bump(a + 0.5 * h * (x[k] + 1.0));
            acc[i + 1] = acc[i] + cell * 0.5L * h;
        }
        total = static_cast<double>(acc[kNodes]);
        for (int i = 0; i <= kNodes; ++i) {
            value[i] = static_cast<double>(acc[i] / acc[kNodes]);
            slope[i] = bump(-1.0 + i * h) / total;
        }
        value[0] = 0.0;
        value[kNodes] = 1.0;
    }
};

const StepTable& table() {
    static const StepTable t;
    return t;
}

} // namespace

double smooth_step(double u) {
    if (u <= -1.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const auto& t = table();
    const double h = 2.0 / kNodes;
    double pos = (u + 1.0) / h;
    int i = static_cast<int>(pos);
    if (i >= kNodes) i = kNodes - 1;
    double s = pos - i;
    double s2 = s * s, s3 = s2 * s;
    double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s, h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    return h00 * t.value[i] + h10 * h * t.slope[i] + h01 * t.value[i + 1] + h11 * h * t.slope[i + 1];
}

double smooth_step_derivative(double u) {
    if (u <= -1.0 || u >= 1.0) return 0.0;
    return bump(u) / table().total;
}

double beta0(double s) {
    double a = std::fabs(s);
    if (a <= 0.5) return 1.0;
    if (a >= 1.0) return 0.0;
    // transition band [1/2, 1] mapped onto [-1, 1]
    return 1.0 - smooth_step(4.0 * a - 3.0);
}

double beta(int j, double s) {
    if (j <= 0) return beta0(s);
    return beta0(std::ldexp(s, -j)) - beta0(std::ldexp(s, 1 - j));
}

double chi(double t) {
    if (t <= kChiSupportLow || t >= kChiSupportHigh) return 0.0;
    if (t < kChiPlateauLow) {
        double u = 2.0 * (t - kChiSupportLow) / (kChiPlateauLow - kChiSupportLow) - 1.0;
        return smooth_step(u);
    }
    if (t <= kChiPlateauHigh) return 1.0;
    double u = 2.0 * (t - kChiPlateauHigh) / (kChiSupportHigh - kChiPlateauHigh) - 1.0;
    return 1.0 - smooth_step(u);
}

double chi_derivative(double t) {
    if (t <= kChiSupportLow || t >= kChiSupportHigh) return 0.0;
    if (t < kChiPlateauLow) {
        double k = 2.0 / (kChiPlateauLow - kChiSupportLow);
        return k * smooth_step_derivative(k * (t - kChiSupportLow) - 1.0);
    }
    if (t <= kChiPlateauHigh) return 0.0;
    double k = 2.0 / (kChiSupportHigh - kChiPlateauHigh);
    return -k * smooth_step_derivative(k * (t - kChiPlateauHigh) - 1.0);
}

double CutoffProfile::operator()(double s) const {
    switch (kind) {
    case CutoffKind::Beta0: return beta0(s);
    case CutoffKind::BetaJ: return beta(j, s);
    case CutoffKind::Chi: return chi(s);
    }
    return 0.0;
}

} // namespace sphvar
