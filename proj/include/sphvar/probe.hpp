#pragma once

#include "sphvar/fit.hpp"
#include "sphvar/grid.hpp"
#include "sphvar/operators.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sphvar {

struct ProbeConfig {
    int d = 3;
    double p = 2.0;
    double q = 2.0;
    double r = 2.0;
    int jmin = 2;
    int jmax = 6;
    int trials = 8;
    TimeOperator op = TimeOperator::Average;
    std::uint64_t seed = 1;
    double L = 8.0;
    /** Points per axis at level j: max(16, grid_factor 2^j). */
    int grid_factor = 4;
    /** Time samples on [1/2, 4] at level j: max(33, time_factor 2^j + 1). */
    int time_factor = 4;
};

struct ProbeTrial {
    std::string name;
    double ratio = 0.0;
};

struct ProbeLevel {
    int j = 0;
    GridSpec spec;
    int time_samples = 0;
    double ratio = 0.0;
    std::string best_trial;
    std::vector<ProbeTrial> trials;
};

struct ProbeReport {
    ProbeConfig config;
    std::vector<ProbeLevel> levels;
    LineFit fit;
};

/**
 * Trial input number `index` at level j, returned as its unitary grid spectrum.
 * Indices 0-3: focusing shells beta_j(rho) m_d(R rho), R in {1, 1.5, 2, 3};
 * 4: a Knapp wave packet along e_d; 5 and up: filtered complex Gaussian noise.
 */
std::vector<cplx> probe_trial(const GridSpec& spec, int j, int index, std::uint64_t seed, std::string* name = nullptr);

/**
 * || op_j f ||_{L^q_x(L^r_t)} / ||f||_p for f given by its spectrum, with
 * trapezoid weights on `times`. q = r = 2 uses Plancherel and never leaves
 * frequency space. Throws DegenerateInput for f = 0.
 */
double probe_ratio(const GridSpec& spec, const std::vector<cplx>& spectrum, int j, double p, double q, double r,
                   TimeOperator op, const std::vector<double>& times);

/**
 * Exact radial route in d = 3 for the focusing shell f^ = beta_j(rho) m_3(R rho),
 * with no box and no periodization. A radial function reduces to one variable:
 * A_t f(s) = (G(s - t) - G(s + t)) / (4 pi^2 t s), G(u) = int f^(rho) cos(rho u) d rho.
 * G comes from one FFT on a step 2^{-j}/8 grid. Returns
 * ||chi(t) A_t f||_{L^q_x(L^r_t)} / ||f||_2 (Average operator only; q, r finite).
 */
double radial_shell_ratio(int j, double R, double q, double r);

/** Max over trials of probe_ratio per level, then the least-squares log2 slope in j. */
ProbeReport operator_norm_probe(const ProbeConfig& config);

} // namespace sphvar
