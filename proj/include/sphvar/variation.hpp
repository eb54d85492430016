#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace sphvar {

/** Samples (t_i, a_i) with strictly increasing times. */
struct SampledPath {
    std::vector<double> times;
    std::vector<std::complex<double>> values;

    /** Throws InvalidInput unless times increase strictly, sizes match, values are finite and length >= 1. */
    void validate() const;
    std::size_t size() const { return values.size(); }

    static SampledPath from_real(std::vector<double> times, const std::vector<double>& values);
    /** Times 0, 1, ..., n-1. */
    static SampledPath indexed(const std::vector<std::complex<double>>& values);
};

/**
 * r-variation seminorm of the samples: sup over increasing subsequences of
 * (sum |a_{i+1} - a_i|^r)^{1/r}; r = inf gives the largest increment.
 * r = inf: max pairwise difference. 1 <= r < inf: O(N^2) dynamic program
 * over the last chosen sample (for r = 1 this is the full sum up to rounding).
 * Throws InvalidExponent for r < 1.
 */
double variation_exact(const SampledPath& path, double r);

/** Enumerates every subsequence; exact reference for N <= 16 (TooLarge above). */
double variation_bruteforce(const SampledPath& path, double r);

/** sup |a| + seminorm, the full V_r norm. */
double variation_norm(const SampledPath& path, double r);

/**
 * Same supremum as variation_exact, faster on real-valued paths: equal
 * consecutive values are merged and only turning points (plus both ends)
 * are kept before the dynamic program. For r >= 1 the supremum is attained
 * on turning points, so the value agrees with variation_exact up to
 * rounding. Complex paths fall through to variation_exact.
 */
double variation_fast(const SampledPath& path, double r);

/** Fast variant on a bare real sequence (times irrelevant). */
double variation_real(const double* values, std::size_t n, double r);

/** Indices of the turning points (with both endpoints) of a real sequence. */
std::vector<std::size_t> turning_points(const double* values, std::size_t n);

enum class BesovFlavor { SumOverLevels, SupOverLevels };

constexpr int kBesovSamples = 1024;

/**
 * Discrete B^{1/r}_{r,1} (sum) or B^{1/r}_{r,inf} (sup) norm of a path:
 * linear resampling to 1024 uniform points on [t_first, t_last], periodic
 * FFT with angular frequencies, level pieces Lambda_l with multipliers
 * beta_l, weights 2^{l/r} and L^r norms with cell width dt.
 */
double besov_norm(const SampledPath& path, double r, BesovFlavor flavor);

/** Per-level values 2^{l/r} ||Lambda_l u||_r used by besov_norm. */
std::vector<double> besov_levels(const SampledPath& path, double r);

struct LongShort {
    double long_part = 0.0;
    double short_part = 0.0;
};

/**
 * Long/short split over consecutive dyadic intervals. paths[k] samples
 * I_k = [2^k, 2^{k+1}] and must start and end at the interval endpoints,
 * with paths[k].back() equal to paths[k+1].front() in time. long = variation
 * of the endpoint values; short = l^r sum of the per-interval variations.
 * The pooled variation is bounded by long + 2 short.
 */
LongShort long_short_split(const std::vector<SampledPath>& paths, double r);

/** Concatenation of per-interval paths with shared endpoints merged. */
SampledPath pool_paths(const std::vector<SampledPath>& paths);

} // namespace sphvar
