#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

namespace sphvar {

using cplx = std::complex<double>;

/**
 * Uniform periodic grid on [-L, L)^d with n points per axis. Sample m along
 * an axis sits at x_m = -L + m h, h = 2L/n; the origin is index n/2.
 */
struct GridSpec {
    int d = 2;
    int n = 256;
    double L = 8.0;

    double h() const { return 2.0 * L / n; }
    double cell_volume() const;
    std::size_t total() const;
    double coordinate(int m) const { return -L + m * h(); }
    /** Throws InvalidInput unless d in {2,3,4}, n a power of two >= 16 and L >= 8. */
    void validate() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class Domain { Space, Frequency };

/**
 * Complex samples on a GridSpec, row-major with axis 0 slowest. Values are
 * fixed at construction; operations return new functions.
 */
class GridFunction {
public:
    GridFunction(GridSpec spec, std::vector<cplx> values, Domain domain = Domain::Space);

    static GridFunction zeros(GridSpec spec, Domain domain = Domain::Space);
    static GridFunction constant(GridSpec spec, cplx value);
    /** Samples f at every grid point; f receives a pointer to d coordinates. */
    static GridFunction sample(GridSpec spec, const std::function<cplx(const double*)>& f);

    const GridSpec& spec() const { return spec_; }
    Domain domain() const { return domain_; }
    const std::vector<cplx>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const cplx& operator[](std::size_t i) const { return values_[i]; }

    /** Splits a linear index into per-axis indices m[0..d). */
    void unravel(std::size_t linear, int* m) const;
    std::size_t ravel(const int* m) const;
    /** Coordinates of a sample (Space domain). */
    void point(std::size_t linear, double* x) const;

    /** Moves the samples out, leaving this function empty. */
    std::vector<cplx> release() &&;

private:
    GridSpec spec_;
    Domain domain_;
    std::vector<cplx> values_;
};

/** Signed wavenumber for FFT index k: k for k < n/2, k - n otherwise. */
inline int signed_wavenumber(int k, int n) { return k < n / 2 ? k : k - n; }

/** Angular frequency spacing pi/L of the grid. */
inline double frequency_step(const GridSpec& s) { return 3.14159265358979323846 / s.L; }

/**
 * Unitary DFT with origin phase: F[k] = N^{-1/2} sum_m f[m] exp(-2 pi i k.(m - n/2)/n),
 * so a delta at the origin has a constant spectrum. Throws ShapeMismatch on a
 * Frequency-domain input.
 */
GridFunction dft(const GridFunction& f);
GridFunction idft(const GridFunction& F);

/** In-place variants on raw sample arrays (no domain bookkeeping). */
void dft_inplace(const GridSpec& spec, std::vector<cplx>& values);
void idft_inplace(const GridSpec& spec, std::vector<cplx>& values);

/**
 * Per sample, the squared signed wavenumber |k|^2 in FFT ordering. Shared
 * and cached per (d, n). Radial multipliers become table lookups.
 */
std::shared_ptr<const std::vector<std::uint32_t>> radial_index(const GridSpec& spec);
/** Largest |k|^2 on the grid, d (n/2)^2. */
std::uint32_t max_radial_index(const GridSpec& spec);

/** Tabulates m(pi sqrt(s) / L) for s = 0..max_radial_index. */
std::vector<double> radial_table(const GridSpec& spec, const std::function<double(double)>& m);

/** Multiplies a spectrum by the radial table in place (SIMD dispatched). */
void apply_radial_table(const GridSpec& spec, std::vector<cplx>& spectrum, const std::vector<double>& table);

/** Flat binary: "SPHVGF01", int32 d, int32 n, float64 L, int32 domain, complex64 payload; little-endian. */
void write_binary(std::ostream& out, const GridFunction& f);
GridFunction read_binary(std::istream& in);

/**
 * CSV of a 2-D slice: columns x0,x1,re,im. For d > 2 the remaining axes are
 * fixed at the given indices (default: the origin).
 */
void write_csv_slice(std::ostream& out, const GridFunction& f, const std::vector<int>& fixed = {});

} // namespace sphvar
