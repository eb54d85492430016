#include "sphvar/average.hpp"

#include "sphvar/cutoff.hpp"
#include "sphvar/error.hpp"
#include "sphvar/quadrature.hpp"
#include "sphvar/special.hpp"

#include <cmath>
#include <numbers>

namespace sphvar {

GridFunction apply_radial_multiplier(const GridFunction& f, const std::function<double(double)>& m) {
    if (f.domain() != Domain::Space) fail(ErrorCode::ShapeMismatch, "expected a Space-domain function");
    std::vector<cplx> v = f.values();
    dft_inplace(f.spec(), v);
    apply_radial_table(f.spec(), v, radial_table(f.spec(), m));
    idft_inplace(f.spec(), v);
    return GridFunction(f.spec(), std::move(v));
}

GridFunction lp_piece(const GridFunction& f, int j) {
    if (j < 0) fail(ErrorCode::InvalidInput, "Littlewood-Paley index must be >= 0");
    return apply_radial_multiplier(f, [j](double rho) { return beta(j, rho); });
}

GridFunction spherical_average_spectral(const GridFunction& f, double t) {
    if (!(t >= 0.5 && t <= 4.0)) fail(ErrorCode::OutOfDomain, "spherical average radius must lie in [1/2, 4]");
    const int d = f.spec().d;
    return apply_radial_multiplier(f, [d, t](double rho) { return sphere_multiplier(d, rho, t); });
}

SphereRule SphereRule::make(int d, int resolution) {
    SphereRule rule;
    rule.d = d;
    if (d == 2) {
        for (int k = 0; k < resolution; ++k) {
            double phi = 2.0 * std::numbers::pi * k / resolution;
            rule.nodes.push_back({std::cos(phi), std::sin(phi), 0.0});
            rule.weights.push_back(1.0 / resolution);
        }
        return rule;
    }
    if (d == 3) {
        const GaussRule& g = gauss_legendre(resolution);
        const int nphi = 2 * resolution;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            double u = g.nodes[i];
            double s = std::sqrt(1.0 - u * u);
            for (int k = 0; k < nphi; ++k) {
                double phi = 2.0 * std::numbers::pi * k / nphi;
                rule.nodes.push_back({s * std::cos(phi), s * std::sin(phi), u});
                rule.weights.push_back(0.5 * g.weights[i] / nphi);
            }
        }
        return rule;
    }
    fail(ErrorCode::InvalidInput, "sphere quadrature implemented for d = 2 and d = 3");
}

SphereRule SphereRule::default_for(int d) {
    return make(d, d == 2 ? kDefaultCircleNodes : kDefaultPolarNodes);
}

cplx spherical_average_quadrature(const std::function<cplx(const double*)>& f, int d, double t, const double* x,
                                  const SphereRule& rule) {
    if (rule.d != d) fail(ErrorCode::ShapeMismatch, "sphere rule dimension does not match");
    cplx acc = 0.0;
    double y[4];
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        for (int a = 0; a < d; ++a) y[a] = x[a] - t * rule.nodes[k][static_cast<std::size_t>(a)];
        acc += rule.weights[k] * f(y);
    }
    return acc;
}

cplx interpolate(const GridFunction& f, const double* x) {
    const auto& s = f.spec();
    const double h = s.h();
    int base[4];
    double frac[4];
    for (int a = 0; a < s.d; ++a) {
        double pos = (x[a] + s.L) / h;
        double fl = std::floor(pos);
        base[a] = static_cast<int>(fl);
        frac[a] = pos - fl;
    }
    cplx acc = 0.0;
    const int corners = 1 << s.d;
    int m[4];
    for (int c = 0; c < corners; ++c) {
        double w = 1.0;
        for (int a = 0; a < s.d; ++a) {
            int bit = (c >> a) & 1;
            w *= bit ? frac[a] : 1.0 - frac[a];
            int idx = (base[a] + bit) % s.n;
            if (idx < 0) idx += s.n;
            m[a] = idx;
        }
        if (w != 0.0) acc += w * f[f.ravel(m)];
    }
    return acc;
}

cplx spherical_average_quadrature(const GridFunction& f, double t, const double* x, const SphereRule& rule) {
    const auto& s = f.spec();
    if (f.domain() != Domain::Space) fail(ErrorCode::ShapeMismatch, "expected a Space-domain function");
    for (int a = 0; a < s.d; ++a)
        if (x[a] - t < -s.L || x[a] + t > s.L - s.h())
            fail(ErrorCode::OutOfDomain, "sphere of radius t about x leaves the grid box");
    return spherical_average_quadrature([&f](const double* y) { return interpolate(f, y); }, s.d, t, x, rule);
}

cplx spherical_average_quadrature(const GridFunction& f, double t, const double* x) {
    return spherical_average_quadrature(f, t, x, SphereRule::default_for(f.spec().d));
}

cplx BandLimitedField::operator()(const double* x) const {
    const double w = std::numbers::pi / spec.L;
    cplx acc = 0.0;
    for (std::size_t c = 0; c < wavevectors.size(); ++c) {
        double phase = 0.0;
        for (int a = 0; a < spec.d; ++a) phase += wavevectors[c][static_cast<std::size_t>(a)] * x[a];
        phase *= w;
        acc += amplitudes[c] * cplx(std::cos(phase), std::sin(phase));
    }
    return acc;
}

GridFunction BandLimitedField::rasterize() const {
    std::vector<cplx> spectrum(spec.total());
    // place each mode in FFT ordering, undoing the origin phase and unitary scaling
    GridFunction probe = GridFunction::zeros(spec, Domain::Frequency);
    const double scale = std::sqrt(static_cast<double>(spec.total()));
    for (std::size_t c = 0; c < wavevectors.size(); ++c) {
        int m[4];
        for (int a = 0; a < spec.d; ++a) {
            int k = wavevectors[c][static_cast<std::size_t>(a)];
            if (k >= spec.n / 2 || k <= -spec.n / 2) fail(ErrorCode::InvalidInput, "mode outside grid band");
            m[a] = k < 0 ? k + spec.n : k;
        }
        spectrum[probe.ravel(m)] += amplitudes[c] * scale;
    }
    idft_inplace(spec, spectrum);
    return GridFunction(spec, std::move(spectrum));
}

BandLimitedField BandLimitedField::random_real(const GridSpec& spec, int modes, int kmax, std::mt19937_64& rng) {
    spec.validate();
    if (kmax < 0 || kmax >= spec.n / 2) fail(ErrorCode::InvalidInput, "kmax must lie below n/2");
    BandLimitedField f;
    f.spec = spec;
    std::uniform_int_distribution<int> pick(-kmax, kmax);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int c = 0; c < modes; ++c) {
        std::array<int, 4> k{0, 0, 0, 0};
        for (int a = 0; a < spec.d; ++a) k[static_cast<std::size_t>(a)] = pick(rng);
        cplx amp(gauss(rng), gauss(rng));
        f.wavevectors.push_back(k);
        f.amplitudes.push_back(0.5 * amp);
        std::array<int, 4> neg{-k[0], -k[1], -k[2], -k[3]};
        f.wavevectors.push_back(neg);
        f.amplitudes.push_back(0.5 * std::conj(amp));
    }
    return f;
}

} // namespace sphvar
