// SPDX-License-Identifier: Apache-2.0
#include "leoscat/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace leoscat {

namespace {

// Oversampling of the inner u-integral relative to the frequency grid. The
// integrand carries inverse-square-root singularities at both u endpoints,
// where the midpoint rule converges like sqrt(h); the extra resolution keeps
// the pointwise density error well below the cross-method tolerance.
constexpr int kInnerOversample = 16;

std::vector<double> midpoint_grid(int n) {
    std::vector<double> grid(n);
    const double h = 2.0 / n;
    for (int i = 0; i < n; ++i) grid[i] = -1.0 + (i + 0.5) * h;
    return grid;
}

int bin_index(double w, int n_bins) {
    // Right-open bins over [-1, 1] with the final bin closed at +1.
    const double width = 2.0 / n_bins;
    int idx = static_cast<int>(std::floor((w + 1.0) / width));
    return std::clamp(idx, 0, n_bins - 1);
}

} // namespace

double DopplerSpectrum::continuous_mass() const {
    double m = 0.0;
    for (double d : density) m += d;
    return m * bin_width;
}

double DopplerSpectrum::line_power() const {
    double p = 0.0;
    for (const auto& line : lines) p += line.power;
    return p;
}

CorrelationTrace autocorrelation(const JointAoaPdf& pdf, double f_d_hz,
                                 const std::vector<double>& lags_s, const QuadratureSpec& spec) {
    // Normalize by the quadrature mass so the zero-lag value is exactly one.
    double mass = 0.0;
    for (const auto& iv : pdf.support().intervals()) {
        mass += integrate_2d([&](double a, double b) { return pdf.raw_density(a, b); },
                             Bracket{iv.lo, iv.hi}, Bracket{0.0, kHalfPi}, spec);
    }
    CorrelationTrace trace;
    trace.lags_s = lags_s;
    trace.values.reserve(lags_s.size());
    for (double tau : lags_s) {
        const double omega = kTwoPi * f_d_hz * tau;
        double re = 0.0, im = 0.0;
        for (const auto& iv : pdf.support().intervals()) {
            re += integrate_2d(
                [&](double a, double b) {
                    return pdf.raw_density(a, b) * std::cos(omega * std::cos(a) * std::cos(b));
                },
                Bracket{iv.lo, iv.hi}, Bracket{0.0, kHalfPi}, spec);
            im += integrate_2d(
                [&](double a, double b) {
                    return pdf.raw_density(a, b) * std::sin(omega * std::cos(a) * std::cos(b));
                },
                Bracket{iv.lo, iv.hi}, Bracket{0.0, kHalfPi}, spec);
        }
        trace.values.emplace_back(re / mass, im / mass);
    }
    return trace;
}

DopplerSpectrum psd_delta(const JointAoaPdf& pdf, double f_d_hz, const QuadratureSpec& spec) {
    spec.validate();
    if (!pdf.support().symmetric())
        throw unsupported_transform_error(
            "psd_delta: azimuth support is not symmetric under alpha -> -alpha; use psd_binned");

    const int nf = spec.points_per_axis;
    DopplerSpectrum s;
    s.freq_grid = midpoint_grid(nf);
    s.density.assign(nf, 0.0);
    s.bin_width = 2.0 / nf;
    s.f_d_hz = f_d_hz;

    const int nu = kInnerOversample * spec.points_per_axis;
    for (int i = 0; i < nf; ++i) {
        const double fn = s.freq_grid[i];
        double lo, hi;
        if (fn > 0.0) {
            lo = fn;
            hi = 1.0;
        } else {
            lo = -1.0;
            hi = fn;
        }
        const double h = (hi - lo) / nu;
        double acc = 0.0;
        for (int k = 0; k < nu; ++k) {
            const double u = lo + (k + 0.5) * h;
            const double v = fn / u;
            acc += uv_pdf(pdf, u, v) / std::abs(u);
        }
        s.density[i] = acc * h;
    }
    return s;
}

DopplerSpectrum psd_binned(const JointAoaPdf& pdf, double f_d_hz, int n_bins,
                           const QuadratureSpec& spec) {
    if (n_bins < 8) throw std::invalid_argument("psd_binned: n_bins must be >= 8");
    spec.validate();

    std::vector<double> mass(n_bins, 0.0);
    const int nb = spec.points_per_axis;
    const double hb = kHalfPi / nb;
    std::vector<double> cb(nb), sb(nb);
    for (int j = 0; j < nb; ++j) {
        const double beta = (j + 0.5) * hb;
        cb[j] = std::cos(beta);
        sb[j] = std::sin(beta);
    }
    const double norm = pdf.normalization();
    const EllipsoidAxes& axes = pdf.axes();
    const double ce = std::cos(pdf.elevation().radians());
    const double se = std::sin(pdf.elevation().radians());
    const double inv_two_pi_abc = 1.0 / (kTwoPi * axes.a * axes.b * axes.c);

    for (const auto& iv : pdf.support().intervals()) {
        const double len = iv.hi - iv.lo;
        const int na = std::max(16, static_cast<int>(std::lround(nb * len / kTwoPi)));
        const double ha = len / na;
        for (int i = 0; i < na; ++i) {
            const double alpha = iv.lo + (i + 0.5) * ha;
            const double ca = std::cos(alpha), sa = std::sin(alpha);
            for (int j = 0; j < nb; ++j) {
                const double rm = r_max_direction(ca, sa, cb[j], sb[j], axes, ce, se);
                const double p = rm * rm * rm * cb[j] * inv_two_pi_abc * norm;
                const double w = ca * cb[j];
                mass[bin_index(w, n_bins)] += p * ha * hb;
            }
        }
    }

    DopplerSpectrum s;
    s.freq_grid = midpoint_grid(n_bins);
    s.bin_width = 2.0 / n_bins;
    s.f_d_hz = f_d_hz;
    s.density.resize(n_bins);
    for (int b = 0; b < n_bins; ++b) s.density[b] = mass[b] / s.bin_width;
    return s;
}

DopplerSpectrum compose_rician(const DopplerSpectrum& nlos, double k_factor, double f_los) {
    if (k_factor < 0.0) throw std::invalid_argument("compose_rician: K must be >= 0");
    if (!nlos.lines.empty())
        throw std::invalid_argument("compose_rician: input spectrum already carries lines");
    DopplerSpectrum out = nlos;
    const double continuous_fraction = 1.0 / (k_factor + 1.0);
    for (double& d : out.density) d *= continuous_fraction;
    out.lines.push_back({f_los, k_factor / (k_factor + 1.0)});
    return out;
}

DopplerSpectrum flip_spectrum(const DopplerSpectrum& s) {
    DopplerSpectrum out = s;
    std::reverse(out.density.begin(), out.density.end());
    for (auto& line : out.lines) line.freq = -line.freq;
    return out;
}

std::complex<double> inverse_transform_at(const DopplerSpectrum& s, double lag_s) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < s.freq_grid.size(); ++i) {
        const double phase = kTwoPi * s.f_d_hz * s.freq_grid[i] * lag_s;
        acc += s.density[i] * s.bin_width * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    for (const auto& line : s.lines) {
        const double phase = kTwoPi * s.f_d_hz * line.freq * lag_s;
        acc += line.power * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc;
}

double l1_distance(const DopplerSpectrum& a, const DopplerSpectrum& b) {
    if (a.freq_grid.size() != b.freq_grid.size())
        throw std::invalid_argument("l1_distance: spectra sampled on different grids");
    for (std::size_t i = 0; i < a.freq_grid.size(); ++i) {
        if (std::abs(a.freq_grid[i] - b.freq_grid[i]) > 1e-9)
            throw std::invalid_argument("l1_distance: spectra sampled on different grids");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.density.size(); ++i)
        acc += std::abs(a.density[i] - b.density[i]);
    return acc * a.bin_width;
}

double positive_mass_fraction(const DopplerSpectrum& s) {
    // A cell centered exactly at zero straddles the split; assign half of it
    // to each side.
    double pos = 0.0, total = 0.0;
    for (std::size_t i = 0; i < s.freq_grid.size(); ++i) {
        total += s.density[i];
        if (s.freq_grid[i] > 0.0)
            pos += s.density[i];
        else if (s.freq_grid[i] == 0.0)
            pos += 0.5 * s.density[i];
    }
    return total > 0.0 ? pos / total : 0.0;
}

double mirrored_l1(const DopplerSpectrum& s) {
    const std::size_t n = s.density.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::abs(s.density[i] - s.density[n - 1 - i]);
    return acc * s.bin_width;
}

double discontinuity_gap(const DopplerSpectrum& s) {
    // First cells strictly below and above zero.
    double below = 0.0, above = 0.0;
    bool have_below = false, have_above = false;
    for (std::size_t i = 0; i < s.freq_grid.size(); ++i) {
        if (s.freq_grid[i] < 0.0) {
            below = s.density[i];
            have_below = true;
        } else if (s.freq_grid[i] > 0.0) {
            above = s.density[i];
            have_above = true;
            break;
        }
    }
    if (!have_below || !have_above)
        throw std::invalid_argument("discontinuity_gap: grid does not straddle zero");
    return below - above;
}

DopplerSpectrum rebin_spectrum(const DopplerSpectrum& s, int n_bins) {
    if (n_bins < 2) throw std::invalid_argument("rebin_spectrum: n_bins must be >= 2");
    std::vector<double> mass(n_bins, 0.0);
    for (std::size_t i = 0; i < s.freq_grid.size(); ++i)
        mass[bin_index(s.freq_grid[i], n_bins)] += s.density[i] * s.bin_width;

    DopplerSpectrum out;
    out.freq_grid = midpoint_grid(n_bins);
    out.bin_width = 2.0 / n_bins;
    out.f_d_hz = s.f_d_hz;
    out.lines = s.lines;
    out.density.resize(n_bins);
    for (int b = 0; b < n_bins; ++b) out.density[b] = mass[b] / out.bin_width;
    return out;
}

} // namespace leoscat
