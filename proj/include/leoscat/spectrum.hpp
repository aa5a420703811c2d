// SPDX-License-Identifier: Apache-2.0
//
// Doppler power spectral densities of the scattered field, computed by two
// independent routes: collapsing the spectral delta against the (u, v)
// density, and binning spectral mass directly in angle space. Spectra are
// normalized: frequencies are f / f_d and the continuous density plus any
// discrete lines integrate to one.
#pragma once

#include <complex>
#include <vector>

#include "leoscat/angular_pdf.hpp"

namespace leoscat {

/// Discrete spectral line at a normalized frequency.
struct SpectralLine {
    double freq;  // f / f_d
    double power; // fraction of total power in [0, 1]
};

/// Continuous PSD sampled on a uniform normalized frequency grid, plus
/// optional discrete lines. density[i] is per unit normalized frequency.
struct DopplerSpectrum {
    std::vector<double> freq_grid; // cell centers, ascending, inside [-1, 1]
    std::vector<double> density;
    double bin_width = 0.0;
    double f_d_hz = 0.0; // signed physical Doppler scale
    std::vector<SpectralLine> lines;

    /// Trapezoid-free mass: sum density * bin_width.
    double continuous_mass() const;
    double line_power() const;
};

/// Complex field autocorrelation trace over the given lags.
struct CorrelationTrace {
    std::vector<double> lags_s;
    std::vector<std::complex<double>> values; // unit magnitude at lag 0
};

/// Autocorrelation of the scattered field from the joint AoA density:
/// R(tau) = E[p * exp(j 2 pi f_d tau cos(alpha) cos(beta))], normalized so
/// R(0) = 1 exactly.
CorrelationTrace autocorrelation(const JointAoaPdf& pdf, double f_d_hz,
                                 const std::vector<double>& lags_s,
                                 const QuadratureSpec& spec = {});

/// PSD by collapsing the frequency delta against the (u, v) density:
/// S(f) = integral of uv_pdf(u, f / u) / |u| du with the midpoint rule.
/// Reported on spec.points_per_axis interior midpoints of [-1, 1]. Requires
/// an azimuth support symmetric under alpha -> -alpha.
DopplerSpectrum psd_delta(const JointAoaPdf& pdf, double f_d_hz, const QuadratureSpec& spec = {});

/// PSD by per-bin spectral mass: for each normalized-frequency bin, the
/// probability that cos(alpha) cos(beta) falls inside it, computed on a fine
/// angular grid. Works for any azimuth support, including truncated ones.
DopplerSpectrum psd_binned(const JointAoaPdf& pdf, double f_d_hz, int n_bins,
                           const QuadratureSpec& spec = {});

/// Rician composition: scales the continuous density by 1 / (K + 1) and adds
/// a line of power K / (K + 1) at the normalized LOS frequency.
DopplerSpectrum compose_rician(const DopplerSpectrum& nlos, double k_factor, double f_los);

/// Mirrors the density about f = 0 and negates line frequencies. Realizes
/// elevations beyond zenith from the folded geometry; an exact involution.
DopplerSpectrum flip_spectrum(const DopplerSpectrum& s);

/// Inverse transform of the sampled spectrum (plus lines) at one lag.
std::complex<double> inverse_transform_at(const DopplerSpectrum& s, double lag_s);

/// L1 distance between densities sampled on identical grids.
double l1_distance(const DopplerSpectrum& a, const DopplerSpectrum& b);

/// Fraction of continuous mass at positive normalized frequency.
double positive_mass_fraction(const DopplerSpectrum& s);

/// L1 distance between the density and its mirror image.
double mirrored_l1(const DopplerSpectrum& s);

/// density(0-) - density(0+), read from the first cells strictly below and
/// above zero.
double discontinuity_gap(const DopplerSpectrum& s);

/// Mass-preserving rebin of the spectrum onto n_bins uniform bins over
/// [-1, 1]; cell mass is assigned by cell center and out-of-band mass is
/// clamped into the edge bins.
DopplerSpectrum rebin_spectrum(const DopplerSpectrum& s, int n_bins);

} // namespace leoscat
