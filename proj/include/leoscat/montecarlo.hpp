// SPDX-License-Identifier: Apache-2.0
//
// Brute-force validation oracle: uniform scatterer sampling inside the
// rotated semi-ellipsoid, empirical angle/delay/Doppler statistics, and
// sum-of-rays waveform synthesis with Welch spectral estimation. Sampling is
// bit-reproducible from (axes, elevation, N, seed): every sample draws from
// its own counter-derived substream, so results do not depend on evaluation
// order.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "leoscat/geometry.hpp"
#include "leoscat/spectrum.hpp"

namespace leoscat::mc {

struct Ray {
    double alpha;        // azimuth AoA in [0, 2*pi)
    double beta;         // elevation AoA in [0, pi/2]
    double r;            // range to the scatterer, meters
    double excess_delay; // seconds, in [0, max relative delay]
    double doppler_norm; // cos(alpha) cos(beta), in [-1, 1]
    double amplitude;    // 1 / sqrt(N)
    double phase;        // uniform in [0, 2*pi)
};

struct RayEnsemble {
    std::vector<Ray> rays;
    EllipsoidAxes axes;
    ElevationAngle elevation; // folded angle the geometry was built with
    std::uint64_t seed;
    std::uint64_t attempts; // total proposals including rejected ones
};

struct EmpiricalHistogram {
    std::vector<double> edges;   // n_bins + 1
    std::vector<std::uint64_t> counts;
    std::vector<double> density; // normalized so the histogram integrates to 1
};

/// Draws N scatterers uniform in the half-ellipsoid volume: a uniform point
/// in the unit ball (normal triple scaled by U^(1/3)) is stretched by the
/// semi-axes in the rotated frame, rotated to global, and rejected while the
/// global altitude is negative.
RayEnsemble sample_rays(const EllipsoidAxes& axes, ElevationAngle elevation, std::size_t n,
                        std::uint64_t seed);

/// Histogram of the normalized per-ray Doppler over [-1, 1].
EmpiricalHistogram empirical_doppler(const RayEnsemble& ensemble, int n_bins);

struct DelayStatsSample {
    double mean_s;
    double rms_s; // sample standard deviation
    double max_s;
};

DelayStatsSample empirical_delay_stats(const RayEnsemble& ensemble);

struct MarginalHistograms {
    EmpiricalHistogram azimuth;   // over [0, 2*pi)
    EmpiricalHistogram elevation; // over [0, pi/2]
};

MarginalHistograms empirical_marginals(const RayEnsemble& ensemble, int n_bins);

/// Complex baseband time series with its sampling metadata.
struct WaveformSeries {
    std::vector<std::complex<double>> samples;
    double sample_rate_hz;
    double f_d_hz;
};

/// Sum-of-rays field E(t_k) = sum_l A_l exp(-j(2 pi f_d w_l (t_k - tau_l) + phi_l)).
/// Requires sample_rate > 4 |f_d|.
WaveformSeries synthesize_waveform(const RayEnsemble& ensemble, double f_d_hz, double duration_s,
                                   double sample_rate_hz);

/// Welch-averaged periodogram of the series, Hann windowed, normalized to
/// unit total power with the frequency axis rescaled to f / f_d.
DopplerSpectrum periodogram(const WaveformSeries& series, std::size_t segment_length,
                            double overlap_fraction);

/// L1 distance between a histogram and an analytic spectrum on the same bins.
double l1_distance(const EmpiricalHistogram& hist, const DopplerSpectrum& spectrum);

} // namespace leoscat::mc
