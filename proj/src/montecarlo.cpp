// SPDX-License-Identifier: Apache-2.0
#include "leoscat/montecarlo.hpp"

#include <algorithm>
#include <cmath>

namespace leoscat::mc {

namespace {

// SplitMix64: stateless-seedable counter generator. Each sample index gets
// its own substream so parallel or reordered evaluation cannot change the
// drawn values.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64{mix64(seed + 0xD1B54A32D192ED03ULL * (index + 1))};
}

// Box-Muller pair from two uniforms; the log argument is mapped into (0, 1].
void normal_pair(SplitMix64& rng, double& z1, double& z2) {
    const double u1 = 1.0 - rng.uniform01();
    const double u2 = rng.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    z1 = r * std::cos(kTwoPi * u2);
    z2 = r * std::sin(kTwoPi * u2);
}

EmpiricalHistogram make_histogram(const std::vector<double>& values, double lo, double hi,
                                  int n_bins) {
    if (n_bins < 1) throw std::invalid_argument("histogram: n_bins must be >= 1");
    EmpiricalHistogram h;
    const double width = (hi - lo) / n_bins;
    h.edges.resize(n_bins + 1);
    for (int b = 0; b <= n_bins; ++b) h.edges[b] = (b == n_bins) ? hi : lo + b * width;
    h.counts.assign(n_bins, 0);
    for (double v : values) {
        // Right-open bins, final bin closed at the upper edge.
        int idx = static_cast<int>(std::floor((v - lo) / width));
        idx = std::clamp(idx, 0, n_bins - 1);
        ++h.counts[idx];
    }
    h.density.resize(n_bins);
    const double total = static_cast<double>(values.size());
    for (int b = 0; b < n_bins; ++b)
        h.density[b] = total > 0.0 ? static_cast<double>(h.counts[b]) / (total * width) : 0.0;
    return h;
}

} // namespace

RayEnsemble sample_rays(const EllipsoidAxes& axes, ElevationAngle elevation, std::size_t n,
                        std::uint64_t seed) {
    axes.validate();
    if (n < 1) throw std::invalid_argument("sample_rays: need at least one sample");
    const ElevationAngle elev = elevation.folded();
    const double ce = std::cos(elev.radians());
    const double se = std::sin(elev.radians());
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(n));

    RayEnsemble ensemble{std::vector<Ray>(n), axes, elev, seed, 0};

    for (std::size_t i = 0; i < n; ++i) {
        SplitMix64 rng = substream(seed, i);
        for (;;) {
            ++ensemble.attempts;
            double z1, z2, z3, z4;
            normal_pair(rng, z1, z2);
            normal_pair(rng, z3, z4);
            const double radius_u = std::cbrt(rng.uniform01());
            const double norm = std::sqrt(z1 * z1 + z2 * z2 + z3 * z3);
            if (norm < 1e-154) continue;
            const double s = radius_u / norm;
            const RotatedPoint rp{axes.a * z1 * s, axes.b * z2 * s, axes.c * z3 * s};
            const GlobalPoint gp = rotate_to_global(rp, elev);
            if (gp.z < 0.0) continue;

            const double r = std::sqrt(gp.x * gp.x + gp.y * gp.y + gp.z * gp.z);
            if (r < 1e-154) continue;
            double alpha = std::atan2(gp.y, gp.x);
            if (alpha < 0.0) alpha += kTwoPi;
            const double beta = std::asin(std::clamp(gp.z / r, -1.0, 1.0));
            const double xprime = gp.x * ce + gp.z * se;

            Ray& ray = ensemble.rays[i];
            ray.alpha = alpha;
            ray.beta = beta;
            ray.r = r;
            ray.excess_delay = std::max(0.0, r - xprime) / kSpeedOfLight;
            ray.doppler_norm = std::clamp(gp.x / r, -1.0, 1.0);
            ray.amplitude = amplitude;
            ray.phase = kTwoPi * rng.uniform01();
            break;
        }
    }
    return ensemble;
}

EmpiricalHistogram empirical_doppler(const RayEnsemble& ensemble, int n_bins) {
    if (n_bins < 8) throw std::invalid_argument("empirical_doppler: n_bins must be >= 8");
    std::vector<double> values;
    values.reserve(ensemble.rays.size());
    for (const Ray& ray : ensemble.rays) values.push_back(ray.doppler_norm);
    return make_histogram(values, -1.0, 1.0, n_bins);
}

DelayStatsSample empirical_delay_stats(const RayEnsemble& ensemble) {
    const std::size_t n = ensemble.rays.size();
    double mean = 0.0, maxv = 0.0;
    for (const Ray& ray : ensemble.rays) {
        mean += ray.excess_delay;
        maxv = std::max(maxv, ray.excess_delay);
    }
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (const Ray& ray : ensemble.rays) {
        const double d = ray.excess_delay - mean;
        ss += d * d;
    }
    const double rms = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    return {mean, rms, maxv};
}

MarginalHistograms empirical_marginals(const RayEnsemble& ensemble, int n_bins) {
    if (n_bins < 8) throw std::invalid_argument("empirical_marginals: n_bins must be >= 8");
    std::vector<double> alphas, betas;
    alphas.reserve(ensemble.rays.size());
    betas.reserve(ensemble.rays.size());
    for (const Ray& ray : ensemble.rays) {
        alphas.push_back(ray.alpha);
        betas.push_back(ray.beta);
    }
    return {make_histogram(alphas, 0.0, kTwoPi, n_bins),
            make_histogram(betas, 0.0, kHalfPi, n_bins)};
}

WaveformSeries synthesize_waveform(const RayEnsemble& ensemble, double f_d_hz, double duration_s,
                                   double sample_rate_hz) {
    if (!(sample_rate_hz > 4.0 * std::abs(f_d_hz)))
        throw std::invalid_argument("synthesize_waveform: sample_rate must exceed 4 |f_d|");
    if (!(duration_s > 0.0))
        throw std::invalid_argument("synthesize_waveform: duration must be > 0");
    const std::size_t count = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
    if (count == 0) throw std::invalid_argument("synthesize_waveform: duration too short");

    WaveformSeries series;
    series.samples.assign(count, {0.0, 0.0});
    series.sample_rate_hz = sample_rate_hz;
    series.f_d_hz = f_d_hz;

    const double dt = 1.0 / sample_rate_hz;
    for (const Ray& ray : ensemble.rays) {
        // Rotating phasor: E_l(t) = A exp(-j(2 pi f_l (t - tau_l) + phi_l)).
        const double f_l = f_d_hz * ray.doppler_norm;
        const double phase0 = kTwoPi * f_l * ray.excess_delay - ray.phase;
        std::complex<double> phasor =
            ray.amplitude * std::complex<double>(std::cos(phase0), std::sin(phase0));
        const double dphi = -kTwoPi * f_l * dt;
        const std::complex<double> step(std::cos(dphi), std::sin(dphi));
        for (std::size_t k = 0; k < count; ++k) {
            series.samples[k] += phasor;
            phasor *= step;
        }
    }
    return series;
}

DopplerSpectrum periodogram(const WaveformSeries& series, std::size_t segment_length,
                            double overlap_fraction) {
    const std::size_t n = series.samples.size();
    if (segment_length < 8 || segment_length > n)
        throw std::invalid_argument("periodogram: segment_length must lie in [8, series length]");
    if (!(overlap_fraction >= 0.0 && overlap_fraction <= 0.9))
        throw std::invalid_argument("periodogram: overlap must lie in [0, 0.9]");
    if (series.f_d_hz == 0.0)
        throw std::invalid_argument("periodogram: series carries no Doppler scale");

    const std::size_t L = segment_length;
    const std::size_t hop =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(L * (1.0 - overlap_fraction))));
    const std::size_t n_segments = (n - L) / hop + 1;

    std::vector<double> window(L);
    for (std::size_t i = 0; i < L; ++i)
        window[i] = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(i) / (L - 1)));

    std::vector<double> power(L, 0.0);
    std::vector<std::complex<double>> seg(L);
    for (std::size_t m = 0; m < n_segments; ++m) {
        const std::size_t off = m * hop;
        for (std::size_t i = 0; i < L; ++i) seg[i] = series.samples[off + i] * window[i];
        // Direct DFT with a per-bin phase recurrence; segment lengths stay in
        // the hundreds so the quadratic cost is immaterial here. The kernel
        // is conjugated relative to the usual convention because the rays
        // rotate as exp(-j 2 pi f_l t): bin k then collects the tones with
        // f_l = +k df, matching the analytic spectra.
        for (std::size_t k = 0; k < L; ++k) {
            const double dphi = kTwoPi * static_cast<double>(k) / static_cast<double>(L);
            const std::complex<double> w(std::cos(dphi), std::sin(dphi));
            std::complex<double> tw(1.0, 0.0);
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t i = 0; i < L; ++i) {
                acc += seg[i] * tw;
                tw *= w;
            }
            power[k] += std::norm(acc);
        }
    }

    // Center the spectrum and rescale the axis to f / f_d.
    const double df = series.sample_rate_hz / static_cast<double>(L);
    DopplerSpectrum s;
    s.f_d_hz = series.f_d_hz;
    s.freq_grid.resize(L);
    s.density.resize(L);
    const long half = static_cast<long>(L / 2);
    for (std::size_t i = 0; i < L; ++i) {
        const long k_signed = static_cast<long>(i) - half;
        const std::size_t k = static_cast<std::size_t>((k_signed + static_cast<long>(L)) %
                                                       static_cast<long>(L));
        s.freq_grid[i] = static_cast<double>(k_signed) * df / series.f_d_hz;
        s.density[i] = power[k];
    }
    if (series.f_d_hz < 0.0) {
        std::reverse(s.freq_grid.begin(), s.freq_grid.end());
        std::reverse(s.density.begin(), s.density.end());
    }
    s.bin_width = std::abs(df / series.f_d_hz);

    double mass = 0.0;
    for (double d : s.density) mass += d * s.bin_width;
    if (mass > 0.0)
        for (double& d : s.density) d /= mass;
    return s;
}

double l1_distance(const EmpiricalHistogram& hist, const DopplerSpectrum& spectrum) {
    if (hist.density.size() != spectrum.density.size())
        throw std::invalid_argument("l1_distance: histogram and spectrum bin counts differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < hist.density.size(); ++i) {
        const double width = hist.edges[i + 1] - hist.edges[i];
        acc += std::abs(hist.density[i] - spectrum.density[i]) * width;
    }
    return acc;
}

} // namespace leoscat::mc
