// SPDX-License-Identifier: Apache-2.0
//
// End-to-end orchestration: resolve an elevation against the delay-spread
// schedule, solve the scatterer geometry, and derive spectra. Elevations
// beyond zenith are folded for the geometry and realized by mirroring the
// spectrum.
#pragma once

#include <optional>

#include "leoscat/delay_stats.hpp"
#include "leoscat/geometry.hpp"
#include "leoscat/spectrum.hpp"

namespace leoscat {

enum class PsdMethod { delta, binned };

/// Resolved scene description; all values are post-default.
struct SceneSpec {
    double height_m = 65.0;
    double elevation_deg = 0.0; // in [0, 180]
    ClosureMode mode = ClosureMode::axis_ratio;
    double axis_ratio = 0.6;
    std::optional<double> max_delay_ns;    // required in max_delay mode
    std::optional<double> sigma_tau_ns;    // defaults to the schedule value
    DelaySpreadSchedule schedule = DelaySpreadSchedule::default_schedule();
};

struct Scene {
    EllipsoidAxes axes;
    ElevationAngle elevation;  // as requested, possibly beyond zenith
    ElevationAngle folded;     // angle the geometry was built with
    bool mirrored;             // spectrum must be flipped for presentation
    double sigma_tau_target_s;
};

/// Solves the scatterer axes for the scene, folding the elevation and
/// resolving the delay-spread target from the schedule when not given.
Scene solve_scene(const SceneSpec& spec);

/// NLOS Doppler spectrum of the scene. Applies the zenith mirror when the
/// requested elevation exceeds 90 degrees.
DopplerSpectrum scene_spectrum(const Scene& scene, PsdMethod method, const AzimuthSupport& support,
                               int n_bins, double f_d_hz, const QuadratureSpec& spec = {});

} // namespace leoscat
