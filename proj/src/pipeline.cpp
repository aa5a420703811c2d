// SPDX-License-Identifier: Apache-2.0
#include "leoscat/pipeline.hpp"

#include <cmath>

#include "leoscat/angular_pdf.hpp"

namespace leoscat {

Scene solve_scene(const SceneSpec& spec) {
    if (!(spec.elevation_deg >= 0.0 && spec.elevation_deg <= 180.0))
        throw std::invalid_argument("solve_scene: elevation must lie in [0, 180] degrees");
    const ElevationAngle elevation = ElevationAngle::from_degrees(spec.elevation_deg);
    // Fold in degree space so that mirrored elevations build bit-identical
    // geometry (180 - e is exact in degrees, pi - x is not in radians).
    const double folded_deg =
        spec.elevation_deg > 90.0 ? 180.0 - spec.elevation_deg : spec.elevation_deg;
    const ElevationAngle folded = ElevationAngle::from_degrees(folded_deg);

    double sigma_ns;
    if (spec.sigma_tau_ns) {
        sigma_ns = *spec.sigma_tau_ns;
    } else {
        sigma_ns = delay_spread_target(folded_deg, spec.schedule);
    }

    EnvironmentSpec env{spec.height_m, folded, sigma_ns * 1e-9, spec.mode, spec.axis_ratio, 0.0};
    if (spec.mode == ClosureMode::max_delay) {
        if (!spec.max_delay_ns)
            throw std::invalid_argument("solve_scene: max_delay mode requires a max delay value");
        env.max_relative_delay_s = *spec.max_delay_ns * 1e-9;
    }

    Scene scene{solve_axes(env), elevation, folded, elevation.beyond_zenith(), sigma_ns * 1e-9};
    return scene;
}

DopplerSpectrum scene_spectrum(const Scene& scene, PsdMethod method, const AzimuthSupport& support,
                               int n_bins, double f_d_hz, const QuadratureSpec& spec) {
    JointAoaPdf pdf(scene.axes, scene.folded, support, spec);
    DopplerSpectrum s = (method == PsdMethod::delta) ? psd_delta(pdf, f_d_hz, spec)
                                                     : psd_binned(pdf, f_d_hz, n_bins, spec);
    return scene.mirrored ? flip_spectrum(s) : s;
}

} // namespace leoscat
