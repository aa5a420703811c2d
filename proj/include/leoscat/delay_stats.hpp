// SPDX-License-Identifier: Apache-2.0
//
// Excess-path moments and RMS delay spread of the semi-ellipsoid scatterer
// volume, plus the elevation-to-delay-spread schedule driving the solver.
#pragma once

#include <string>
#include <vector>

#include "leoscat/geometry.hpp"
#include "leoscat/numerics.hpp"

namespace leoscat {

/// Piecewise-linear schedule of RMS delay spread versus elevation.
struct DelaySpreadSchedule {
    struct Knot {
        double elevation_deg;
        double sigma_tau_ns;
    };
    std::vector<Knot> knots;

    /// Built-in urban NLOS schedule: 250 ns at the horizon tapering to 30 ns
    /// at zenith, in 10-degree steps.
    static DelaySpreadSchedule default_schedule();

    /// Loads a `elevation_deg,rms_delay_ns` CSV (header required).
    static DelaySpreadSchedule from_csv(const std::string& path);

    void validate() const;
};

/// Mean of r - x' over the scatterer volume, in meters.
double mean_excess_distance(const EllipsoidAxes& axes, ElevationAngle elevation,
                            const QuadratureSpec& spec = {});

/// Second moment of r - x' over the scatterer volume, in meters^2.
double second_moment_excess(const EllipsoidAxes& axes, ElevationAngle elevation,
                            const QuadratureSpec& spec = {});

struct ExcessMoments {
    double mean_m;
    double second_m2;
};

/// Both excess-path moments in one sweep over the quadrature grid (the two
/// integrands share the surface-range evaluation).
ExcessMoments excess_moments(const EllipsoidAxes& axes, ElevationAngle elevation,
                             const QuadratureSpec& spec = {});

/// RMS delay spread sqrt(E[(r-x')^2] - E[r-x']^2) / c0, in seconds.
double rms_delay_spread(const EllipsoidAxes& axes, ElevationAngle elevation,
                        const QuadratureSpec& spec = {});

/// Schedule lookup with linear interpolation between knots, in nanoseconds.
double delay_spread_target(double elevation_deg, const DelaySpreadSchedule& schedule);

} // namespace leoscat
