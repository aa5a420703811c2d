// SPDX-License-Identifier: Apache-2.0
//
// Rotated semi-ellipsoid scatterer geometry. The scatterer volume is the
// upper half (z >= 0) of an ellipsoid whose semi-major axis a is aligned
// with the line of sight; the rotated frame (x', y', z') is obtained by
// rotating the global frame about the y-axis by the elevation angle.
#pragma once

#include <cmath>

#include "leoscat/constants.hpp"
#include "leoscat/errors.hpp"
#include "leoscat/numerics.hpp"

namespace leoscat {

/// Elevation angle of the satellite line of sight, in [0, pi]. The analytic
/// pipeline operates on the folded angle min(v, pi - v); angles beyond
/// zenith mirror the Doppler axis instead of changing the geometry.
class ElevationAngle {
public:
    explicit ElevationAngle(double radians) : value_(radians) {
        if (!(radians >= 0.0 && radians <= kPi))
            throw std::invalid_argument("ElevationAngle: value must lie in [0, pi]");
    }
    static ElevationAngle from_degrees(double deg) { return ElevationAngle(deg_to_rad(deg)); }

    double radians() const { return value_; }
    double degrees() const { return rad_to_deg(value_); }
    bool beyond_zenith() const { return value_ > kHalfPi; }
    ElevationAngle folded() const {
        return ElevationAngle(value_ > kHalfPi ? kPi - value_ : value_);
    }

private:
    double value_;
};

/// Semi-axis lengths of the scatterer ellipsoid: a along the line of sight,
/// b cross-track, c along the rotated vertical.
struct EllipsoidAxes {
    double a;
    double b;
    double c;

    void validate() const {
        if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0) || !std::isfinite(a) || !std::isfinite(b) ||
            !std::isfinite(c))
            throw std::invalid_argument("EllipsoidAxes: all semi-axes must be positive and finite");
    }
};

struct GlobalPoint {
    double x;
    double y;
    double z;
};

struct RotatedPoint {
    double x;
    double y;
    double z;
};

enum class ClosureMode {
    axis_ratio, // b = ratio * a; a solved against the delay-spread target
    max_delay   // (a, c) from the max relative delay; b solved against the target
};

/// Inputs driving the geometry solve at one elevation angle.
struct EnvironmentSpec {
    double height_m;             // maximum building height H
    ElevationAngle elevation;
    double sigma_tau_target_s;   // target RMS delay spread
    ClosureMode mode = ClosureMode::axis_ratio;
    double axis_ratio = 0.6;           // used in axis_ratio mode
    double max_relative_delay_s = 0.0; // used in max_delay mode

    void validate() const;
};

GlobalPoint rotate_to_global(const RotatedPoint& p, ElevationAngle elevation);
RotatedPoint rotate_to_prime(const GlobalPoint& p, ElevationAngle elevation);

/// Surface range in direction (cos/sin of azimuth and elevation AoA), with
/// the rotation angle passed as precomputed cos/sin. Hot path shared by the
/// quadrature integrands.
inline double r_max_direction(double cos_a, double sin_a, double cos_b, double sin_b,
                              const EllipsoidAxes& axes, double cos_e, double sin_e) {
    const double u1 = cos_a * cos_b * cos_e + sin_b * sin_e;
    const double u2 = sin_a * cos_b;
    const double u3 = sin_b * cos_e - cos_a * cos_b * sin_e;
    const double q = (u1 * u1) / (axes.a * axes.a) + (u2 * u2) / (axes.b * axes.b) +
                     (u3 * u3) / (axes.c * axes.c);
    return 1.0 / std::sqrt(q);
}

/// Distance from the receiver to the ellipsoid surface in direction
/// (alpha, beta). Strictly positive for valid axes.
double r_max(double alpha, double beta, const EllipsoidAxes& axes, ElevationAngle elevation);

/// Excess path delay of a scatterer at range r in direction (alpha, beta),
/// in seconds. Constant on rings of constant (x', sqrt(y'^2 + z'^2)).
double relative_delay(double alpha, double beta, double r, ElevationAngle elevation);

/// Smallest rotated-frame x' over the half-ellipsoid (z >= 0); never below -a.
double x_prime_min(const EllipsoidAxes& axes, ElevationAngle elevation);

/// Largest excess delay over the scatterer volume, attained at the surface
/// point with minimum x'.
double max_relative_delay(const EllipsoidAxes& axes, ElevationAngle elevation);

/// Largest global altitude over the ellipsoid surface.
double max_height(const EllipsoidAxes& axes, ElevationAngle elevation);

/// Vertical semi-axis c that makes the ellipsoid top reach height H.
/// Throws degenerate_angle_error at 90 degrees (use the a = H limit) and
/// infeasible_geometry_error when a sin(elevation) > H.
double c_from_a(double a, double height_m, ElevationAngle elevation);

/// Solves the semi-axis lengths from the environment description. Elevations
/// beyond zenith are folded before solving. Throws unreachable_target_error
/// when no axes within the search bracket meet the delay-spread target.
EllipsoidAxes solve_axes(const EnvironmentSpec& spec);

} // namespace leoscat
