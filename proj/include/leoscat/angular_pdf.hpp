// SPDX-License-Identifier: Apache-2.0
//
// Joint and marginal angle-of-arrival densities over the semi-ellipsoid
// scatterer volume, including truncated azimuth supports and the
// (u, v) = (cos alpha, cos beta) change of variables feeding the Doppler
// spectrum.
#pragma once

#include <vector>

#include "leoscat/geometry.hpp"
#include "leoscat/numerics.hpp"

namespace leoscat {

/// Union of disjoint azimuth intervals within one 2*pi period. The default
/// support is the full circle.
class AzimuthSupport {
public:
    struct Interval {
        double lo;
        double hi;
    };

    /// Full circle [0, 2*pi).
    AzimuthSupport();

    /// Arbitrary intervals in radians; wrapping intervals (lo > hi) are split
    /// at 2*pi. Intervals are canonicalized into [0, 2*pi) and merged when
    /// touching.
    explicit AzimuthSupport(std::vector<Interval> intervals);

    static AzimuthSupport from_degrees(double lo_deg, double hi_deg);

    bool full_circle() const { return full_; }
    bool contains(double alpha) const;
    double total_length() const;
    /// True when the support maps onto itself under alpha -> -alpha.
    bool symmetric() const;
    const std::vector<Interval>& intervals() const { return intervals_; }

private:
    std::vector<Interval> intervals_;
    bool full_ = false;
};

/// Evaluable joint density p(alpha, beta) of the angle of arrival. The raw
/// density is r_max^3(alpha, beta) cos(beta) / (2 pi a b c); truncated
/// supports renormalize by the support mass so the density stays proper.
class JointAoaPdf {
public:
    JointAoaPdf(const EllipsoidAxes& axes, ElevationAngle elevation,
                AzimuthSupport support = AzimuthSupport(), const QuadratureSpec& spec = {});

    const EllipsoidAxes& axes() const { return axes_; }
    ElevationAngle elevation() const { return elevation_; }
    const AzimuthSupport& support() const { return support_; }
    /// 1 on full support, 1 / support-mass otherwise.
    double normalization() const { return normalization_; }
    /// Unnormalized probability mass of the support (1 for the full circle).
    double support_mass() const { return 1.0 / normalization_; }

    /// Density without the support indicator or renormalization.
    double raw_density(double alpha, double beta) const;

private:
    EllipsoidAxes axes_;
    ElevationAngle elevation_;
    AzimuthSupport support_;
    double normalization_;
    double cos_e_;
    double sin_e_;
    double inv_two_pi_abc_;
};

/// p(alpha, beta) in 1/rad^2; zero for azimuths outside the support.
double joint_pdf(const JointAoaPdf& pdf, double alpha, double beta);

/// Marginal azimuth density, integrating the joint over beta in [0, pi/2].
double marginal_azimuth(const JointAoaPdf& pdf, double alpha, const QuadratureSpec& spec = {});

/// Marginal elevation density, integrating the joint over the support.
double marginal_elevation(const JointAoaPdf& pdf, double beta, const QuadratureSpec& spec = {});

/// Density in (u, v) = (cos alpha, cos beta) space. Both azimuth branches
/// mapping to the same u are summed so probability mass is conserved.
/// Requires a support symmetric under alpha -> -alpha; asymmetric supports
/// must go through the binned spectral-mass path instead.
double uv_pdf(const JointAoaPdf& pdf, double u, double v);

} // namespace leoscat
