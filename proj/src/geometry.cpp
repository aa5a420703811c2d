// SPDX-License-Identifier: Apache-2.0
#include "leoscat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "leoscat/delay_stats.hpp"

namespace leoscat {

namespace {

// Solver-internal quadrature: crossings are located on a coarse grid (the
// azimuth direction is periodic, so the trapezoid rule converges far faster
// than the spacing suggests) and polished on the default-resolution grid so
// the returned root reproduces the reported delay spread without a
// grid-mismatch bias.
const QuadratureSpec kScanSpec{128, QuadratureRule::trapezoid, 1e-4, false};
const QuadratureSpec kSolveSpec{};

constexpr int kScanIntervals = 96;
constexpr double kZenithTol = 1e-12;
constexpr double kVerifyRelTol = 3e-3;
// Acceptance band for targets that graze the attainable extremum without a
// sign change: the solver returns the closest-approach geometry when its
// delay spread lies within this relative distance of the target.
constexpr double kTangentRelTol = 5e-3;

// Scan-grade delay spread: clamps the variance instead of throwing, since
// the geometric scan brackets pass through highly eccentric trial axes whose
// coarse-grid moments can be grossly aliased. Candidate roots are verified
// against the default grid before being accepted.
double sigma_lenient(const EllipsoidAxes& axes, ElevationAngle elevation,
                     const QuadratureSpec& spec) {
    const ExcessMoments m = excess_moments(axes, elevation, spec);
    const double variance = std::max(0.0, m.second_m2 - m.mean_m * m.mean_m);
    return std::sqrt(variance) / kSpeedOfLight;
}

[[noreturn]] void throw_unreachable(const char* what, double target, double lo, double hi) {
    std::ostringstream os;
    os << what << ": target " << target << " outside attainable range [" << lo << ", " << hi
       << "]";
    throw unreachable_target_error(os.str(), lo, hi);
}

// Root of sigma(x) = target where make_axes(x) builds the trial geometry.
// Geometrically scans from `from` toward `to` (either direction), polishes
// every sign-change subinterval in scan order, and accepts the first root
// whose default-grid delay spread reproduces the target. The scan direction
// therefore controls which crossing wins when sigma is not monotone.
template <typename MakeAxes>
double solve_sigma_root(MakeAxes&& make_axes, ElevationAngle elevation, double target_s,
                        double from, double to, const char* what) {
    auto residual_coarse = [&](double x) {
        return sigma_lenient(make_axes(x), elevation, kScanSpec) - target_s;
    };
    auto residual_fine = [&](double x) {
        return sigma_lenient(make_axes(x), elevation, kSolveSpec) - target_s;
    };

    const double ratio = std::pow(to / from, 1.0 / kScanIntervals);
    std::vector<double> xs(kScanIntervals + 1), gs(kScanIntervals + 1);
    for (int i = 0; i <= kScanIntervals; ++i) {
        xs[i] = (i == 0) ? from : (i == kScanIntervals) ? to : from * std::pow(ratio, i);
        gs[i] = residual_coarse(xs[i]);
    }

    double seen_lo = gs[0], seen_hi = gs[0];
    for (int i = 1; i <= kScanIntervals; ++i) {
        seen_lo = std::min(seen_lo, gs[i]);
        seen_hi = std::max(seen_hi, gs[i]);
        if ((gs[i - 1] > 0.0) != (gs[i] > 0.0) || gs[i - 1] == 0.0) {
            double blo = std::min(xs[i - 1], xs[i]), bhi = std::max(xs[i - 1], xs[i]);
            if ((residual_fine(blo) > 0.0) != (residual_fine(bhi) > 0.0)) {
                const double tol = 1e-9 * std::max(std::abs(blo), std::abs(bhi));
                const double root = find_root(residual_fine, Bracket{blo, bhi}, tol);
                try {
                    const double sigma = rms_delay_spread(make_axes(root), elevation);
                    if (std::abs(sigma - target_s) <= kVerifyRelTol * target_s) return root;
                } catch (const internal_consistency_error&) {
                    // aliased candidate, keep scanning
                }
            }
        }
    }

    // No crossing: the target may still graze the attainable extremum. Refine
    // the closest approach with a golden-section search around the best scan
    // point and accept it when it reproduces the target within the band.
    int best = 0;
    for (int i = 1; i <= kScanIntervals; ++i)
        if (std::abs(gs[i]) < std::abs(gs[best])) best = i;
    double lo = xs[std::max(0, best - 1)];
    double hi = xs[std::min(kScanIntervals, best + 1)];
    if (lo > hi) std::swap(lo, hi);
    const double gr = 0.6180339887498949;
    auto closeness = [&](double x) { return std::abs(residual_fine(x)); };
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = closeness(x1), f2 = closeness(x2);
    for (int it = 0; it < 48; ++it) {
        if (f1 > f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = closeness(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = closeness(x1);
        }
    }
    const double x_best = 0.5 * (lo + hi);
    try {
        const double sigma = rms_delay_spread(make_axes(x_best), elevation);
        if (std::abs(sigma - target_s) <= kTangentRelTol * target_s) return x_best;
    } catch (const internal_consistency_error&) {
    }
    throw_unreachable(what, target_s, seen_lo + target_s, seen_hi + target_s);
}

} // namespace

void EnvironmentSpec::validate() const {
    if (!(height_m > 0.0)) throw std::invalid_argument("EnvironmentSpec: H must be > 0");
    if (!(sigma_tau_target_s > 0.0))
        throw std::invalid_argument("EnvironmentSpec: sigma_tau_target must be > 0");
    if (mode == ClosureMode::axis_ratio) {
        if (!(axis_ratio > 0.0 && axis_ratio <= 1.0))
            throw std::invalid_argument("EnvironmentSpec: axis_ratio must lie in (0, 1]");
    } else {
        if (!(max_relative_delay_s > 0.0))
            throw std::invalid_argument("EnvironmentSpec: max_relative_delay must be > 0");
    }
}

RotatedPoint rotate_to_prime(const GlobalPoint& p, ElevationAngle elevation) {
    const double ce = std::cos(elevation.radians());
    const double se = std::sin(elevation.radians());
    return {p.x * ce + p.z * se, p.y, -p.x * se + p.z * ce};
}

GlobalPoint rotate_to_global(const RotatedPoint& p, ElevationAngle elevation) {
    const double ce = std::cos(elevation.radians());
    const double se = std::sin(elevation.radians());
    return {p.x * ce - p.z * se, p.y, p.x * se + p.z * ce};
}

double r_max(double alpha, double beta, const EllipsoidAxes& axes, ElevationAngle elevation) {
    axes.validate();
    return r_max_direction(std::cos(alpha), std::sin(alpha), std::cos(beta), std::sin(beta), axes,
                           std::cos(elevation.radians()), std::sin(elevation.radians()));
}

double relative_delay(double alpha, double beta, double r, ElevationAngle elevation) {
    if (r < 0.0) throw std::invalid_argument("relative_delay: r must be >= 0");
    const double k = std::cos(alpha) * std::cos(beta) * std::cos(elevation.radians()) +
                     std::sin(beta) * std::sin(elevation.radians());
    return std::max(0.0, r * (1.0 - k)) / kSpeedOfLight;
}

double x_prime_min(const EllipsoidAxes& axes, ElevationAngle elevation) {
    axes.validate();
    const double ce = std::cos(elevation.radians());
    const double se = std::sin(elevation.radians());
    const double q = (ce * ce) / (axes.a * axes.a) + (se * se) / (axes.c * axes.c);
    return -ce / std::sqrt(q);
}

double max_relative_delay(const EllipsoidAxes& axes, ElevationAngle elevation) {
    axes.validate();
    const double ce = std::cos(elevation.radians());
    const double se = std::sin(elevation.radians());
    const double q = (ce * ce) / (axes.a * axes.a) + (se * se) / (axes.c * axes.c);
    return (1.0 + ce) / (kSpeedOfLight * std::sqrt(q));
}

double max_height(const EllipsoidAxes& axes, ElevationAngle elevation) {
    axes.validate();
    const double ce = std::cos(elevation.radians());
    const double se = std::sin(elevation.radians());
    return std::sqrt(axes.a * axes.a * se * se + axes.c * axes.c * ce * ce);
}

double c_from_a(double a, double height_m, ElevationAngle elevation) {
    if (!(a > 0.0) || !(height_m > 0.0))
        throw std::invalid_argument("c_from_a: a and H must be > 0");
    const double se = std::sin(elevation.radians());
    const double ce = std::cos(elevation.radians());
    if (std::abs(ce) < kZenithTol)
        throw degenerate_angle_error("c_from_a: degenerate at 90 degrees, use the a = H limit");
    if (se == 0.0) return height_m;
    const double num = height_m * height_m - a * a * se * se;
    if (num < 0.0) {
        std::ostringstream os;
        os << "c_from_a: a*sin(elevation) = " << a * se << " exceeds H = " << height_m;
        throw infeasible_geometry_error(os.str());
    }
    return std::sqrt(num) / ce;
}

EllipsoidAxes solve_axes(const EnvironmentSpec& spec) {
    spec.validate();
    const ElevationAngle elev = spec.elevation.folded();
    const double H = spec.height_m;
    const double se = std::sin(elev.radians());
    const bool at_zenith = std::abs(elev.radians() - kHalfPi) < kZenithTol;
    const double eps = 1e-3 * H;
    // Upper bound for a solved cross-section semi-axis: the delay spread of a
    // degenerate needle of half-length L is about 0.24 L / c0, so no root can
    // sit far above the target scale.
    const double needle_bound = 20.0 * kSpeedOfLight * spec.sigma_tau_target_s;

    if (spec.mode == ClosureMode::max_delay) {
        double a, c;
        if (at_zenith) {
            // Closed form: the height constraint pins a and the delay pins c.
            a = H;
            c = kSpeedOfLight * spec.max_relative_delay_s;
        } else {
            // One-dimensional root in a; the delay is unimodal in a over the
            // feasible interval, so restrict to the rising branch up to the
            // peak at a = H / (sqrt(2) sin(elevation)).
            double a_hi = (se > 1e-3) ? std::min(H / (std::sqrt(2.0) * se), 1e3 * H) : 1e3 * H;
            auto delay_residual = [&](double a_try) {
                EllipsoidAxes axes{a_try, a_try, c_from_a(a_try, H, elev)};
                return max_relative_delay(axes, elev) - spec.max_relative_delay_s;
            };
            const double g_lo = delay_residual(eps);
            const double g_hi = delay_residual(a_hi);
            if ((g_lo > 0.0) == (g_hi > 0.0))
                throw_unreachable("solve_axes (max delay)", spec.max_relative_delay_s,
                                  std::min(g_lo, g_hi) + spec.max_relative_delay_s,
                                  std::max(g_lo, g_hi) + spec.max_relative_delay_s);
            a = find_root(delay_residual, Bracket{eps, a_hi}, 1e-12 * H);
            c = c_from_a(a, H, elev);
        }
        // Scan from the top: sigma is nearly flat in b around moderate roots
        // and can cross the target more than once; the largest root is the
        // one the forward model regenerates.
        auto make_axes = [&](double b_try) { return EllipsoidAxes{a, b_try, c}; };
        const double b = solve_sigma_root(make_axes, elev, spec.sigma_tau_target_s,
                                          needle_bound + a + c, eps, "solve_axes (b)");
        EllipsoidAxes axes{a, b, c};
        axes.validate();
        return axes;
    }

    // Axis-ratio closure: b = ratio * a with c tied to the height constraint.
    if (at_zenith) {
        // a is pinned by the height constraint; c remains the free variable.
        const double a = H;
        const double b = spec.axis_ratio * a;
        auto make_axes = [&](double c_try) { return EllipsoidAxes{a, b, c_try}; };
        const double c = solve_sigma_root(make_axes, elev, spec.sigma_tau_target_s,
                                          needle_bound + a + b, 1e-6 * H,
                                          "solve_axes (c at zenith)");
        EllipsoidAxes axes{a, b, c};
        axes.validate();
        return axes;
    }

    // Scanning upward from the feasibility limit a_hi picks the largest
    // crossing, which is the branch continuing the zenith solution. The scan
    // runs in the distance-to-edge variable u = a_hi - a: near the edge c
    // collapses and sigma varies over tiny spans of a, so u needs the
    // logarithmic resolution there.
    const double a_hi = (se > 1e-3) ? H / se : 1e3 * H;
    auto make_axes = [&](double u) {
        const double a_try = a_hi - u;
        return EllipsoidAxes{a_try, spec.axis_ratio * a_try, c_from_a(a_try, H, elev)};
    };
    const double u = solve_sigma_root(make_axes, elev, spec.sigma_tau_target_s, 1e-9 * a_hi,
                                      a_hi - eps, "solve_axes (a)");
    EllipsoidAxes axes = make_axes(u);
    axes.validate();
    return axes;
}

} // namespace leoscat
