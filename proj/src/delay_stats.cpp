// SPDX-License-Identifier: Apache-2.0
#include "leoscat/delay_stats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace leoscat {

namespace {

// Trapezoid weights and nodes for one axis.
void fill_axis(double lo, double hi, int n, std::vector<double>& nodes,
               std::vector<double>& weights) {
    nodes.resize(n);
    weights.assign(n, 1.0);
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) nodes[i] = (i == n - 1) ? hi : lo + i * h;
    weights.front() = weights.back() = 0.5;
    for (double& w : weights) w *= h;
}

} // namespace

DelaySpreadSchedule DelaySpreadSchedule::default_schedule() {
    return DelaySpreadSchedule{{{0.0, 250.0},
                                {10.0, 183.7667},
                                {20.0, 125.1762},
                                {30.0, 85.4138},
                                {40.0, 63.7133},
                                {50.0, 50.0438},
                                {60.0, 40.9588},
                                {70.0, 34.9798},
                                {80.0, 31.5052},
                                {90.0, 30.0}}};
}

void DelaySpreadSchedule::validate() const {
    if (knots.size() < 2)
        throw std::invalid_argument("DelaySpreadSchedule: need at least two knots");
    if (knots.front().elevation_deg != 0.0 || knots.back().elevation_deg != 90.0)
        throw std::invalid_argument("DelaySpreadSchedule: knots must span 0 to 90 degrees");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!(knots[i].sigma_tau_ns > 0.0))
            throw std::invalid_argument("DelaySpreadSchedule: sigma_tau values must be > 0");
        if (i > 0 && !(knots[i].elevation_deg > knots[i - 1].elevation_deg))
            throw std::invalid_argument("DelaySpreadSchedule: elevations must strictly increase");
    }
}

DelaySpreadSchedule DelaySpreadSchedule::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("DelaySpreadSchedule: cannot open " + path);
    DelaySpreadSchedule schedule;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            // Header row is required; tolerate surrounding whitespace.
            std::string squashed;
            for (char ch : line)
                if (!std::isspace(static_cast<unsigned char>(ch))) squashed += ch;
            if (squashed != "elevation_deg,rms_delay_ns")
                throw std::invalid_argument(
                    "DelaySpreadSchedule: expected header 'elevation_deg,rms_delay_ns' in " + path);
            saw_header = true;
            continue;
        }
        std::istringstream is(line);
        double elev = 0.0, sigma = 0.0;
        char comma = 0;
        if (!(is >> elev >> comma >> sigma) || comma != ',')
            throw std::invalid_argument("DelaySpreadSchedule: malformed row '" + line + "'");
        schedule.knots.push_back({elev, sigma});
    }
    schedule.validate();
    return schedule;
}

double delay_spread_target(double elevation_deg, const DelaySpreadSchedule& schedule) {
    schedule.validate();
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0))
        throw std::invalid_argument("delay_spread_target: elevation must lie in [0, 90] degrees");
    const auto& k = schedule.knots;
    auto it = std::lower_bound(k.begin(), k.end(), elevation_deg,
                               [](const DelaySpreadSchedule::Knot& knot, double e) {
                                   return knot.elevation_deg < e;
                               });
    if (it == k.begin()) return it->sigma_tau_ns;
    if (it == k.end()) return k.back().sigma_tau_ns;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (elevation_deg - lo.elevation_deg) / (hi.elevation_deg - lo.elevation_deg);
    return lo.sigma_tau_ns + t * (hi.sigma_tau_ns - lo.sigma_tau_ns);
}

double mean_excess_distance(const EllipsoidAxes& axes, ElevationAngle elevation,
                            const QuadratureSpec& spec) {
    axes.validate();
    const ElevationAngle elev = elevation.folded();
    const double ce = std::cos(elev.radians());
    const double se = std::sin(elev.radians());
    auto integrand = [&](double alpha, double beta) {
        const double ca = std::cos(alpha), sa = std::sin(alpha);
        const double cb = std::cos(beta), sb = std::sin(beta);
        const double rm = r_max_direction(ca, sa, cb, sb, axes, ce, se);
        const double rm2 = rm * rm;
        const double k = ca * cb * ce + sb * se;
        return (1.0 - k) * cb * rm2 * rm2;
    };
    const double integral = integrate_2d(integrand, Bracket{0.0, kTwoPi}, Bracket{0.0, kHalfPi},
                                         spec);
    return 3.0 / (8.0 * kPi * axes.a * axes.b * axes.c) * integral;
}

double second_moment_excess(const EllipsoidAxes& axes, ElevationAngle elevation,
                            const QuadratureSpec& spec) {
    axes.validate();
    const ElevationAngle elev = elevation.folded();
    const double ce = std::cos(elev.radians());
    const double se = std::sin(elev.radians());
    auto integrand = [&](double alpha, double beta) {
        const double ca = std::cos(alpha), sa = std::sin(alpha);
        const double cb = std::cos(beta), sb = std::sin(beta);
        const double rm = r_max_direction(ca, sa, cb, sb, axes, ce, se);
        const double rm2 = rm * rm;
        const double k = 1.0 - (ca * cb * ce + sb * se);
        return k * k * cb * rm2 * rm2 * rm;
    };
    const double integral = integrate_2d(integrand, Bracket{0.0, kTwoPi}, Bracket{0.0, kHalfPi},
                                         spec);
    return 3.0 / (10.0 * kPi * axes.a * axes.b * axes.c) * integral;
}

ExcessMoments excess_moments(const EllipsoidAxes& axes, ElevationAngle elevation,
                             const QuadratureSpec& spec) {
    axes.validate();
    spec.validate();
    const ElevationAngle elev = elevation.folded();
    const double ce = std::cos(elev.radians());
    const double se = std::sin(elev.radians());
    const int n = spec.points_per_axis;

    // Single fused sweep: both integrands share the direction trigonometry
    // and the surface range, so precompute per-axis tables once.
    std::vector<double> an, aw, bn, bw;
    fill_axis(0.0, kTwoPi, n, an, aw);
    fill_axis(0.0, kHalfPi, n, bn, bw);
    std::vector<double> ca(n), sa(n), cb(n), sb(n);
    for (int i = 0; i < n; ++i) {
        ca[i] = std::cos(an[i]);
        sa[i] = std::sin(an[i]);
        cb[i] = std::cos(bn[i]);
        sb[i] = std::sin(bn[i]);
    }

    const double inv_a2 = 1.0 / (axes.a * axes.a);
    const double inv_b2 = 1.0 / (axes.b * axes.b);
    const double inv_c2 = 1.0 / (axes.c * axes.c);
    double acc1 = 0.0, acc2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double row1 = 0.0, row2 = 0.0;
        const double cai = ca[i], sai = sa[i];
        for (int j = 0; j < n; ++j) {
            const double u1 = cai * cb[j] * ce + sb[j] * se;
            const double u2 = sai * cb[j];
            const double u3 = sb[j] * ce - cai * cb[j] * se;
            const double q = u1 * u1 * inv_a2 + u2 * u2 * inv_b2 + u3 * u3 * inv_c2;
            const double rm2 = 1.0 / q;
            const double rm4 = rm2 * rm2;
            const double rm = std::sqrt(rm2);
            const double k = 1.0 - u1;
            const double w = bw[j] * cb[j];
            row1 += w * k * rm4;
            row2 += w * k * k * rm4 * rm;
        }
        acc1 += aw[i] * row1;
        acc2 += aw[i] * row2;
    }
    const double vol = kPi * axes.a * axes.b * axes.c;
    return {3.0 / (8.0 * vol) * acc1, 3.0 / (10.0 * vol) * acc2};
}

double rms_delay_spread(const EllipsoidAxes& axes, ElevationAngle elevation,
                        const QuadratureSpec& spec) {
    const ExcessMoments m = excess_moments(axes, elevation, spec);
    double variance = m.second_m2 - m.mean_m * m.mean_m;
    const double scale = std::max(m.second_m2, m.mean_m * m.mean_m);
    if (variance < -1e-12 * std::max(scale, 1.0)) {
        std::ostringstream os;
        os << "rms_delay_spread: negative variance " << variance << " (mean=" << m.mean_m
           << ", second moment=" << m.second_m2 << ")";
        throw internal_consistency_error(os.str());
    }
    variance = std::max(0.0, variance);
    return std::sqrt(variance) / kSpeedOfLight;
}

} // namespace leoscat
