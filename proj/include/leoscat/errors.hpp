// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace leoscat {

/// An integrand returned a non-finite value at a quadrature node.
class evaluation_error : public std::runtime_error {
public:
    explicit evaluation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative refinement exhausted its doubling budget. Carries the last two
/// estimates so callers can judge how far apart they still are.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double previous, double last)
        : std::runtime_error(what), previous_estimate_(previous), last_estimate_(last) {}
    double previous_estimate() const { return previous_estimate_; }
    double last_estimate() const { return last_estimate_; }

private:
    double previous_estimate_;
    double last_estimate_;
};

/// Root finding was asked to search an interval with no sign change.
class bracketing_error : public std::runtime_error {
public:
    explicit bracketing_error(const std::string& what) : std::runtime_error(what) {}
};

/// A solve target lies outside the range attainable over the search bracket.
/// Carries the attainable [lo, hi] range of the solved quantity.
class unreachable_target_error : public std::runtime_error {
public:
    unreachable_target_error(const std::string& what, double attainable_lo, double attainable_hi)
        : std::runtime_error(what), attainable_lo_(attainable_lo), attainable_hi_(attainable_hi) {}
    double attainable_lo() const { return attainable_lo_; }
    double attainable_hi() const { return attainable_hi_; }

private:
    double attainable_lo_;
    double attainable_hi_;
};

/// Requested axes cannot satisfy the height constraint.
class infeasible_geometry_error : public std::domain_error {
public:
    explicit infeasible_geometry_error(const std::string& what) : std::domain_error(what) {}
};

/// An expression degenerates at this elevation angle and the caller must use
/// the documented limit form instead.
class degenerate_angle_error : public std::domain_error {
public:
    explicit degenerate_angle_error(const std::string& what) : std::domain_error(what) {}
};

/// The (u, v) change of variables requires an azimuth support symmetric under
/// alpha -> -alpha.
class unsupported_transform_error : public std::invalid_argument {
public:
    explicit unsupported_transform_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Two internally consistent quantities disagree beyond numerical tolerance.
class internal_consistency_error : public std::logic_error {
public:
    explicit internal_consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace leoscat
