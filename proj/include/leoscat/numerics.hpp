// SPDX-License-Identifier: Apache-2.0
//
// Composite quadrature and bracketed root finding used by the analytic
// channel-statistics modules. Trapezoid is the default rule; midpoint is
// required whenever an integrand carries inverse-square-root endpoint
// singularities, since it never evaluates the interval endpoints.
#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "leoscat/errors.hpp"

namespace leoscat {

enum class QuadratureRule { trapezoid, midpoint };

struct QuadratureSpec {
    int points_per_axis = 1000;
    QuadratureRule rule = QuadratureRule::trapezoid;
    double refinement_tolerance = 1e-4;
    bool refine = false;

    void validate() const {
        if (points_per_axis < 2)
            throw std::invalid_argument("QuadratureSpec: points_per_axis must be >= 2");
        if (refinement_tolerance <= 0.0)
            throw std::invalid_argument("QuadratureSpec: refinement_tolerance must be > 0");
    }
};

/// Integration or root-search interval [lo, hi].
struct Bracket {
    double lo;
    double hi;

    void validate() const {
        if (!(lo < hi))
            throw std::invalid_argument("Bracket: lo must be < hi");
    }
};

namespace detail {

constexpr int kMaxRefinementDoublings = 5;

inline void check_node_finite(double value, double x) {
    if (!std::isfinite(value)) {
        std::ostringstream os;
        os << "non-finite integrand value at node x=" << x;
        throw evaluation_error(os.str());
    }
}

inline void check_node_finite(double value, double x, double y) {
    if (!std::isfinite(value)) {
        std::ostringstream os;
        os << "non-finite integrand value at node (x=" << x << ", y=" << y << ")";
        throw evaluation_error(os.str());
    }
}

template <typename F>
double composite_1d(F&& f, const Bracket& br, int n, QuadratureRule rule) {
    double acc = 0.0;
    if (rule == QuadratureRule::trapezoid) {
        const double h = (br.hi - br.lo) / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double x = (i == n - 1) ? br.hi : br.lo + i * h;
            const double v = f(x);
            check_node_finite(v, x);
            acc += (i == 0 || i == n - 1) ? 0.5 * v : v;
        }
        return acc * h;
    }
    const double h = (br.hi - br.lo) / n;
    for (int i = 0; i < n; ++i) {
        const double x = br.lo + (i + 0.5) * h;
        const double v = f(x);
        check_node_finite(v, x);
        acc += v;
    }
    return acc * h;
}

template <typename F>
double composite_2d(F&& f, const Bracket& bx, const Bracket& by, int n, QuadratureRule rule) {
    double acc = 0.0;
    if (rule == QuadratureRule::trapezoid) {
        const double hx = (bx.hi - bx.lo) / (n - 1);
        const double hy = (by.hi - by.lo) / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double x = (i == n - 1) ? bx.hi : bx.lo + i * hx;
            const double wx = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            double row = 0.0;
            for (int j = 0; j < n; ++j) {
                const double y = (j == n - 1) ? by.hi : by.lo + j * hy;
                const double v = f(x, y);
                check_node_finite(v, x, y);
                row += (j == 0 || j == n - 1) ? 0.5 * v : v;
            }
            acc += wx * row;
        }
        return acc * hx * hy;
    }
    const double hx = (bx.hi - bx.lo) / n;
    const double hy = (by.hi - by.lo) / n;
    for (int i = 0; i < n; ++i) {
        const double x = bx.lo + (i + 0.5) * hx;
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const double y = by.lo + (j + 0.5) * hy;
            const double v = f(x, y);
            check_node_finite(v, x, y);
            row += v;
        }
        acc += row;
    }
    return acc * hx * hy;
}

} // namespace detail

/// Composite 1-D quadrature of f over the bracket. With spec.refine set, the
/// point count doubles until successive estimates agree relatively.
template <typename F>
double integrate_1d(F&& f, const Bracket& br, const QuadratureSpec& spec = {}) {
    br.validate();
    spec.validate();
    int n = spec.points_per_axis;
    double prev = detail::composite_1d(f, br, n, spec.rule);
    if (!spec.refine) return prev;
    for (int k = 0; k < detail::kMaxRefinementDoublings; ++k) {
        n *= 2;
        const double cur = detail::composite_1d(f, br, n, spec.rule);
        const double scale = std::max(std::abs(cur), std::abs(prev));
        if (scale == 0.0 || std::abs(cur - prev) <= spec.refinement_tolerance * scale)
            return cur;
        if (k == detail::kMaxRefinementDoublings - 1) {
            std::ostringstream os;
            os << "integrate_1d: refinement did not converge after "
               << detail::kMaxRefinementDoublings << " doublings";
            throw convergence_error(os.str(), prev, cur);
        }
        prev = cur;
    }
    return prev; // unreachable
}

/// Tensor-product composite rule over the rectangle x_bracket x y_bracket.
template <typename F>
double integrate_2d(F&& f, const Bracket& bx, const Bracket& by, const QuadratureSpec& spec = {}) {
    bx.validate();
    by.validate();
    spec.validate();
    int n = spec.points_per_axis;
    double prev = detail::composite_2d(f, bx, by, n, spec.rule);
    if (!spec.refine) return prev;
    for (int k = 0; k < detail::kMaxRefinementDoublings; ++k) {
        n *= 2;
        const double cur = detail::composite_2d(f, bx, by, n, spec.rule);
        const double scale = std::max(std::abs(cur), std::abs(prev));
        if (scale == 0.0 || std::abs(cur - prev) <= spec.refinement_tolerance * scale)
            return cur;
        if (k == detail::kMaxRefinementDoublings - 1) {
            std::ostringstream os;
            os << "integrate_2d: refinement did not converge after "
               << detail::kMaxRefinementDoublings << " doublings";
            throw convergence_error(os.str(), prev, cur);
        }
        prev = cur;
    }
    return prev; // unreachable
}

struct RootOptions {
    bool accelerate = true; // secant proposals between guaranteed bisections
    int max_iterations = 256;
};

/// Bracketed root of g over [lo, hi], deterministic. Secant proposals
/// alternate with plain bisections so the bracket provably shrinks; the
/// result is independent of acceleration to within tol.
template <typename G>
double find_root(G&& g, const Bracket& br, double tol, const RootOptions& opt = {}) {
    br.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("find_root: tol must be > 0");

    double lo = br.lo, hi = br.hi;
    double glo = g(lo);
    double ghi = g(hi);
    if (!std::isfinite(glo) || !std::isfinite(ghi))
        throw evaluation_error("find_root: non-finite function value at bracket endpoint");
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0)) {
        std::ostringstream os;
        os << "find_root: no sign change over [" << lo << ", " << hi << "] (g(lo)=" << glo
           << ", g(hi)=" << ghi << ")";
        throw bracketing_error(os.str());
    }

    bool force_bisect = false;
    for (int iter = 0; iter < opt.max_iterations && (hi - lo) >= tol; ++iter) {
        double x;
        if (opt.accelerate && !force_bisect) {
            x = (lo * ghi - hi * glo) / (ghi - glo);
            if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
        } else {
            x = 0.5 * (lo + hi);
        }
        const double gx = g(x);
        if (!std::isfinite(gx))
            throw evaluation_error("find_root: non-finite function value inside bracket");
        if (gx == 0.0) return x;
        if ((gx > 0.0) == (glo > 0.0)) {
            lo = x;
            glo = gx;
        } else {
            hi = x;
            ghi = gx;
        }
        force_bisect = !force_bisect;
    }
    return 0.5 * (lo + hi);
}

} // namespace leoscat
