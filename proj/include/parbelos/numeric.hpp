#pragma once

/**
 * @file numeric.hpp
 * @brief Tolerance policy, a cancellation-free quadratic solver, and an
 *        adaptive Simpson integrator used as an arc-length oracle.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace parbelos {

/// Every precondition or construction failure in the library is reported
/// with this type; the message is the stable, user-facing part.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double require_finite(double v) {
    if (!std::isfinite(v)) throw Error("non-finite operand");
    return v;
}

}  // namespace detail

/**
 * Scale-aware comparison policy.
 *
 * The tolerance at magnitude m is max(abs_floor, rel_tol * max(m, scale)),
 * so quantities much smaller than the figure are compared against the
 * figure size rather than against themselves.
 */
struct ToleranceContext {
    double rel_tol = 1e-9;
    double abs_floor = 1e-12;
    double scale = 1.0;

    static ToleranceContext make(double rel_tol, double abs_floor, double scale) {
        ToleranceContext ctx{rel_tol, abs_floor, scale};
        ctx.validate();
        return ctx;
    }

    /// Default relative tolerance and floor, sized to a figure.
    static ToleranceContext for_scale(double scale) { return make(1e-9, 1e-12, scale); }

    void validate() const {
        if (!(std::isfinite(rel_tol) && std::isfinite(abs_floor) && std::isfinite(scale)))
            throw Error("non-finite operand");
        if (!(rel_tol > 0.0) || !(abs_floor > 0.0) || !(scale > 0.0))
            throw Error("invalid tolerance context");
    }

    [[nodiscard]] double tolerance_at(double magnitude) const {
        return std::max(abs_floor, rel_tol * std::max(std::abs(magnitude), scale));
    }
};

inline bool approx_eq(double x, double y, const ToleranceContext& ctx = {}) {
    detail::require_finite(x);
    detail::require_finite(y);
    return std::abs(x - y) <= ctx.tolerance_at(std::max(std::abs(x), std::abs(y)));
}

enum class RootKind { two_real, double_root, complex_pair };

/// Real roots are ascending; for a complex pair both slots hold the real part.
struct QuadraticRoots {
    RootKind kind = RootKind::complex_pair;
    std::array<double, 2> roots{};
};

/// c2*m^2 + c1*m + c0 = 0. The larger-magnitude root is formed without
/// subtraction and the other follows from the product c0/c2.
inline QuadraticRoots solve_quadratic(double c2, double c1, double c0) {
    detail::require_finite(c2);
    detail::require_finite(c1);
    detail::require_finite(c0);
    if (c2 == 0.0) throw Error("degenerate quadratic");

    // c1^2 - 4 c2 c0 with the rounding error of the product recovered by fma.
    const double w = 4.0 * c2 * c0;
    const double e = std::fma(4.0 * c2, c0, -w);
    const double disc = std::fma(c1, c1, -w) - e;
    const double eps = std::numeric_limits<double>::epsilon();
    const double disc_scale = std::max(c1 * c1, std::abs(w));

    QuadraticRoots out;
    if (std::abs(disc) <= 8.0 * eps * disc_scale) {
        const double r = -c1 / (2.0 * c2);
        out.kind = RootKind::double_root;
        out.roots = {r, r};
        return out;
    }
    if (disc < 0.0) {
        const double re = -c1 / (2.0 * c2);
        out.kind = RootKind::complex_pair;
        out.roots = {re, re};
        return out;
    }
    const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
    double r0 = q / c2;
    double r1 = c0 / q;
    if (r0 > r1) std::swap(r0, r1);
    out.kind = RootKind::two_real;
    out.roots = {r0, r1};
    return out;
}

namespace detail {

struct SimpsonPanel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

template <class F>
double simpson_refine(F& f, const SimpsonPanel& p, double tol, int depth, long& evals) {
    constexpr long max_evals = 5'000'000;
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    evals += 2;
    const double left = (p.m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
    const double right = (p.b - p.m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
    const double delta = left + right - p.whole;
    if (!std::isfinite(delta)) throw Error("quadrature did not converge");
    // Force a few levels so symmetric integrands cannot fake convergence.
    if (depth >= 4 && std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= 60 || evals > max_evals || p.m - p.a <= 0.0 || p.b - p.m <= 0.0)
        throw Error("quadrature did not converge");
    return simpson_refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth + 1, evals) +
           simpson_refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth + 1, evals);
}

}  // namespace detail

/// Adaptive Simpson with Richardson extrapolation on [x0, x1].
template <class F>
double integrate_adaptive(F&& f, double x0, double x1, double tol) {
    detail::require_finite(x0);
    detail::require_finite(x1);
    detail::require_finite(tol);
    if (!(x0 < x1)) throw Error("empty integration interval");
    if (!(tol > 0.0)) throw Error("tolerance must be positive");
    const double m = 0.5 * (x0 + x1);
    const double fa = f(x0), fm = f(m), fb = f(x1);
    long evals = 3;
    const double whole = (x1 - x0) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_refine(f, {x0, m, x1, fa, fm, fb, whole}, tol, 0, evals);
}

/// Length of the graph of a function on [x0, x1] given its derivative.
template <class Deriv>
double arc_length_quadrature(Deriv&& f_deriv, double x0, double x1, double tol) {
    auto speed = [&](double x) {
        const double d = f_deriv(x);
        return std::hypot(1.0, d);
    };
    return integrate_adaptive(speed, x0, x1, tol);
}

}  // namespace parbelos
