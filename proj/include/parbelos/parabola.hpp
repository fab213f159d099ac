#pragma once

/**
 * @file parabola.hpp
 * @brief Downward-opening parabolas with a vertical axis, built from their
 *        latus rectum.
 *
 * With focus F = (f_x, f_y) and a = |latus rectum| / 4, the curve is
 *
 *     y = f_y + a - (x - f_x)^2 / (4a)
 *
 * the vertex sits a above the focus and the directrix 2a above it.
 */

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "parbelos/euclid.hpp"
#include "parbelos/numeric.hpp"
#include "parbelos/verification.hpp"

namespace parbelos {

class VerticalParabola {
public:
    /// Endpoints may be given in either order. The horizontality check uses
    /// the chord length as the comparison scale.
    static VerticalParabola from_latus_rectum(Point e1, Point e2, const ToleranceContext& ctx = {}) {
        detail::require_finite(e1.x);
        detail::require_finite(e1.y);
        detail::require_finite(e2.x);
        detail::require_finite(e2.y);
        if (e1 == e2) throw Error("coincident endpoints");
        const double width = std::abs(e2.x - e1.x);
        const auto local = ToleranceContext::make(ctx.rel_tol, ctx.abs_floor, std::max(width, ctx.abs_floor));
        if (e1.x == e2.x || !approx_eq(e1.y, e2.y, local)) throw Error("latus rectum not horizontal");
        if (e1.x > e2.x) std::swap(e1, e2);
        return VerticalParabola(e1, e2);
    }

    [[nodiscard]] Point left_end() const { return left_; }
    [[nodiscard]] Point right_end() const { return right_; }
    /// Focus-to-vertex distance.
    [[nodiscard]] double a() const { return a_; }
    /// Focal parameter (semi-latus rectum).
    [[nodiscard]] double p() const { return 2.0 * a_; }
    [[nodiscard]] double latus_rectum_length() const { return right_.x - left_.x; }
    [[nodiscard]] Point focus() const { return focus_; }
    [[nodiscard]] Point vertex() const { return {focus_.x, focus_.y + a_}; }
    [[nodiscard]] double directrix_y() const { return focus_.y + 2.0 * a_; }
    [[nodiscard]] Line directrix() const { return Line::slope_intercept(0.0, directrix_y()); }

    [[nodiscard]] double eval(double x) const {
        const double t = detail::require_finite(x) - focus_.x;
        return focus_.y + a_ - t * t / (4.0 * a_);
    }

    [[nodiscard]] Point point_at(double x) const { return {x, eval(x)}; }

    [[nodiscard]] double slope_at(double x) const { return -(x - focus_.x) / (2.0 * a_); }

    [[nodiscard]] Line tangent_at(double x) const { return Line::point_slope(point_at(x), slope_at(x)); }

    /// Abscissa where the tangent has slope m.
    [[nodiscard]] double touch_x_for_slope(double m) const { return focus_.x - 2.0 * a_ * detail::require_finite(m); }

    [[nodiscard]] Line tangent_with_slope(double m) const {
        // y = m x + k with k = f_y + a(1 + m^2) - m f_x
        const double k = focus_.y + a_ * (1.0 + m * m) - m * focus_.x;
        return Line::slope_intercept(m, k);
    }

    /**
     * Discriminant of "curve = line" in focus-centred coordinates, normalized
     * to a monic quadratic so the result has units of length squared.
     * Zero means the line touches the curve in one double point.
     */
    [[nodiscard]] double tangency_discriminant(const Line& l) const {
        if (l.is_vertical()) throw Error("vertical line");
        const double m = l.slope();
        const double gap = focus_.y + a_ - l.y_at(focus_.x);
        return 16.0 * a_ * (a_ * m * m + gap);
    }

    /// Abscissa of the (double) root of "curve = line".
    [[nodiscard]] double contact_x(const Line& l) const {
        if (l.is_vertical()) throw Error("vertical line");
        return touch_x_for_slope(l.slope());
    }

    /// Closed form s = p (sqrt 2 + asinh 1).
    [[nodiscard]] double latus_arc_length() const { return p() * (std::numbers::sqrt2 + std::asinh(1.0)); }

    /// Antiderivative a [u sqrt(1+u^2) + asinh u] with u = (x - f_x) / (2a).
    [[nodiscard]] double arc_length_between(double x0, double x1) const {
        detail::require_finite(x0);
        detail::require_finite(x1);
        if (!(x0 < x1)) throw Error("empty arc interval");
        return arc_primitive(x1) - arc_primitive(x0);
    }

    /// Area between the chord over [x0, x1] and the arc: |x1 - x0|^3 / (24a).
    [[nodiscard]] double segment_area(double x0, double x1) const {
        detail::require_finite(x0);
        detail::require_finite(x1);
        if (!(x0 < x1)) throw Error("empty segment interval");
        const double w = x1 - x0;
        return w * w * w / (24.0 * a_);
    }

    /// Triangle inscribed in the segment, apex where the tangent is parallel
    /// to the chord (the midpoint abscissa).
    [[nodiscard]] std::array<Point, 3> inscribed_triangle(double x0, double x1) const {
        return {point_at(x0), point_at(0.5 * (x0 + x1)), point_at(x1)};
    }

private:
    VerticalParabola(Point left, Point right)
        : left_(left),
          right_(right),
          a_((right.x - left.x) / 4.0),
          focus_{0.5 * (left.x + right.x), 0.5 * (left.y + right.y)} {}

    [[nodiscard]] double arc_primitive(double x) const {
        const double u = (x - focus_.x) / (2.0 * a_);
        return a_ * (u * std::hypot(1.0, u) + std::asinh(u));
    }

    Point left_;
    Point right_;
    double a_;
    Point focus_;
};

/// The full latus rectum arc of a parabola.
struct LatusArc {
    VerticalParabola parabola;

    [[nodiscard]] Point start() const { return parabola.left_end(); }
    [[nodiscard]] Point end() const { return parabola.right_end(); }
    [[nodiscard]] double length() const { return parabola.latus_arc_length(); }
};

/// True when l touches the parabola: its height at the would-be contact
/// point matches the curve within tolerance.
inline bool is_tangent(const VerticalParabola& par, const Line& l, const ToleranceContext& ctx) {
    if (l.is_vertical()) return false;
    const double x = par.touch_x_for_slope(l.slope());
    const double y = par.eval(x);
    return approx_eq(l.y_at(x), y, ctx);
}

/**
 * Checks that the circumcircle of the triangle cut out by three tangents
 * passes through the focus. Record: lhs = |center - focus|, rhs = radius.
 */
inline VerificationRecord lambert_check(const VerticalParabola& par, const Line& l1, const Line& l2, const Line& l3,
                                        const ToleranceContext& ctx) {
    const std::array<const Line*, 3> lines{&l1, &l2, &l3};
    for (const Line* l : lines)
        if (!is_tangent(par, *l, ctx)) throw Error("line not tangent");

    auto meet = [&](const Line& u, const Line& v) {
        try {
            return line_intersection(u, v, ctx);
        } catch (const Error&) {
            throw Error("parallel tangent lines");
        }
    };
    const Point t12 = meet(l1, l2);
    const Point t23 = meet(l2, l3);
    const Point t13 = meet(l1, l3);
    const Circle c = circumcircle(t12, t23, t13, ctx);
    const double d = distance(c.center(), par.focus());
    return make_record("tangent-triangle circumcircle passes through focus", d, c.radius(),
                       ctx.tolerance_at(c.radius()),
                       {{"F", par.focus()}, {"O", c.center()}, {"T12", t12}, {"T23", t23}, {"T13", t13}},
                       {{"radius", c.radius()}});
}

}  // namespace parbelos
