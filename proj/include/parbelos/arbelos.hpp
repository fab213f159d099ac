#pragma once

// The arbelos over the same cusps as a parbelos, and the family of circles
// inscribed in one of its semicircles.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "parbelos/euclid.hpp"
#include "parbelos/numeric.hpp"
#include "parbelos/parabola.hpp"
#include "parbelos/parbelos.hpp"
#include "parbelos/verification.hpp"

namespace parbelos {

/// Upper half of a circle whose diameter lies on the cusp line.
struct Semicircle {
    Point center;
    double radius = 0.0;

    [[nodiscard]] Point left_end() const { return {center.x - radius, center.y}; }
    [[nodiscard]] Point right_end() const { return {center.x + radius, center.y}; }
    /// Midpoint of the arc.
    [[nodiscard]] Point top() const { return {center.x, center.y + radius}; }
    [[nodiscard]] Circle circle() const { return Circle(center, radius); }
};

class Arbelos {
public:
    static Arbelos from_cusps(double x1, double x2, double x3, double y = 0.0) {
        for (double v : {x1, x2, x3, y}) detail::require_finite(v);
        if (!(x1 < x2 && x2 < x3)) throw Error("cusps not strictly ordered");
        return Arbelos({x1, y}, {x2, y}, {x3, y});
    }

    [[nodiscard]] Point c1() const { return cusps_[0]; }
    [[nodiscard]] Point c2() const { return cusps_[1]; }
    [[nodiscard]] Point c3() const { return cusps_[2]; }
    [[nodiscard]] const std::array<Point, 3>& cusps() const { return cusps_; }

    [[nodiscard]] const Semicircle& upper() const { return upper_; }
    [[nodiscard]] const Semicircle& lower_left() const { return left_; }
    [[nodiscard]] const Semicircle& lower_right() const { return right_; }

    [[nodiscard]] double scale() const { return cusps_[2].x - cusps_[0].x; }

private:
    static Semicircle over(Point p, Point q) { return {midpoint(p, q), 0.5 * (q.x - p.x)}; }

    Arbelos(Point c1, Point c2, Point c3)
        : cusps_{c1, c2, c3}, upper_(over(c1, c3)), left_(over(c1, c2)), right_(over(c2, c3)) {}

    std::array<Point, 3> cusps_;
    Semicircle upper_;
    Semicircle left_;
    Semicircle right_;
};

inline Arbelos from_cusps_arbelos(double x1, double x2, double x3) { return Arbelos::from_cusps(x1, x2, x3); }

/// pi r_left r_right, which equals (pi/2)(r_u^2 - r_l^2 - r_r^2) because
/// r_u = r_l + r_r; the product form avoids the cancellation.
inline double arbelos_area(const Arbelos& ar) {
    return std::numbers::pi * ar.lower_left().radius * ar.lower_right().radius;
}

/// C2 and the three arc midpoints, in the same cyclic order as the
/// parbelos tangent rectangle.
inline Quadrilateral cusp_midpoints_rectangle(const Arbelos& ar) {
    return Quadrilateral(ar.c2(), ar.lower_left().top(), ar.upper().top(), ar.lower_right().top());
}

/// Circles tangent to the diameter and internally tangent to one semicircle,
/// indexed by the horizontal offset u of their centre from the host centre.
struct InscribedCircleFamily {
    Point center;
    double radius = 0.0;

    static InscribedCircleFamily of(const Semicircle& s) { return {s.center, s.radius}; }

    /// r(u) = (R^2 - u^2) / (2R).
    [[nodiscard]] double member_radius(double u) const { return (radius - u) * (radius + u) / (2.0 * radius); }
};

inline Circle inscribed_circle(const InscribedCircleFamily& fam, double u) {
    detail::require_finite(u);
    if (!(std::abs(u) < fam.radius)) throw Error("parameter at or beyond cusp");
    const double r = fam.member_radius(u);
    return Circle({fam.center.x + u, fam.center.y + r}, r);
}

inline std::vector<VerificationRecord> arbelos_report(const Arbelos& ar, const Parbelos& pb,
                                                       const ToleranceContext& ctx) {
    const auto rect = cusp_midpoints_rectangle(ar);
    const auto trect = tangent_rectangle(pb);
    const double rect_area = shoelace_area(rect, ctx);
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, distance(rect[i], trect[i]));
    const Circle c = circumcircle(rect[1], rect[2], rect[3], ctx);

    // Semicircle centres are the parbelos foci; neighbours touch at the cusps.
    double focus_gap = 0.0;
    focus_gap = std::max(focus_gap, distance(ar.upper().center, pb.upper().focus()));
    focus_gap = std::max(focus_gap, distance(ar.lower_left().center, pb.lower_left().focus()));
    focus_gap = std::max(focus_gap, distance(ar.lower_right().center, pb.lower_right().focus()));
    const auto& u = ar.upper();
    const auto& l = ar.lower_left();
    const auto& r = ar.lower_right();
    const double tangency_gap = std::max({std::abs(distance(l.center, r.center) - (l.radius + r.radius)),
                                          std::abs(distance(u.center, l.center) - (u.radius - l.radius)),
                                          std::abs(distance(u.center, r.center) - (u.radius - r.radius))});

    const double tol = ctx.tolerance_at(ctx.scale);
    const std::vector<NamedPoint> w{{"C2", ar.c2()}, {"M1", rect[1]}, {"M2", rect[2]}, {"M3", rect[3]}};
    return {
        make_record("semicircles are pairwise tangent", tangency_gap, 0.0, tol),
        make_record("semicircle centres are the parbelos foci", focus_gap, 0.0, tol),
        make_record("cusp-midpoints quadrilateral is a rectangle", is_rectangle(rect, ctx) ? 1.0 : 0.0, 1.0, 0.0, w),
        make_relative_record("arbelos area is pi/2 times the cusp-midpoints rectangle", arbelos_area(ar) / rect_area,
                             std::numbers::pi / 2.0, ctx.rel_tol, w,
                             {{"arbelos_area", arbelos_area(ar)}, {"rectangle_area", rect_area}}),
        make_record("cusp-midpoints rectangle coincides with the parbelos tangent rectangle", worst, 0.0, tol, w),
        make_record("cusp-midpoints circumcircle passes through the upper semicircle centre",
                    distance(c.center(), u.center), c.radius(), ctx.tolerance_at(c.radius()),
                    {{"O", c.center()}, {"centre", u.center}}),
    };
}

namespace detail {

struct LocusResidual {
    double center_to_arc = 0.0;
    double arc_to_circle = 0.0;
};

inline LocusResidual locus_residual(const Semicircle& s, const VerticalParabola& par, int samples) {
    const auto fam = InscribedCircleFamily::of(s);
    LocusResidual res;
    for (int i = 0; i < samples; ++i) {
        // Open grid: the cusps themselves are excluded.
        const double t = -1.0 + 2.0 * (i + 1) / (samples + 1);
        const Circle k = inscribed_circle(fam, t * s.radius);
        res.center_to_arc = std::max(res.center_to_arc, std::abs(par.eval(k.center().x) - k.center().y));

        const Point q = par.point_at(s.center.x + t * s.radius);
        const double r = q.y - s.center.y;
        const double internal = std::abs(distance(q, s.center) - (s.radius - r));
        res.arc_to_circle = std::max(res.arc_to_circle, r > 0.0 ? internal : std::abs(r) + internal);
    }
    return res;
}

}  // namespace detail

/**
 * For each semicircle, inscribed-circle centres on an open grid must lie on
 * the matching latus rectum arc, and circles rebuilt from arc points (radius
 * = height above the cusp line) must be internally tangent to the semicircle.
 * Records: upper, lower-left, lower-right; lhs is the worse direction.
 */
inline std::array<VerificationRecord, 3> locus_equivalence(const Arbelos& ar, const Parbelos& pb,
                                                           const ToleranceContext& ctx, int samples = 101) {
    if (ar.cusps() != pb.cusps()) throw Error("arbelos and parbelos do not share cusps");
    if (samples < 1) throw Error("empty sample grid");
    auto rec = [&](const char* name, const Semicircle& s, const VerticalParabola& par) {
        const auto res = detail::locus_residual(s, par, samples);
        return make_record(name, std::max(res.center_to_arc, res.arc_to_circle), 0.0, ctx.tolerance_at(0.0),
                           {{"O", s.center}, {"V", par.vertex()}},
                           {{"center_to_arc", res.center_to_arc}, {"arc_to_circle", res.arc_to_circle}});
    };
    return {
        rec("inscribed-circle centres in the upper semicircle trace the upper arc", ar.upper(), pb.upper()),
        rec("inscribed-circle centres in the left semicircle trace the lower-left arc", ar.lower_left(),
            pb.lower_left()),
        rec("inscribed-circle centres in the right semicircle trace the lower-right arc", ar.lower_right(),
            pb.lower_right()),
    };
}

}  // namespace parbelos
