#pragma once

/**
 * @file parbelos.hpp
 * @brief The parbelos: three latus rectum arcs over collinear cusps.
 *
 * Cusps C1 < C2 < C3 sit on a horizontal line. The upper parabola has latus
 * rectum C1C3, the lower ones C1C2 and C2C3. In normalized coordinates
 * (C1 at the origin, cusp line as x-axis) the cusps are 0, 2b, 4a.
 *
 * Constructions are carried out on the actual curves (line intersections,
 * circumcircles, segment areas) and the records compare them against the
 * identities they are expected to satisfy.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "parbelos/euclid.hpp"
#include "parbelos/numeric.hpp"
#include "parbelos/parabola.hpp"
#include "parbelos/verification.hpp"

namespace parbelos {

class Parbelos {
public:
    static Parbelos from_cusps(double x1, double x2, double x3, double y = 0.0) {
        for (double v : {x1, x2, x3, y}) detail::require_finite(v);
        if (!(x1 < x2 && x2 < x3)) throw Error("cusps not strictly ordered");
        return Parbelos({x1, y}, {x2, y}, {x3, y});
    }

    [[nodiscard]] Point c1() const { return cusps_[0]; }
    [[nodiscard]] Point c2() const { return cusps_[1]; }
    [[nodiscard]] Point c3() const { return cusps_[2]; }
    [[nodiscard]] const std::array<Point, 3>& cusps() const { return cusps_; }

    [[nodiscard]] const VerticalParabola& upper() const { return upper_; }
    [[nodiscard]] const VerticalParabola& lower_left() const { return left_; }
    [[nodiscard]] const VerticalParabola& lower_right() const { return right_; }

    /// Quarter of the outer span.
    [[nodiscard]] double a() const { return (cusps_[2].x - cusps_[0].x) / 4.0; }
    /// Half of the left span.
    [[nodiscard]] double b() const { return (cusps_[1].x - cusps_[0].x) / 2.0; }
    /// Outer latus rectum length, the characteristic length of the figure.
    [[nodiscard]] double scale() const { return cusps_[2].x - cusps_[0].x; }
    /// Division ratio C1C2 / C1C3.
    [[nodiscard]] double ratio() const { return (cusps_[1].x - cusps_[0].x) / scale(); }

    [[nodiscard]] ToleranceContext context(double rel_tol = 1e-9, double abs_floor = 1e-12) const {
        return ToleranceContext::make(rel_tol, abs_floor, scale());
    }

    [[nodiscard]] Point normalize(Point p) const { return p - cusps_[0]; }
    [[nodiscard]] Point denormalize(Point p) const { return p + cusps_[0]; }

private:
    Parbelos(Point c1, Point c2, Point c3)
        : cusps_{c1, c2, c3},
          upper_(VerticalParabola::from_latus_rectum(c1, c3)),
          left_(VerticalParabola::from_latus_rectum(c1, c2)),
          right_(VerticalParabola::from_latus_rectum(c2, c3)) {}

    std::array<Point, 3> cusps_;
    VerticalParabola upper_;
    VerticalParabola left_;
    VerticalParabola right_;
};

// ---------------------------------------------------------------------------
// Tangency at the cusps
// ---------------------------------------------------------------------------

struct CuspTangency {
    VerificationRecord record;
    double first_slope = 0.0;
    double second_slope = 0.0;
    bool tangent = false;
};

/**
 * At C1 and C3 the lower arc shares its tangent with the upper arc. At C2
 * the two lower arcs cross at a right angle, so that record compares the
 * slope product against -1.
 */
inline std::array<CuspTangency, 3> cusp_tangency_report(const Parbelos& pb, const ToleranceContext& ctx) {
    auto entry = [&](std::string name, double s1, double s2, bool expect_tangent, Point where) {
        CuspTangency t;
        t.first_slope = s1;
        t.second_slope = s2;
        t.tangent = std::abs(s1 - s2) <= ctx.rel_tol * std::max({1.0, std::abs(s1), std::abs(s2)});
        std::vector<NamedValue> slopes{{"first_slope", s1}, {"second_slope", s2}};
        if (expect_tangent)
            t.record = make_record(std::move(name), s1, s2, ctx.rel_tol, {{"cusp", where}}, std::move(slopes));
        else
            t.record = make_record(std::move(name), s1 * s2, -1.0, ctx.rel_tol, {{"cusp", where}}, std::move(slopes));
        return t;
    };
    const auto& up = pb.upper();
    const auto& l = pb.lower_left();
    const auto& r = pb.lower_right();
    return {
        entry("C1: upper and lower-left arcs are tangent", up.slope_at(pb.c1().x), l.slope_at(pb.c1().x), true, pb.c1()),
        entry("C2: lower arcs cross at a right angle (not tangent)", l.slope_at(pb.c2().x), r.slope_at(pb.c2().x), false,
              pb.c2()),
        entry("C3: upper and lower-right arcs are tangent", up.slope_at(pb.c3().x), r.slope_at(pb.c3().x), true, pb.c3()),
    };
}

// ---------------------------------------------------------------------------
// Property 1: boundary lengths
// ---------------------------------------------------------------------------

struct BoundaryLengths {
    double upper = 0.0;
    double lower_left = 0.0;
    double lower_right = 0.0;
    double lower_sum = 0.0;
};

inline BoundaryLengths boundary_lengths(const Parbelos& pb) {
    BoundaryLengths out;
    out.upper = pb.upper().latus_arc_length();
    out.lower_left = pb.lower_left().latus_arc_length();
    out.lower_right = pb.lower_right().latus_arc_length();
    out.lower_sum = out.lower_left + out.lower_right;
    return out;
}

inline VerificationRecord boundary_length_record(const Parbelos& pb, const ToleranceContext& ctx) {
    const auto len = boundary_lengths(pb);
    return make_relative_record("upper and lower boundaries have the same length", len.lower_sum, len.upper,
                                ctx.rel_tol, {},
                                {{"lower_left", len.lower_left}, {"lower_right", len.lower_right}});
}

// ---------------------------------------------------------------------------
// Property 2: similar sub-parbeloses
// ---------------------------------------------------------------------------

struct SimilarSubdivision {
    Parbelos left;
    Parbelos right;
};

/// A parbelos with the original division ratio under each lower arc.
inline SimilarSubdivision subdivide_similar(const Parbelos& pb) {
    const double r = pb.ratio();
    const double y = pb.c1().y;
    const double x1 = pb.c1().x, x2 = pb.c2().x, x3 = pb.c3().x;
    return {Parbelos::from_cusps(x1, x1 + r * (x2 - x1), x2, y), Parbelos::from_cusps(x2, x2 + r * (x3 - x2), x3, y)};
}

/// The four new lower arcs, left to right.
inline std::array<double, 4> subdivided_lower_arcs(const SimilarSubdivision& s) {
    return {s.left.lower_left().latus_arc_length(), s.left.lower_right().latus_arc_length(),
            s.right.lower_left().latus_arc_length(), s.right.lower_right().latus_arc_length()};
}

inline double harmonic_mean(double x, double y) { return 2.0 / (1.0 / x + 1.0 / y); }

inline std::vector<VerificationRecord> similar_subdivision_report(const Parbelos& pb, const ToleranceContext& ctx) {
    const auto sub = subdivide_similar(pb);
    const auto arcs = subdivided_lower_arcs(sub);
    const auto len = boundary_lengths(pb);
    const double half_hm = 0.5 * harmonic_mean(len.lower_left, len.lower_right);
    const std::vector<NamedValue> values{
        {"l1", arcs[0]}, {"l2", arcs[1]}, {"l3", arcs[2]}, {"l4", arcs[3]}, {"half_harmonic_mean", half_hm}};
    return {
        make_relative_record("sub-parbeloses are similar to the original (left)", sub.left.ratio(), pb.ratio(),
                             ctx.rel_tol),
        make_relative_record("sub-parbeloses are similar to the original (right)", sub.right.ratio(), pb.ratio(),
                             ctx.rel_tol),
        make_relative_record("middle two new lower arcs are congruent", arcs[1], arcs[2], ctx.rel_tol, {}, values),
        make_relative_record("middle arc equals half the harmonic mean of the lower arcs", arcs[1], half_hm,
                             ctx.rel_tol, {}, values),
    };
}

// ---------------------------------------------------------------------------
// Property 3: cusp-vertices parallelogram and area
// ---------------------------------------------------------------------------

/// C2, V1, V2, V3 in cyclic order.
inline Quadrilateral cusp_vertices_parallelogram(const Parbelos& pb) {
    return Quadrilateral(pb.c2(), pb.lower_left().vertex(), pb.upper().vertex(), pb.lower_right().vertex());
}

/// Upper segment minus the two lower segments.
inline double parbelos_area(const Parbelos& pb) {
    const double x1 = pb.c1().x, x2 = pb.c2().x, x3 = pb.c3().x;
    return pb.upper().segment_area(x1, x3) - pb.lower_left().segment_area(x1, x2) -
           pb.lower_right().segment_area(x2, x3);
}

namespace detail {

inline double slope_between(Point p, Point q) { return (q.y - p.y) / (q.x - p.x); }

inline VerificationRecord archimedes_record(std::string name, const VerticalParabola& par, double x0, double x1,
                                            const ToleranceContext& ctx) {
    const auto tri = par.inscribed_triangle(x0, x1);
    const double t = triangle_area(tri[0], tri[1], tri[2]);
    return make_relative_record(std::move(name), par.segment_area(x0, x1) / t, 4.0 / 3.0, ctx.rel_tol,
                                {{"apex", tri[1]}});
}

}  // namespace detail

inline std::vector<VerificationRecord> parallelogram_report(const Parbelos& pb, const ToleranceContext& ctx) {
    const auto q = cusp_vertices_parallelogram(pb);
    const Point c1 = pb.c1(), c2 = pb.c2(), c3 = pb.c3();
    const Point v1 = pb.lower_left().vertex(), v2 = pb.upper().vertex(), v3 = pb.lower_right().vertex();
    const double area = parbelos_area(pb);
    const double para = shoelace_area(q, ctx);
    const double x1 = c1.x, x2 = c2.x, x3 = c3.x;
    using detail::slope_between;
    const std::vector<NamedPoint> w{{"C2", c2}, {"V1", v1}, {"V2", v2}, {"V3", v3}};
    const double tol = ctx.rel_tol;
    return {
        make_record("C2 V1 V2 V3 is a parallelogram", is_parallelogram(q, ctx) ? 1.0 : 0.0, 1.0, 0.0, w),
        make_record("C1, V1, V2 lie on a line of slope 1/2 (C1V1)", slope_between(c1, v1), 0.5, tol),
        make_record("C1, V1, V2 lie on a line of slope 1/2 (C1V2)", slope_between(c1, v2), 0.5, tol),
        make_record("C2 V3 has slope 1/2", slope_between(c2, v3), 0.5, tol),
        make_record("C3, V3, V2 lie on a line of slope -1/2 (C3V3)", slope_between(c3, v3), -0.5, tol),
        make_record("C3, V3, V2 lie on a line of slope -1/2 (C3V2)", slope_between(c3, v2), -0.5, tol),
        make_record("C2 V1 has slope -1/2", slope_between(c2, v1), -0.5, tol),
        detail::archimedes_record("upper segment is 4/3 of its inscribed triangle", pb.upper(), x1, x3, ctx),
        detail::archimedes_record("lower-left segment is 4/3 of its inscribed triangle", pb.lower_left(), x1, x2, ctx),
        detail::archimedes_record("lower-right segment is 4/3 of its inscribed triangle", pb.lower_right(), x2, x3,
                                  ctx),
        make_relative_record("parbelos area is 4/3 of the cusp-vertices parallelogram", area / para, 4.0 / 3.0, tol, w,
                             {{"parbelos_area", area}, {"parallelogram_area", para}}),
    };
}

// ---------------------------------------------------------------------------
// Property 4: tangent rectangle
// ---------------------------------------------------------------------------

struct CuspTangents {
    Line at_c1;        // shared by upper and lower-left
    Line left_at_c2;   // lower-left
    Line right_at_c2;  // lower-right
    Line at_c3;        // shared by upper and lower-right
};

inline CuspTangents cusp_tangents(const Parbelos& pb) {
    return {pb.upper().tangent_at(pb.c1().x), pb.lower_left().tangent_at(pb.c2().x),
            pb.lower_right().tangent_at(pb.c2().x), pb.upper().tangent_at(pb.c3().x)};
}

/// C2, T1, T2, T3 where the T's are the pairwise meets of the cusp tangents.
inline Quadrilateral tangent_rectangle(const Parbelos& pb) {
    const auto t = cusp_tangents(pb);
    return Quadrilateral(pb.c2(), line_intersection(t.at_c1, t.left_at_c2), line_intersection(t.at_c1, t.at_c3),
                         line_intersection(t.at_c3, t.right_at_c2));
}

inline std::vector<VerificationRecord> tangent_rectangle_report(const Parbelos& pb, const ToleranceContext& ctx) {
    const auto rect = tangent_rectangle(pb);
    const Point c1 = pb.c1(), c2 = pb.c2(), c3 = pb.c3();
    const Point t1 = rect[1], t2 = rect[2], t3 = rect[3];
    const Point v1 = pb.lower_left().vertex(), v2 = pb.upper().vertex(), v3 = pb.lower_right().vertex();
    const double area = parbelos_area(pb);
    const double rect_area = shoelace_area(rect, ctx);
    const std::vector<NamedPoint> w{{"C2", c2}, {"T1", t1}, {"T2", t2}, {"T3", t3}};

    // Angle between each latus rectum and the tangent at its endpoints.
    double worst_angle = 0.0;
    for (const auto* par : {&pb.upper(), &pb.lower_left(), &pb.lower_right()})
        for (double x : {par->left_end().x, par->right_end().x})
            worst_angle = std::max(worst_angle, std::abs(std::abs(std::atan(par->slope_at(x))) - std::numbers::pi / 4));

    const double tol = ctx.rel_tol;
    return {
        make_record("cusp tangents enclose a rectangle", is_rectangle(rect, ctx) ? 1.0 : 0.0, 1.0, 0.0, w),
        make_record("latus rectum meets endpoint tangents at pi/4", worst_angle, 0.0, tol),
        make_relative_record("triangle C1 T2 C3 is twice triangle C1 V2 C3", triangle_area(c1, t2, c3),
                             2.0 * triangle_area(c1, v2, c3), tol),
        make_relative_record("triangle C1 T1 C2 is twice triangle C1 V1 C2", triangle_area(c1, t1, c2),
                             2.0 * triangle_area(c1, v1, c2), tol),
        make_relative_record("triangle C2 T3 C3 is twice triangle C2 V3 C3", triangle_area(c2, t3, c3),
                             2.0 * triangle_area(c2, v3, c3), tol),
        make_relative_record("parbelos area is 2/3 of the tangent rectangle", area / rect_area, 2.0 / 3.0, tol, w,
                             {{"parbelos_area", area}, {"rectangle_area", rect_area}}),
    };
}

// ---------------------------------------------------------------------------
// Property 5: the diagonal T1T3 touches the upper parabola above C2
// ---------------------------------------------------------------------------

struct DiagonalTangency {
    Line diagonal;
    Point contact;
    double discriminant = 0.0;
    double curve_slope_at_contact = 0.0;
    VerificationRecord tangency;
    VerificationRecord contact_above_cusp;
    VerificationRecord on_bisector;

    [[nodiscard]] std::vector<VerificationRecord> records() const { return {tangency, contact_above_cusp, on_bisector}; }
};

inline DiagonalTangency diagonal_tangency(const Parbelos& pb, const ToleranceContext& ctx) {
    const auto rect = tangent_rectangle(pb);
    const Point t1 = rect[1], t3 = rect[3];
    const auto& up = pb.upper();
    const Line diag = Line::through(t1, t3);
    const double disc = up.tangency_discriminant(diag);
    const double cx = up.contact_x(diag);
    const Point contact{cx, diag.y_at(cx)};

    // Internal bisector of the right angle at C2, towards the upper arc.
    const auto tangents = cusp_tangents(pb);
    const Point toward_left = -1.0 * tangents.left_at_c2.direction();
    const Point toward_right = tangents.right_at_c2.direction();
    const Point bis = (1.0 / norm(toward_left)) * toward_left + (1.0 / norm(toward_right)) * toward_right;
    const double off_bisector = std::abs(cross(bis, contact - pb.c2())) / norm(bis);

    const double s = ctx.scale;
    const std::vector<NamedPoint> w{{"T1", t1}, {"T3", t3}, {"contact", contact}, {"C2", pb.c2()}};
    DiagonalTangency out{diag, contact, disc, up.slope_at(cx), {}, {}, {}};
    out.tangency = make_record("diagonal T1T3 is tangent to the upper parabola", disc, 0.0, ctx.rel_tol * s * s, w,
                               {{"diagonal_slope", diag.slope()},
                                {"curve_slope_at_contact", out.curve_slope_at_contact},
                                {"curve_minus_line_at_contact", up.eval(cx) - contact.y}});
    out.contact_above_cusp =
        make_record("contact point lies above the middle cusp", cx, pb.c2().x, ctx.tolerance_at(s), w);
    out.on_bisector =
        make_record("contact point lies on the bisector of the angle at C2", off_bisector, 0.0, ctx.tolerance_at(s), w);
    return out;
}

// ---------------------------------------------------------------------------
// Property 6: the circumcircle of the tangent rectangle passes through F
// ---------------------------------------------------------------------------

struct RectangleCircle {
    Circle circle;
    VerificationRecord focus_on_circle;
    VerificationRecord cusp_on_circle;
    VerificationRecord center_position;
    VerificationRecord lambert;

    [[nodiscard]] std::vector<VerificationRecord> records() const {
        return {focus_on_circle, cusp_on_circle, center_position, lambert};
    }
};

inline RectangleCircle rectangle_circumcircle(const Parbelos& pb, const ToleranceContext& ctx) {
    const auto rect = tangent_rectangle(pb);
    // T1T3 is a diameter; the three-point formula loses accuracy on thin rectangles.
    const Circle c(midpoint(rect[1], rect[3]), 0.5 * distance(rect[1], rect[3]));
    const Point f = pb.upper().focus();
    const Point expected_center = pb.denormalize({pb.a() + pb.b(), pb.a()});
    const std::vector<NamedPoint> w{{"O", c.center()}, {"F", f}, {"C2", pb.c2()}};
    const double tol = ctx.tolerance_at(c.radius());
    const auto t = cusp_tangents(pb);
    return {
        c,
        make_record("rectangle circumcircle passes through the upper focus", distance(c.center(), f), c.radius(), tol, w,
                    {{"radius", c.radius()}}),
        make_record("rectangle circumcircle passes through the middle cusp", distance(c.center(), pb.c2()), c.radius(),
                    tol, w),
        make_record("circumcenter is (a+b, a) in normalized coordinates",
                    distance(pb.normalize(c.center()), pb.normalize(expected_center)), 0.0, ctx.tolerance_at(0.0), w),
        lambert_check(pb.upper(), t.at_c1, t.at_c3, Line::through(rect[1], rect[3]), ctx),
    };
}

// ---------------------------------------------------------------------------
// Common tangent of the two lower parabolas
// ---------------------------------------------------------------------------

struct CommonTangent {
    Line line;
    double slope = 0.0;
    Point touch_left;
    Point touch_right;
};

/**
 * Equating the intercepts of equal-slope tangents of the two lower parabolas
 * gives (b - a)(m^2 + 1) + 2a m = 0. The admissible root is the one whose
 * contact points fall inside both open lower arcs.
 */
inline CommonTangent common_lower_tangent(const Parbelos& pb) {
    const double a = pb.a(), b = pb.b();
    const auto& l = pb.lower_left();
    const auto& r = pb.lower_right();

    std::vector<double> candidates;
    if (b - a == 0.0) {
        candidates.push_back(0.0);
    } else {
        const auto roots = solve_quadratic(b - a, 2.0 * a, b - a);
        if (roots.kind != RootKind::complex_pair) candidates.assign(roots.roots.begin(), roots.roots.end());
    }
    for (double m : candidates) {
        const double xl = l.touch_x_for_slope(m);
        const double xr = r.touch_x_for_slope(m);
        const bool inside = pb.c1().x < xl && xl < pb.c2().x && pb.c2().x < xr && xr < pb.c3().x;
        if (!inside) continue;
        // Both parabolas give the same line in exact arithmetic; average the
        // two intercepts to split the rounding.
        const Line ll = l.tangent_with_slope(m);
        const Line lr = r.tangent_with_slope(m);
        const Line line = Line::slope_intercept(m, 0.5 * (ll.intercept() + lr.intercept()));
        return {line, m, {xl, l.eval(xl)}, {xr, r.eval(xr)}};
    }
    throw Error("no admissible root");
}

struct LowerTangentTriangles {
    std::array<Point, 3> left;
    std::array<Point, 3> right;
    CommonTangent tangent;
    double side_ratio = 0.0;
    VerificationRecord left_lambert;
    VerificationRecord right_lambert;
    VerificationRecord similar;

    [[nodiscard]] std::vector<VerificationRecord> records() const { return {left_lambert, right_lambert, similar}; }
};

namespace detail {

inline std::array<double, 3> sorted_angles(const std::array<Point, 3>& t) {
    std::array<double, 3> ang{};
    for (std::size_t i = 0; i < 3; ++i) {
        const Point u = t[(i + 1) % 3] - t[i];
        const Point v = t[(i + 2) % 3] - t[i];
        ang[i] = std::atan2(std::abs(cross(u, v)), dot(u, v));
    }
    std::sort(ang.begin(), ang.end());
    return ang;
}

inline std::array<double, 3> sorted_sides(const std::array<Point, 3>& t) {
    std::array<double, 3> s{distance(t[0], t[1]), distance(t[1], t[2]), distance(t[2], t[0])};
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace detail

/// The two triangles cut out by the cusp tangents of each lower parabola and
/// their common tangent, each checked against its parabola's focus.
inline LowerTangentTriangles lower_tangent_triangles(const Parbelos& pb, const ToleranceContext& ctx) {
    const auto ct = common_lower_tangent(pb);
    const auto& l = pb.lower_left();
    const auto& r = pb.lower_right();
    const Line l_c1 = l.tangent_at(pb.c1().x), l_c2 = l.tangent_at(pb.c2().x);
    const Line r_c2 = r.tangent_at(pb.c2().x), r_c3 = r.tangent_at(pb.c3().x);

    const std::array<Point, 3> left{line_intersection(l_c1, l_c2, ctx), line_intersection(l_c2, ct.line, ctx),
                                    line_intersection(l_c1, ct.line, ctx)};
    const std::array<Point, 3> right{line_intersection(r_c2, r_c3, ctx), line_intersection(r_c3, ct.line, ctx),
                                     line_intersection(r_c2, ct.line, ctx)};
    auto left_lambert = lambert_check(l, l_c1, l_c2, ct.line, ctx);
    left_lambert.property_name = "left tangent-triangle circumcircle passes through the lower-left focus";
    auto right_lambert = lambert_check(r, r_c2, r_c3, ct.line, ctx);
    right_lambert.property_name = "right tangent-triangle circumcircle passes through the lower-right focus";

    const auto al = detail::sorted_angles(left);
    const auto ar = detail::sorted_angles(right);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(al[i] - ar[i]));
    const double side_ratio = detail::sorted_sides(left)[2] / detail::sorted_sides(right)[2];
    auto similar = make_record("the two lower tangent triangles are similar", worst, 0.0, ctx.rel_tol,
                               {{"touch_left", ct.touch_left}, {"touch_right", ct.touch_right}},
                               {{"side_ratio", side_ratio},
                                {"latus_ratio", l.p() / r.p()},
                                {"common_tangent_slope", ct.slope}});
    LowerTangentTriangles out{left, right, ct, side_ratio, std::move(left_lambert), std::move(right_lambert),
                              std::move(similar)};
    return out;
}

}  // namespace parbelos
