#pragma once

// Points, lines, circles and quadrilaterals in the plane, plus the handful
// of incidence predicates the parbelos constructions need.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>

#include "parbelos/numeric.hpp"

namespace parbelos {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
    friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
    friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point, Point) = default;
};

inline constexpr double dot(Point u, Point v) { return u.x * v.x + u.y * v.y; }
inline constexpr double cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }
inline double norm(Point v) { return std::hypot(v.x, v.y); }
inline double distance(Point p, Point q) { return norm(p - q); }
inline constexpr Point midpoint(Point p, Point q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }

/**
 * A line held either as y = m x + k or as x = c.
 *
 * The vertical form is needed for the angle bisector at the middle cusp,
 * which a slope-intercept line cannot represent.
 */
class Line {
public:
    static Line slope_intercept(double m, double k) {
        detail::require_finite(m);
        detail::require_finite(k);
        return Line(false, m, k);
    }

    static Line vertical(double c) { return Line(true, 0.0, detail::require_finite(c)); }

    static Line point_slope(Point p, double m) { return slope_intercept(m, p.y - m * p.x); }

    static Line through(Point p, Point q) {
        if (p == q) throw Error("coincident points");
        if (p.x == q.x) return vertical(p.x);
        return point_slope(p, (q.y - p.y) / (q.x - p.x));
    }

    [[nodiscard]] bool is_vertical() const { return vertical_; }
    [[nodiscard]] double slope() const { return slope_; }
    [[nodiscard]] double intercept() const { return offset_; }
    /// Abscissa of a vertical line.
    [[nodiscard]] double x_const() const { return offset_; }

    [[nodiscard]] double y_at(double x) const {
        if (vertical_) throw Error("vertical line has no ordinate function");
        return slope_ * x + offset_;
    }

    /// Unit direction, pointing towards increasing x (or y when vertical).
    [[nodiscard]] Point direction() const {
        if (vertical_) return {0.0, 1.0};
        const double n = std::hypot(1.0, slope_);
        return {1.0 / n, slope_ / n};
    }

    /// A point on the line, used as an anchor for distance computations.
    [[nodiscard]] Point anchor() const { return vertical_ ? Point{offset_, 0.0} : Point{0.0, offset_}; }

private:
    Line(bool vertical, double m, double offset) : vertical_(vertical), slope_(m), offset_(offset) {}

    bool vertical_;
    double slope_;
    double offset_;
};

class Circle {
public:
    Circle(Point center, double radius) : center_(center), radius_(radius) {
        detail::require_finite(center.x);
        detail::require_finite(center.y);
        detail::require_finite(radius);
        if (!(radius > 0.0)) throw Error("non-positive radius");
    }

    [[nodiscard]] Point center() const { return center_; }
    [[nodiscard]] double radius() const { return radius_; }

private:
    Point center_;
    double radius_;
};

inline double distance(Point p, const Line& l) {
    if (l.is_vertical()) return std::abs(p.x - l.x_const());
    return std::abs(l.slope() * p.x - p.y + l.intercept()) / std::hypot(1.0, l.slope());
}

/// Lines are parallel when their directions agree to within ctx.rel_tol.
inline Point line_intersection(const Line& l1, const Line& l2, const ToleranceContext& ctx = {}) {
    if (std::abs(cross(l1.direction(), l2.direction())) <= ctx.rel_tol)
        throw Error("parallel lines");
    if (l1.is_vertical()) return {l1.x_const(), l2.y_at(l1.x_const())};
    if (l2.is_vertical()) return {l2.x_const(), l1.y_at(l2.x_const())};
    const double x = (l2.intercept() - l1.intercept()) / (l1.slope() - l2.slope());
    // Evaluate on the flatter line to limit error amplification.
    const auto& flat = std::abs(l1.slope()) <= std::abs(l2.slope()) ? l1 : l2;
    return {x, flat.y_at(x)};
}

inline bool point_on_circle(Point p, const Circle& c, const ToleranceContext& ctx = {}) {
    return approx_eq(distance(p, c.center()), c.radius(), ctx);
}

inline bool line_tangent_to_circle(const Line& l, const Circle& c, const ToleranceContext& ctx = {}) {
    return approx_eq(distance(c.center(), l), c.radius(), ctx);
}

/// Twice the signed area of triangle p q r.
inline double signed_area2(Point p, Point q, Point r) { return cross(q - p, r - p); }

inline double triangle_area(Point p, Point q, Point r) { return 0.5 * std::abs(signed_area2(p, q, r)); }

/// Collinear when the triangle area is at most abs_floor * scale^2.
inline bool collinear(Point p, Point q, Point r, const ToleranceContext& ctx = {}) {
    return triangle_area(p, q, r) <= ctx.abs_floor * ctx.scale * ctx.scale;
}

/// Order-independent: the points are put into lexicographic order before
/// the construction, so any permutation yields bit-identical output.
inline Circle circumcircle(Point p1, Point p2, Point p3, const ToleranceContext& ctx = {}) {
    std::array<Point, 3> pts{p1, p2, p3};
    for (const auto& p : pts) {
        detail::require_finite(p.x);
        detail::require_finite(p.y);
    }
    std::sort(pts.begin(), pts.end(), [](Point u, Point v) { return u.x < v.x || (u.x == v.x && u.y < v.y); });
    if (collinear(pts[0], pts[1], pts[2], ctx)) throw Error("collinear points");

    const Point b = pts[1] - pts[0];
    const Point c = pts[2] - pts[0];
    const double d = 2.0 * cross(b, c);
    const double bb = dot(b, b);
    const double cc = dot(c, c);
    const Point rel{(c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d};
    return Circle(pts[0] + rel, norm(rel));
}

namespace detail {

inline bool segments_cross(Point p, Point q, Point r, Point s) {
    const double d1 = signed_area2(p, q, r);
    const double d2 = signed_area2(p, q, s);
    const double d3 = signed_area2(r, s, p);
    const double d4 = signed_area2(r, s, q);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace detail

/// Four distinct vertices in cyclic order forming a simple polygon.
class Quadrilateral {
public:
    explicit Quadrilateral(std::array<Point, 4> v) : v_(v) {
        for (const auto& p : v_) {
            detail::require_finite(p.x);
            detail::require_finite(p.y);
        }
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (v_[i] == v_[j]) throw Error("degenerate polygon");
        if (detail::segments_cross(v_[0], v_[1], v_[2], v_[3]) || detail::segments_cross(v_[1], v_[2], v_[3], v_[0]))
            throw Error("self-intersecting polygon");
    }

    Quadrilateral(Point a, Point b, Point c, Point d) : Quadrilateral(std::array<Point, 4>{a, b, c, d}) {}

    [[nodiscard]] std::span<const Point, 4> vertices() const { return v_; }
    [[nodiscard]] Point operator[](std::size_t i) const { return v_[i]; }

    /// Edge i runs from vertex i to vertex i+1 (mod 4).
    [[nodiscard]] Point edge(std::size_t i) const { return v_[(i + 1) % 4] - v_[i]; }

private:
    std::array<Point, 4> v_;
};

/// Polygon area, computed relative to the first vertex.
inline double shoelace_area(std::span<const Point> poly, const ToleranceContext& ctx = {}) {
    if (poly.size() < 3) throw Error("degenerate polygon");
    const Point o = poly[0];
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) twice += cross(poly[i] - o, poly[i + 1] - o);
    const double area = 0.5 * std::abs(twice);
    if (area <= ctx.abs_floor * ctx.scale * ctx.scale) throw Error("degenerate polygon");
    return area;
}

inline double shoelace_area(const Quadrilateral& q, const ToleranceContext& ctx = {}) {
    return shoelace_area(std::span<const Point>(q.vertices()), ctx);
}

inline bool is_parallelogram(const Quadrilateral& q, const ToleranceContext& ctx = {}) {
    for (std::size_t i = 0; i < 2; ++i) {
        const Point e = q.edge(i);
        const Point opposite = q.edge(i + 2);
        const double mag = std::max(norm(e), norm(opposite));
        if (norm(e + opposite) > ctx.tolerance_at(mag)) return false;
    }
    return true;
}

/// A parallelogram whose first corner is right, compared as a cosine.
inline bool is_rectangle(const Quadrilateral& q, const ToleranceContext& ctx = {}) {
    if (!is_parallelogram(q, ctx)) return false;
    const Point e0 = q.edge(0);
    const Point e3 = q.edge(3);
    return std::abs(dot(e0, e3)) <= ctx.rel_tol * norm(e0) * norm(e3);
}

}  // namespace parbelos
