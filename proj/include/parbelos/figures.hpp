#pragma once

/**
 * @file figures.hpp
 * @brief Scenes of parabolas, circles and labelled points, and a
 *        deterministic SVG 1.1 writer for them.
 *
 * Model coordinates have y pointing up. The writer negates y when emitting,
 * so the viewBox is expressed in model units with the sign of y flipped;
 * every number is printed with six fractional digits.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parbelos/arbelos.hpp"
#include "parbelos/euclid.hpp"
#include "parbelos/parabola.hpp"
#include "parbelos/parbelos.hpp"

namespace parbelos::svg {

struct Style {
    double stroke_width = 1.5;  // document units (pixels of the output width)
    double font_size = 13.0;
    double width_px = 640.0;
};

struct ParabolaArc {
    VerticalParabola parabola;
    double x0 = 0.0;
    double x1 = 0.0;
    int samples = 128;
    bool dashed = false;
    /// Emit one exact quadratic Bezier instead of a sampled polyline.
    bool bezier = false;
    std::string color = "#1f3f8f";
};

struct CircleShape {
    Circle circle;
    bool dashed = false;
    std::string color = "#8f1f1f";
};

/// Upper half of a circle, drawn as an SVG elliptical arc.
struct SemicircleArc {
    Point center;
    double radius = 0.0;
    bool dashed = false;
    std::string color = "#555555";
};

struct Segment {
    Point from;
    Point to;
    bool dashed = false;
    std::string color = "#333333";
};

struct LabeledPoint {
    Point at;
    std::string label;
};

struct Region {
    std::vector<Point> boundary;
    std::string fill = "#dfe7f5";
};

using Element = std::variant<Region, ParabolaArc, SemicircleArc, CircleShape, Segment, LabeledPoint>;

struct ViewBox {
    double min_x = 0.0;
    double min_y = 0.0;  // model coordinates, y up
    double width = 0.0;
    double height = 0.0;

    [[nodiscard]] double max_x() const { return min_x + width; }
    [[nodiscard]] double max_y() const { return min_y + height; }
};

struct Scene {
    std::string title;
    std::vector<Element> elements;
    std::optional<ViewBox> viewbox;
    Style style;

    template <class E>
    Scene& add(E e) {
        elements.emplace_back(std::move(e));
        return *this;
    }
};

namespace detail {

struct Bounds {
    double lo_x = std::numeric_limits<double>::infinity();
    double lo_y = std::numeric_limits<double>::infinity();
    double hi_x = -std::numeric_limits<double>::infinity();
    double hi_y = -std::numeric_limits<double>::infinity();

    void add(Point p) {
        lo_x = std::min(lo_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_x = std::max(hi_x, p.x);
        hi_y = std::max(hi_y, p.y);
    }
    [[nodiscard]] bool empty() const { return !(lo_x <= hi_x); }
};

inline std::vector<Point> sample_arc(const ParabolaArc& a) {
    const int n = std::max(a.samples, 2);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Endpoints are hit exactly so shared cusps stay bit-identical.
        const double x = i == n - 1 ? a.x1 : a.x0 + (a.x1 - a.x0) * i / (n - 1);
        pts.push_back(a.parabola.point_at(x));
    }
    return pts;
}

inline void extend(Bounds& b, const Element& e) {
    std::visit(
        [&](const auto& el) {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, Region>) {
                for (Point p : el.boundary) b.add(p);
            } else if constexpr (std::is_same_v<T, ParabolaArc>) {
                for (Point p : sample_arc(el)) b.add(p);
            } else if constexpr (std::is_same_v<T, SemicircleArc>) {
                b.add({el.center.x - el.radius, el.center.y});
                b.add({el.center.x + el.radius, el.center.y + el.radius});
            } else if constexpr (std::is_same_v<T, CircleShape>) {
                const Point c = el.circle.center();
                const double r = el.circle.radius();
                b.add({c.x - r, c.y - r});
                b.add({c.x + r, c.y + r});
            } else if constexpr (std::is_same_v<T, Segment>) {
                b.add(el.from);
                b.add(el.to);
            } else {
                b.add(el.at);
            }
        },
        e);
}

/// Fixed six-digit formatting; negative zero prints as zero.
inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

inline std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

/// Bounding box of all elements grown by 8% of its larger side on each edge.
inline ViewBox fit_viewbox(const Scene& s) {
    detail::Bounds b;
    for (const auto& e : s.elements) detail::extend(b, e);
    if (b.empty()) throw Error("nothing to render");
    const double span = std::max({b.hi_x - b.lo_x, b.hi_y - b.lo_y, 1e-9});
    const double margin = 0.08 * span;
    return {b.lo_x - margin, b.lo_y - margin, b.hi_x - b.lo_x + 2 * margin, b.hi_y - b.lo_y + 2 * margin};
}

/// True when the viewbox keeps at least a 5% margin around every element.
inline bool viewbox_has_margin(const Scene& s, const ViewBox& vb) {
    detail::Bounds b;
    for (const auto& e : s.elements) detail::extend(b, e);
    if (b.empty()) return false;
    const double mx = 0.05 * (b.hi_x - b.lo_x), my = 0.05 * (b.hi_y - b.lo_y);
    return vb.min_x <= b.lo_x - mx && vb.max_x() >= b.hi_x + mx && vb.min_y <= b.lo_y - my && vb.max_y() >= b.hi_y + my;
}

inline std::string render_scene(const Scene& s) {
    if (s.elements.empty()) throw Error("nothing to render");
    const ViewBox vb = s.viewbox ? *s.viewbox : fit_viewbox(s);
    if (!viewbox_has_margin(s, vb)) throw Error("viewbox does not contain the scene");

    using detail::num;
    const double unit = vb.width / s.style.width_px;  // model units per document unit
    const double height_px = s.style.width_px * vb.height / vb.width;
    const double stroke = s.style.stroke_width * unit;
    const double font = s.style.font_size * unit;
    auto xy = [](Point p) { return num(p.x) + "," + num(0.0 - p.y); };
    auto dash = [&](bool dashed) {
        return dashed ? " stroke-dasharray=\"" + num(4 * stroke) + " " + num(3 * stroke) + "\"" : std::string();
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(s.style.width_px)
        << "\" height=\"" << num(height_px) << "\" viewBox=\"" << num(vb.min_x) << " " << num(0.0 - vb.max_y())
        << " " << num(vb.width) << " " << num(vb.height) << "\">\n";
    if (!s.title.empty()) out << "<title>" << detail::escape(s.title) << "</title>\n";
    out << "<g fill=\"none\" stroke-width=\"" << num(stroke) << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";

    for (const auto& e : s.elements) {
        std::visit(
            [&](const auto& el) {
                using T = std::decay_t<decltype(el)>;
                if constexpr (std::is_same_v<T, Region>) {
                    out << "<polygon class=\"region\" fill=\"" << el.fill << "\" stroke=\"none\" points=\"";
                    for (std::size_t i = 0; i < el.boundary.size(); ++i) out << (i ? " " : "") << xy(el.boundary[i]);
                    out << "\"/>\n";
                } else if constexpr (std::is_same_v<T, ParabolaArc>) {
                    if (el.bezier) {
                        const Point p0 = el.parabola.point_at(el.x0), p1 = el.parabola.point_at(el.x1);
                        const Point ctrl =
                            line_intersection(el.parabola.tangent_at(el.x0), el.parabola.tangent_at(el.x1));
                        out << "<path class=\"parabola\" stroke=\"" << el.color << "\"" << dash(el.dashed)
                            << " d=\"M " << xy(p0) << " Q " << xy(ctrl) << " " << xy(p1) << "\"/>\n";
                    } else {
                        out << "<polyline class=\"parabola\" stroke=\"" << el.color << "\"" << dash(el.dashed)
                            << " points=\"";
                        const auto pts = detail::sample_arc(el);
                        for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << xy(pts[i]);
                        out << "\"/>\n";
                    }
                } else if constexpr (std::is_same_v<T, SemicircleArc>) {
                    const Point l{el.center.x - el.radius, el.center.y}, r{el.center.x + el.radius, el.center.y};
                    out << "<path class=\"semicircle\" stroke=\"" << el.color << "\"" << dash(el.dashed) << " d=\"M "
                        << xy(l) << " A " << num(el.radius) << " " << num(el.radius) << " 0 0 1 " << xy(r)
                        << "\"/>\n";
                } else if constexpr (std::is_same_v<T, CircleShape>) {
                    out << "<circle class=\"circle\" stroke=\"" << el.color << "\"" << dash(el.dashed) << " cx=\""
                        << num(el.circle.center().x) << "\" cy=\"" << num(0.0 - el.circle.center().y) << "\" r=\""
                        << num(el.circle.radius()) << "\"/>\n";
                } else if constexpr (std::is_same_v<T, Segment>) {
                    out << "<line class=\"segment\" stroke=\"" << el.color << "\"" << dash(el.dashed) << " x1=\""
                        << num(el.from.x) << "\" y1=\"" << num(0.0 - el.from.y) << "\" x2=\"" << num(el.to.x)
                        << "\" y2=\"" << num(0.0 - el.to.y) << "\"/>\n";
                } else {
                    out << "<circle class=\"marker\" data-name=\"" << detail::escape(el.label) << "\" fill=\"#000000\""
                        << " stroke=\"none\" cx=\"" << num(el.at.x) << "\" cy=\"" << num(0.0 - el.at.y) << "\" r=\""
                        << num(2.5 * stroke) << "\"/>\n";
                    if (!el.label.empty())
                        out << "<text fill=\"#000000\" stroke=\"none\" font-family=\"serif\" font-size=\"" << num(font)
                            << "\" x=\"" << num(el.at.x + 0.6 * font) << "\" y=\"" << num(0.0 - el.at.y - 0.4 * font)
                            << "\">" << detail::escape(el.label) << "</text>\n";
                }
            },
            e);
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Named figures
// ---------------------------------------------------------------------------

enum class FigureName {
    arbelos,
    parbelos,
    parabola,
    similar_parbeloses,
    arbelos_rectangle,
    parallelogram,
    tangent_rectangle,
    rectangle_circle,
    two_circumcircles,
    arbelos_parbelos,
    locus,
};

inline constexpr std::array<std::pair<FigureName, std::string_view>, 11> figure_names{{
    {FigureName::arbelos, "arbelos"},
    {FigureName::parbelos, "parbelos"},
    {FigureName::parabola, "parabola"},
    {FigureName::similar_parbeloses, "similar-parbeloses"},
    {FigureName::arbelos_rectangle, "arbelos-rectangle"},
    {FigureName::parallelogram, "parallelogram"},
    {FigureName::tangent_rectangle, "tangent-rectangle"},
    {FigureName::rectangle_circle, "rectangle-circle"},
    {FigureName::two_circumcircles, "two-circumcircles"},
    {FigureName::arbelos_parbelos, "arbelos-parbelos"},
    {FigureName::locus, "locus"},
}};

inline std::optional<FigureName> parse_figure_name(std::string_view s) {
    for (const auto& [f, name] : figure_names)
        if (name == s) return f;
    return std::nullopt;
}

inline std::string_view to_string(FigureName f) {
    for (const auto& [g, name] : figure_names)
        if (g == f) return name;
    return "unknown";
}

namespace detail {

inline ParabolaArc latus_arc(const VerticalParabola& p, std::string color = "#1f3f8f", bool dashed = false) {
    ParabolaArc a{p, p.left_end().x, p.right_end().x};
    a.color = std::move(color);
    a.dashed = dashed;
    return a;
}

inline Region parbelos_region(const Parbelos& pb) {
    Region r;
    const auto up = sample_arc(latus_arc(pb.upper()));
    r.boundary.insert(r.boundary.end(), up.begin(), up.end());
    auto right = sample_arc(latus_arc(pb.lower_right()));
    r.boundary.insert(r.boundary.end(), right.rbegin() + 1, right.rend());
    auto left = sample_arc(latus_arc(pb.lower_left()));
    r.boundary.insert(r.boundary.end(), left.rbegin() + 1, left.rend() - 1);
    return r;
}

inline void add_parbelos(Scene& s, const Parbelos& pb, bool fill = true) {
    if (fill) s.add(parbelos_region(pb));
    s.add(latus_arc(pb.upper()));
    s.add(latus_arc(pb.lower_left()));
    s.add(latus_arc(pb.lower_right()));
}

inline void add_arbelos(Scene& s, const Arbelos& ar, bool dashed = false) {
    for (const auto* c : {&ar.upper(), &ar.lower_left(), &ar.lower_right()})
        s.add(SemicircleArc{c->center, c->radius, dashed});
}

inline void add_cusps(Scene& s, const std::array<Point, 3>& c) {
    s.add(LabeledPoint{c[0], "C1"});
    s.add(LabeledPoint{c[1], "C2"});
    s.add(LabeledPoint{c[2], "C3"});
}

inline void add_quad(Scene& s, const Quadrilateral& q, std::string color = "#333333", bool dashed = false) {
    for (std::size_t i = 0; i < 4; ++i) s.add(Segment{q[i], q[(i + 1) % 4], dashed, color});
}

inline void add_witnesses(Scene& s, const VerificationRecord& r, std::initializer_list<std::string_view> names) {
    for (auto n : names)
        if (const Point* p = r.witness(n)) s.add(LabeledPoint{*p, std::string(n)});
}

inline void add_triangle(Scene& s, const std::array<Point, 3>& t, std::string color) {
    for (std::size_t i = 0; i < 3; ++i) s.add(Segment{t[i], t[(i + 1) % 3], false, color});
}

}  // namespace detail

/**
 * The scene for one named figure over cusps (x1, x2, x3) on the x-axis.
 * Foci, contact points and centres are taken from the verification records
 * so the markers coincide with what was checked.
 */
inline Scene figure(FigureName name, double x1, double x2, double x3) {
    const auto pb = Parbelos::from_cusps(x1, x2, x3);
    const auto ar = Arbelos::from_cusps(x1, x2, x3);
    const auto ctx = pb.context();
    Scene s;
    s.title = std::string(to_string(name));

    switch (name) {
        case FigureName::arbelos: {
            Region r;
            for (int i = 0; i <= 128; ++i) {
                const double t = std::numbers::pi * (1.0 - i / 128.0);
                r.boundary.push_back(ar.upper().center + ar.upper().radius * Point{std::cos(t), std::sin(t)});
            }
            for (const auto* c : {&ar.lower_right(), &ar.lower_left()})
                for (int i = 1; i <= 64; ++i) {
                    const double t = std::numbers::pi * i / 64.0;
                    r.boundary.push_back(c->center + c->radius * Point{std::cos(t), std::sin(t)});
                }
            r.fill = "#f2e6d9";
            s.add(std::move(r));
            detail::add_arbelos(s, ar);
            detail::add_cusps(s, ar.cusps());
            break;
        }
        case FigureName::parbelos:
            detail::add_parbelos(s, pb);
            detail::add_cusps(s, pb.cusps());
            break;
        case FigureName::parabola: {
            const auto& p = pb.upper();
            const double w = p.latus_rectum_length();
            s.add(ParabolaArc{p, p.left_end().x - 0.25 * w, p.right_end().x + 0.25 * w});
            s.add(Segment{p.left_end(), p.right_end(), false, "#8f1f1f"});
            const double dy = p.directrix_y();
            s.add(Segment{{p.left_end().x - 0.25 * w, dy}, {p.right_end().x + 0.25 * w, dy}, true});
            s.add(LabeledPoint{p.focus(), "F"});
            s.add(LabeledPoint{p.vertex(), "V"});
            s.add(LabeledPoint{{p.right_end().x + 0.25 * w, dy}, "L"});
            s.add(LabeledPoint{p.left_end(), "C1"});
            s.add(LabeledPoint{p.right_end(), "C2"});
            break;
        }
        case FigureName::similar_parbeloses: {
            const auto sub = subdivide_similar(pb);
            detail::add_parbelos(s, pb);
            for (const auto* q : {&sub.left, &sub.right}) {
                s.add(detail::latus_arc(q->lower_left(), "#2f7f3f"));
                s.add(detail::latus_arc(q->lower_right(), "#2f7f3f"));
            }
            detail::add_cusps(s, pb.cusps());
            break;
        }
        case FigureName::arbelos_rectangle: {
            detail::add_arbelos(s, ar);
            const auto q = cusp_midpoints_rectangle(ar);
            detail::add_quad(s, q, "#8f1f1f");
            detail::add_cusps(s, ar.cusps());
            for (std::size_t i = 1; i < 4; ++i) s.add(LabeledPoint{q[i], "M" + std::to_string(i)});
            break;
        }
        case FigureName::parallelogram: {
            detail::add_parbelos(s, pb);
            const auto q = cusp_vertices_parallelogram(pb);
            detail::add_quad(s, q, "#8f1f1f");
            detail::add_cusps(s, pb.cusps());
            for (std::size_t i = 1; i < 4; ++i) s.add(LabeledPoint{q[i], "V" + std::to_string(i)});
            break;
        }
        case FigureName::tangent_rectangle: {
            detail::add_parbelos(s, pb);
            const auto q = tangent_rectangle(pb);
            detail::add_quad(s, q, "#8f1f1f");
            const auto d = diagonal_tangency(pb, ctx);
            s.add(Segment{q[1], q[3], true, "#8f1f1f"});
            s.add(Segment{pb.c2(), d.contact, true, "#2f7f3f"});
            detail::add_cusps(s, pb.cusps());
            detail::add_witnesses(s, d.tangency, {"T1", "T3", "contact"});
            s.add(LabeledPoint{q[2], "T2"});
            break;
        }
        case FigureName::rectangle_circle: {
            detail::add_parbelos(s, pb);
            detail::add_quad(s, tangent_rectangle(pb), "#8f1f1f");
            const auto rc = rectangle_circumcircle(pb, ctx);
            s.add(CircleShape{rc.circle});
            detail::add_cusps(s, pb.cusps());
            detail::add_witnesses(s, rc.focus_on_circle, {"F", "O"});
            break;
        }
        case FigureName::two_circumcircles: {
            detail::add_parbelos(s, pb);
            const auto t = lower_tangent_triangles(pb, ctx);
            detail::add_triangle(s, t.left, "#8f1f1f");
            detail::add_triangle(s, t.right, "#8f1f1f");
            for (const auto* r : {&t.left_lambert, &t.right_lambert}) {
                const Point o = *r->witness("O");
                const double radius = r->rhs;
                s.add(CircleShape{Circle(o, radius), true});
            }
            s.add(LabeledPoint{*t.left_lambert.witness("F"), "F1"});
            s.add(LabeledPoint{*t.right_lambert.witness("F"), "F3"});
            detail::add_witnesses(s, t.similar, {"touch_left", "touch_right"});
            detail::add_cusps(s, pb.cusps());
            break;
        }
        case FigureName::arbelos_parbelos: {
            detail::add_arbelos(s, ar);
            detail::add_parbelos(s, pb, false);
            const auto q = cusp_midpoints_rectangle(ar);
            detail::add_quad(s, q, "#8f1f1f");
            const Circle c = circumcircle(q[1], q[2], q[3], ctx);
            s.add(CircleShape{c, true});
            s.add(LabeledPoint{ar.upper().center, "O"});
            detail::add_cusps(s, ar.cusps());
            break;
        }
        case FigureName::locus: {
            detail::add_arbelos(s, ar);
            for (const auto* p : {&pb.upper(), &pb.lower_left(), &pb.lower_right()})
                s.add(detail::latus_arc(*p, "#1f3f8f", true));
            const auto fam = InscribedCircleFamily::of(ar.upper());
            for (double t : {-0.6, 0.0, 0.45}) {
                const Circle k = inscribed_circle(fam, t * ar.upper().radius);
                s.add(CircleShape{k, false, "#2f7f3f"});
                s.add(LabeledPoint{k.center(), ""});
            }
            s.add(LabeledPoint{ar.upper().center, "O"});
            detail::add_cusps(s, ar.cusps());
            break;
        }
    }
    s.viewbox = fit_viewbox(s);
    return s;
}

}  // namespace parbelos::svg
