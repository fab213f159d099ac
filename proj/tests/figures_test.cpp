#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <string>
#include <vector>

#include "parbelos/figures.hpp"

using namespace parbelos;
using namespace parbelos::svg;

namespace {

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

// data-name -> (cx, cy) as written, i.e. with y already negated.
std::map<std::string, std::pair<double, double>> markers(const std::string& svg) {
    std::map<std::string, std::pair<double, double>> out;
    static const std::regex re(R"re(<circle class="marker" data-name="([^"]*)"[^>]* cx="([-0-9.]+)" cy="([-0-9.]+)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        out[(*it)[1]] = {std::stod((*it)[2]), std::stod((*it)[3])};
    return out;
}

std::vector<std::string> polylines(const std::string& svg) {
    std::vector<std::string> out;
    static const std::regex re(R"re(<polyline class="parabola"[^>]* points="([^"]*)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
        out.push_back((*it)[1]);
    return out;
}

std::string first_point(const std::string& pts) { return pts.substr(0, pts.find(' ')); }
std::string last_point(const std::string& pts) { return pts.substr(pts.rfind(' ') + 1); }

}  // namespace

TEST(Svg, SingleCircle) {
    Scene s;
    s.add(CircleShape{Circle({1, 2}, 0.5)});
    const auto svg = render_scene(s);
    EXPECT_EQ(count(svg, "<circle class=\"circle\""), 1);
    EXPECT_EQ(count(svg, "<circle"), 1);
    EXPECT_NE(svg.find("cx=\"1.000000\" cy=\"-2.000000\" r=\"0.500000\""), std::string::npos);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
}

TEST(Svg, EmptyScene) {
    Scene s;
    EXPECT_THROW((void)render_scene(s), Error);
    EXPECT_THROW((void)fit_viewbox(s), Error);
    try {
        (void)render_scene(s);
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "nothing to render");
    }
}

TEST(Svg, ViewboxMustContainScene) {
    Scene s;
    s.add(Segment{{0, 0}, {10, 10}});
    s.viewbox = ViewBox{0, 0, 1, 1};
    EXPECT_THROW((void)render_scene(s), Error);
}

TEST(Svg, NegativeZeroNormalized) {
    EXPECT_EQ(svg::detail::num(-0.0), "0.000000");
    EXPECT_EQ(svg::detail::num(-1e-9), "0.000000");
    EXPECT_EQ(svg::detail::num(-1.5), "-1.500000");
}

TEST(Svg, EscapesText) {
    Scene s;
    s.title = "a<b & c";
    s.add(LabeledPoint{{0, 0}, "\"q\""});
    const auto svg = render_scene(s);
    EXPECT_NE(svg.find("<title>a&lt;b &amp; c</title>"), std::string::npos);
    EXPECT_NE(svg.find("&quot;q&quot;"), std::string::npos);
}

TEST(Figures, ParbelosArcsMeetAtCusps) {
    const auto svg = render_scene(figure(FigureName::parbelos, 0, 1, 4));
    const auto arcs = polylines(svg);
    ASSERT_EQ(arcs.size(), 3u);
    EXPECT_EQ(first_point(arcs[0]), "0.000000,0.000000");
    EXPECT_EQ(last_point(arcs[0]), "4.000000,0.000000");
    EXPECT_EQ(first_point(arcs[1]), "0.000000,0.000000");
    EXPECT_EQ(last_point(arcs[1]), "1.000000,0.000000");
    EXPECT_EQ(first_point(arcs[2]), "1.000000,0.000000");
    EXPECT_EQ(last_point(arcs[2]), "4.000000,0.000000");
    EXPECT_EQ(count(svg, "class=\"region\""), 1);
}

TEST(Figures, AllNamesRenderDeterministically) {
    for (const auto& [f, name] : figure_names) {
        SCOPED_TRACE(std::string(name));
        EXPECT_EQ(parse_figure_name(name), f);
        EXPECT_EQ(to_string(f), name);
        const auto a = render_scene(figure(f, 0, 1, 4));
        const auto b = render_scene(figure(f, 0, 1, 4));
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.substr(a.size() - 7), "</svg>\n");
        EXPECT_NE(a.find("<title>" + std::string(name) + "</title>"), std::string::npos);
        const auto s = figure(f, -3, 2.5, 7);
        ASSERT_TRUE(s.viewbox.has_value());
        EXPECT_TRUE(viewbox_has_margin(s, *s.viewbox));
    }
    EXPECT_FALSE(parse_figure_name("bogus").has_value());
}

TEST(Figures, SymmetricCuspsRender) {
    for (const auto& [f, name] : figure_names) {
        SCOPED_TRACE(std::string(name));
        EXPECT_NO_THROW((void)render_scene(figure(f, 0, 2, 4)));
    }
}

TEST(Figures, MarkersMatchRecordWitnesses) {
    const auto pb = Parbelos::from_cusps(0, 1, 4);
    const auto rc = rectangle_circumcircle(pb, pb.context());
    const auto m = markers(render_scene(figure(FigureName::rectangle_circle, 0, 1, 4)));
    ASSERT_TRUE(m.count("F") && m.count("O"));
    for (const char* name : {"F", "O"}) {
        const Point* w = rc.focus_on_circle.witness(name);
        ASSERT_NE(w, nullptr);
        EXPECT_NEAR(m.at(name).first, w->x, 5e-7);
        EXPECT_NEAR(m.at(name).second, -w->y, 5e-7);
    }
    EXPECT_NEAR(m.at("F").first, 2.0, 5e-7);
    EXPECT_NEAR(m.at("F").second, 0.0, 5e-7);
    EXPECT_NEAR(m.at("O").first, 1.5, 5e-7);
    EXPECT_NEAR(m.at("O").second, -1.0, 5e-7);

    const auto d = diagonal_tangency(pb, pb.context());
    const auto t = markers(render_scene(figure(FigureName::tangent_rectangle, 0, 1, 4)));
    ASSERT_TRUE(t.count("contact"));
    EXPECT_NEAR(t.at("contact").first, d.contact.x, 5e-7);
    EXPECT_NEAR(t.at("contact").second, -d.contact.y, 5e-7);
    EXPECT_NEAR(t.at("contact").first, 1.0, 5e-7);
}

TEST(Figures, LocusHasThreeDashedArcs) {
    const auto svg = render_scene(figure(FigureName::locus, 0, 1, 4));
    int dashed = 0;
    for (auto pos = svg.find("<polyline class=\"parabola\""); pos != std::string::npos;
         pos = svg.find("<polyline class=\"parabola\"", pos + 1)) {
        const auto end = svg.find('>', pos);
        if (svg.substr(pos, end - pos).find("stroke-dasharray") != std::string::npos) ++dashed;
    }
    EXPECT_EQ(dashed, 3);
    EXPECT_EQ(count(svg, "class=\"semicircle\""), 3);
}

TEST(Figures, ParabolaLabels) {
    const auto m = markers(render_scene(figure(FigureName::parabola, 0, 1, 4)));
    for (const char* name : {"F", "V", "L"}) EXPECT_TRUE(m.count(name)) << name;
    EXPECT_NEAR(m.at("F").first, 2.0, 5e-7);
    EXPECT_NEAR(m.at("V").second, -1.0, 5e-7);
    EXPECT_NEAR(m.at("L").second, -2.0, 5e-7);
}

TEST(Figures, ViewboxMargin) {
    const auto s = figure(FigureName::two_circumcircles, 0, 1, 4);
    const auto vb = fit_viewbox(s);
    EXPECT_TRUE(viewbox_has_margin(s, vb));
    const ViewBox tight{vb.min_x + 0.07 * vb.width, vb.min_y, vb.width, vb.height};
    EXPECT_FALSE(viewbox_has_margin(s, tight));
}

TEST(Figures, BezierArc) {
    const auto pb = Parbelos::from_cusps(0, 1, 4);
    Scene s;
    ParabolaArc arc{pb.upper(), 0.0, 4.0};
    arc.bezier = true;
    s.add(arc);
    s.viewbox = ViewBox{-1, -1, 6, 4};
    const auto svg = render_scene(s);
    // Tangents at the latus rectum ends meet on the directrix above the focus.
    EXPECT_NE(svg.find("d=\"M 0.000000,0.000000 Q 2.000000,-2.000000 4.000000,0.000000\""), std::string::npos) << svg;
}
