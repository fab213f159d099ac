#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "parbelos/parbelos.hpp"
#include "test_support.hpp"

using namespace parbelos;

namespace {

const double kP = std::numbers::sqrt2 + std::log(1.0 + std::numbers::sqrt2);
const auto worked = Parbelos::from_cusps(0, 1, 4);
const auto symmetric = Parbelos::from_cusps(0, 2, 4);

void expect_point(Point p, double x, double y, double tol = 1e-14) {
    EXPECT_NEAR(p.x, x, tol);
    EXPECT_NEAR(p.y, y, tol);
}

}  // namespace

TEST(Parbelos, FromCusps) {
    EXPECT_DOUBLE_EQ(worked.a(), 1.0);
    EXPECT_DOUBLE_EQ(worked.b(), 0.5);
    expect_point(worked.lower_left().vertex(), 0.5, 0.25);
    expect_point(worked.upper().vertex(), 2, 1);
    expect_point(worked.lower_right().vertex(), 2.5, 0.75);
    EXPECT_DOUBLE_EQ(symmetric.a(), 1.0);
    EXPECT_DOUBLE_EQ(symmetric.b(), 1.0);
    // Foci at offsets 2a, b and 2a + b.
    expect_point(worked.upper().focus(), 2, 0);
    expect_point(worked.lower_left().focus(), 0.5, 0);
    expect_point(worked.lower_right().focus(), 2.5, 0);
    try {
        Parbelos::from_cusps(0, 4, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "cusps not strictly ordered");
    }
    EXPECT_THROW(Parbelos::from_cusps(0, 0, 1), Error);
}

TEST(Parbelos, CuspTangency) {
    const auto r = cusp_tangency_report(worked, worked.context());
    EXPECT_DOUBLE_EQ(r[0].first_slope, 1.0);
    EXPECT_DOUBLE_EQ(r[0].second_slope, 1.0);
    EXPECT_TRUE(r[0].tangent);
    EXPECT_DOUBLE_EQ(r[1].first_slope, -1.0);
    EXPECT_DOUBLE_EQ(r[1].second_slope, 1.0);
    EXPECT_FALSE(r[1].tangent);
    for (const auto& t : r) EXPECT_TRUE(t.record.pass) << t.record.property_name;

    const auto s = cusp_tangency_report(symmetric, symmetric.context());
    EXPECT_DOUBLE_EQ(s[2].first_slope, -1.0);
    EXPECT_DOUBLE_EQ(s[2].second_slope, -1.0);
    EXPECT_TRUE(s[2].tangent);
}

TEST(Parbelos, BoundaryLengths) {
    const auto l = boundary_lengths(worked);
    EXPECT_NEAR(l.upper, 2 * kP, 1e-14);
    EXPECT_NEAR(l.lower_left, 0.5 * kP, 1e-14);
    EXPECT_NEAR(l.lower_right, 1.5 * kP, 1e-14);
    EXPECT_NEAR(l.lower_sum, l.upper, 1e-14);
    EXPECT_NEAR(l.upper, 4.5911742988, 1e-10);

    const auto s = boundary_lengths(symmetric);
    EXPECT_NEAR(s.lower_left, kP, 1e-14);
    EXPECT_NEAR(s.lower_right, kP, 1e-14);

    const auto big = boundary_lengths(Parbelos::from_cusps(0, 10, 40));
    EXPECT_NEAR(big.upper, 20 * kP, 1e-12);
    EXPECT_NEAR(big.lower_sum, 20 * kP, 1e-12);
}

TEST(Parbelos, SubdivideSimilar) {
    const auto sub = subdivide_similar(worked);
    EXPECT_EQ(sub.left.c2().x, 0.25);
    EXPECT_EQ(sub.left.c3().x, 1.0);
    EXPECT_EQ(sub.right.c1().x, 1.0);
    EXPECT_EQ(sub.right.c2().x, 1.75);
    EXPECT_EQ(sub.right.c3().x, 4.0);
    const auto arcs = subdivided_lower_arcs(sub);
    EXPECT_NEAR(arcs[0], 0.125 * kP, 1e-14);
    EXPECT_NEAR(arcs[1], 0.375 * kP, 1e-14);
    EXPECT_NEAR(arcs[2], 0.375 * kP, 1e-14);
    EXPECT_NEAR(arcs[3], 1.125 * kP, 1e-14);
    EXPECT_NEAR(0.5 * harmonic_mean(0.5 * kP, 1.5 * kP), 0.375 * kP, 1e-14);
    for (const auto& r : similar_subdivision_report(worked, worked.context())) EXPECT_TRUE(r.pass) << r.property_name;
}

TEST(Parbelos, CuspVerticesParallelogram) {
    const auto q = cusp_vertices_parallelogram(worked);
    expect_point(q[0], 1, 0);
    expect_point(q[1], 0.5, 0.25);
    expect_point(q[2], 2, 1);
    expect_point(q[3], 2.5, 0.75);
    EXPECT_TRUE(is_parallelogram(q));
    EXPECT_DOUBLE_EQ((q[2].y - 0.0) / (q[2].x - 0.0), 0.5);

    const auto s = cusp_vertices_parallelogram(symmetric);
    const double side0 = norm(s.edge(0)), side1 = norm(s.edge(1));
    EXPECT_NEAR(side0, side1, 1e-15);  // rhombus
    for (const auto& r : parallelogram_report(worked, worked.context())) EXPECT_TRUE(r.pass) << r.property_name;
}

TEST(Parbelos, Area) {
    // 8/3 - 1/6 - 27/18 = 1
    EXPECT_NEAR(parbelos_area(worked), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(shoelace_area(cusp_vertices_parallelogram(worked)), 0.75);
    EXPECT_NEAR(parbelos_area(symmetric), 4.0 / 3.0, 1e-15);

    // Cross-check against direct integration of the region height.
    auto height = [](double x) {
        const double lower = x < 1 ? worked.lower_left().eval(x) : worked.lower_right().eval(x);
        return worked.upper().eval(x) - lower;
    };
    const double direct = integrate_adaptive(height, 0, 1, 1e-14) + integrate_adaptive(height, 1, 4, 1e-14);
    EXPECT_NEAR(direct, 1.0, 1e-12);
}

TEST(Parbelos, TangentRectangle) {
    const auto rect = tangent_rectangle(worked);
    expect_point(rect[0], 1, 0);
    expect_point(rect[1], 0.5, 0.5);
    expect_point(rect[2], 2, 2);
    expect_point(rect[3], 2.5, 1.5);
    EXPECT_TRUE(is_rectangle(rect));
    EXPECT_NEAR(shoelace_area(rect), 1.5, 1e-15);
    EXPECT_NEAR(parbelos_area(worked) / shoelace_area(rect), 2.0 / 3.0, 1e-15);
    for (const auto& r : tangent_rectangle_report(worked, worked.context())) EXPECT_TRUE(r.pass) << r.property_name;
}

TEST(Parbelos, DiagonalTangency) {
    const auto d = diagonal_tangency(worked, worked.context());
    EXPECT_NEAR(d.diagonal.slope(), 0.5, 1e-15);
    EXPECT_NEAR(d.diagonal.intercept(), 0.25, 1e-15);
    expect_point(d.contact, 1, 0.75);
    EXPECT_NEAR(d.curve_slope_at_contact, 0.5, 1e-15);
    EXPECT_NEAR(d.discriminant, 0.0, 1e-14);
    for (const auto& r : d.records()) EXPECT_TRUE(r.pass) << r.property_name;

    const auto s = diagonal_tangency(symmetric, symmetric.context());
    EXPECT_NEAR(s.diagonal.slope(), 0.0, 1e-15);
    EXPECT_NEAR(s.diagonal.intercept(), 1.0, 1e-15);
    expect_point(s.contact, 2, 1);
}

TEST(Parbelos, RectangleCircumcircle) {
    const auto rc = rectangle_circumcircle(worked, worked.context());
    expect_point(rc.circle.center(), 1.5, 1);
    EXPECT_NEAR(rc.circle.radius(), std::sqrt(1.25), 1e-15);
    EXPECT_TRUE(point_on_circle({2, 0}, rc.circle));
    for (const auto& r : rc.records()) EXPECT_TRUE(r.pass) << r.property_name;

    const auto sc = rectangle_circumcircle(symmetric, symmetric.context());
    expect_point(sc.circle.center(), 2, 1);
    for (const auto& r : sc.records()) EXPECT_TRUE(r.pass) << r.property_name;
}

TEST(Parbelos, CommonLowerTangent) {
    const auto ct = common_lower_tangent(worked);
    const double m = 2 - std::sqrt(3.0);
    EXPECT_NEAR(ct.slope, m, 1e-15);
    EXPECT_NEAR(ct.line.intercept(), m / 2, 1e-15);
    EXPECT_NEAR(ct.touch_left.x, 0.5 * (1 - m), 1e-15);
    EXPECT_NEAR(ct.touch_right.x, 2.5 - 1.5 * m, 1e-15);
    EXPECT_NEAR(ct.touch_left.x, 0.366025, 1e-6);
    EXPECT_NEAR(ct.touch_right.x, 2.098076, 1e-6);
    EXPECT_NEAR(worked.lower_left().tangency_discriminant(ct.line), 0.0, 1e-14);
    EXPECT_NEAR(worked.lower_right().tangency_discriminant(ct.line), 0.0, 1e-14);

    const auto s = common_lower_tangent(symmetric);
    EXPECT_EQ(s.slope, 0.0);
    EXPECT_NEAR(s.line.intercept(), 0.5, 1e-15);
    expect_point(s.touch_left, 1, 0.5);
    expect_point(s.touch_right, 3, 0.5);

    const auto mirror = common_lower_tangent(Parbelos::from_cusps(0, 3, 4));
    EXPECT_NEAR(mirror.slope, -m, 1e-15);
    EXPECT_NEAR(mirror.touch_right.x, 4 - ct.touch_left.x, 1e-14);
}

TEST(Parbelos, LowerTangentTriangles) {
    const auto ctx = worked.context();
    const auto t = lower_tangent_triangles(worked, ctx);
    for (const auto& r : t.records()) EXPECT_TRUE(r.pass) << r.property_name;
    ASSERT_NE(t.left_lambert.witness("F"), nullptr);
    expect_point(*t.left_lambert.witness("F"), 0.5, 0);
    expect_point(*t.right_lambert.witness("F"), 2.5, 0);
    EXPECT_NEAR(t.side_ratio, 1.0 / 3.0, 1e-13);

    const auto s = lower_tangent_triangles(symmetric, symmetric.context());
    EXPECT_NEAR(s.side_ratio, 1.0, 1e-14);
    for (const auto& r : s.records()) EXPECT_TRUE(r.pass) << r.property_name;
}

TEST(ParbelosProperties, RandomCusps) {
    auto rng = test_support::make_rng(30);
    for (int i = 0; i < 1000; ++i) {
        const auto c = test_support::random_cusps(rng);
        const auto pb = Parbelos::from_cusps(c[0], c[1], c[2]);
        const auto ctx = pb.context();
        const double s = pb.scale();

        const auto len = boundary_lengths(pb);
        EXPECT_LT(std::abs(len.upper - len.lower_sum) / len.upper, 1e-9);

        const auto arcs = subdivided_lower_arcs(subdivide_similar(pb));
        EXPECT_NEAR(arcs[1] / arcs[2], 1.0, 1e-9);
        EXPECT_NEAR(arcs[1] / (0.5 * harmonic_mean(len.lower_left, len.lower_right)), 1.0, 1e-9);

        const double area = parbelos_area(pb);
        EXPECT_NEAR(area / shoelace_area(cusp_vertices_parallelogram(pb), ctx) / (4.0 / 3.0), 1.0, 1e-9);
        EXPECT_NEAR(area / shoelace_area(tangent_rectangle(pb), ctx) / (2.0 / 3.0), 1.0, 1e-9);

        const auto d = diagonal_tangency(pb, ctx);
        EXPECT_LT(std::abs(d.discriminant), 1e-10 * s * s);
        EXPECT_LT(std::abs(d.contact.x - pb.c2().x), 1e-9 * s);

        const auto rc = rectangle_circumcircle(pb, ctx);
        EXPECT_LT(rc.focus_on_circle.residual, 1e-9 * s);

        const auto ct = common_lower_tangent(pb);
        EXPECT_LT(std::abs(pb.lower_left().tangency_discriminant(ct.line)), 1e-10 * s * s);
        EXPECT_LT(std::abs(pb.lower_right().tangency_discriminant(ct.line)), 1e-10 * s * s);
    }
}

TEST(ParbelosProperties, SimilarityAndReflection) {
    auto rng = test_support::make_rng(31);
    std::uniform_real_distribution<double> lam(0.01, 100), shift(-100, 100);
    for (int i = 0; i < 200; ++i) {
        const auto c = test_support::random_cusps(rng, 0, 4);
        const auto pb = Parbelos::from_cusps(c[0], c[1], c[2]);
        const double l = lam(rng), t = shift(rng);
        const auto scaled = Parbelos::from_cusps(l * c[0] + t, l * c[1] + t, l * c[2] + t);
        EXPECT_NEAR(boundary_lengths(scaled).upper / boundary_lengths(pb).upper, l, 1e-12 * l);
        EXPECT_NEAR(parbelos_area(scaled) / parbelos_area(pb), l * l, 1e-9 * l * l);
        EXPECT_NEAR(rectangle_circumcircle(scaled, scaled.context()).circle.radius() /
                        rectangle_circumcircle(pb, pb.context()).circle.radius(),
                    l, 1e-9 * l);
        for (const auto& r : rectangle_circumcircle(scaled, scaled.context()).records()) EXPECT_TRUE(r.pass);
        for (const auto& r : diagonal_tangency(scaled, scaled.context()).records()) EXPECT_TRUE(r.pass);

        const auto mirror = Parbelos::from_cusps(c[0], c[0] + c[2] - c[1], c[2]);
        EXPECT_NEAR(parbelos_area(mirror), parbelos_area(pb), 1e-12);
        EXPECT_NEAR(boundary_lengths(mirror).lower_sum, boundary_lengths(pb).lower_sum, 1e-12);
        EXPECT_NEAR(common_lower_tangent(mirror).slope, -common_lower_tangent(pb).slope, 1e-9);
        EXPECT_NEAR(rectangle_circumcircle(mirror, mirror.context()).circle.radius(),
                    rectangle_circumcircle(pb, pb.context()).circle.radius(), 1e-12);
    }
}
