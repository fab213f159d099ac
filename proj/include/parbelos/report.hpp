#pragma once

/**
 * @file report.hpp
 * @brief The property suite as a report document, its JSON form, and the
 *        ratio sweep table.
 *
 * Reals in reports are rounded to 15 significant digits before they are
 * stored, so a parsed report serializes back to the same bytes.
 */

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "parbelos/arbelos.hpp"
#include "parbelos/parbelos.hpp"
#include "parbelos/verification.hpp"

#ifndef PARBELOS_VERSION
#define PARBELOS_VERSION "1.0.0"
#endif

namespace parbelos {

inline constexpr std::string_view tool_version = PARBELOS_VERSION;
inline constexpr int property_count = 7;

inline double round_sig15(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

struct PropertyRecord {
    int property = 0;
    VerificationRecord record;
};

struct ReportSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
};

struct ReportDocument {
    std::string tool_version;
    std::array<double, 3> cusps{};
    std::vector<PropertyRecord> records;
    ReportSummary summary;
    std::vector<NamedValue> derived_quantities;

    [[nodiscard]] bool all_pass() const { return summary.failed == 0; }
};

/// "all", or a comma-separated list of property numbers 1..7.
inline std::set<int> parse_properties(std::string_view list) {
    std::set<int> out;
    if (list == "all") {
        for (int i = 1; i <= property_count; ++i) out.insert(i);
        return out;
    }
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw Error("invalid property list");
        char* end = nullptr;
        const long v = std::strtol(token.c_str(), &end, 10);
        if (*end != '\0' || v < 1 || v > property_count) throw Error("invalid property list");
        out.insert(static_cast<int>(v));
        token.clear();
    };
    for (char c : list) {
        if (c == ',') flush();
        else if (c != ' ') token += c;
    }
    flush();
    return out;
}

namespace detail {

/// Random tangent triangles of the upper parabola; lhs is the worst
/// focus-to-circumcircle residual.
inline VerificationRecord seeded_lambert_sample(const Parbelos& pb, const ToleranceContext& ctx, std::uint64_t seed,
                                                int trials = 16) {
    std::mt19937_64 rng(seed);
    const auto& up = pb.upper();
    std::uniform_real_distribution<double> ux(up.left_end().x, up.right_end().x);
    const double gap = 1e-3 * pb.scale();
    double worst = 0.0;
    for (int done = 0; done < trials;) {
        const double x1 = ux(rng), x2 = ux(rng), x3 = ux(rng);
        if (std::abs(x1 - x2) < gap || std::abs(x2 - x3) < gap || std::abs(x1 - x3) < gap) continue;
        const auto r = lambert_check(up, up.tangent_at(x1), up.tangent_at(x2), up.tangent_at(x3), ctx);
        worst = std::max(worst, r.residual);
        ++done;
    }
    return make_record("random tangent triangles of the upper parabola pass through its focus", worst, 0.0,
                       ctx.tolerance_at(ctx.scale), {{"F", up.focus()}},
                       {{"trials", static_cast<double>(trials)}, {"seed", static_cast<double>(seed)}});
}

}  // namespace detail

inline std::vector<NamedValue> derived_quantities(const Parbelos& pb, const Arbelos& ar, const ToleranceContext& ctx) {
    const auto len = boundary_lengths(pb);
    const double area = parbelos_area(pb);
    const double para = shoelace_area(cusp_vertices_parallelogram(pb), ctx);
    const double rect = shoelace_area(tangent_rectangle(pb), ctx);
    const auto rc = rectangle_circumcircle(pb, ctx);
    const auto ct = common_lower_tangent(pb);
    return {
        {"a", pb.a()},
        {"b", pb.b()},
        {"scale", pb.scale()},
        {"universal_parabolic_constant", len.upper / pb.upper().p()},
        {"upper_arc", len.upper},
        {"lower_left_arc", len.lower_left},
        {"lower_right_arc", len.lower_right},
        {"lower_arc_sum", len.lower_sum},
        {"parbelos_area", area},
        {"parallelogram_area", para},
        {"rectangle_area", rect},
        {"area_to_parallelogram", area / para},
        {"area_to_rectangle", area / rect},
        {"circumradius", rc.circle.radius()},
        {"circumcenter_x", rc.circle.center().x},
        {"circumcenter_y", rc.circle.center().y},
        {"common_tangent_slope", ct.slope},
        {"arbelos_area", arbelos_area(ar)},
    };
}

/**
 * Runs the selected property groups on cusps (x1, x2, x3). Besides the seven
 * numbered properties, each group carries the auxiliary facts its proof
 * relies on (cusp tangency in 4, Lambert triangles in 6, arbelos
 * correspondences in 3, 6 and 7).
 */
inline ReportDocument run_verification(std::array<double, 3> cusps, const std::set<int>& properties,
                                       double rel_tol = 1e-9, std::uint64_t seed = 0) {
    const auto pb = Parbelos::from_cusps(cusps[0], cusps[1], cusps[2]);
    const auto ar = Arbelos::from_cusps(cusps[0], cusps[1], cusps[2]);
    const auto ctx = pb.context(rel_tol);

    ReportDocument doc;
    doc.tool_version = std::string(tool_version);
    doc.cusps = cusps;
    auto add = [&](int group, std::vector<VerificationRecord> recs) {
        for (auto& r : recs) doc.records.push_back({group, std::move(r)});
    };
    const auto arbelos = arbelos_report(ar, pb, ctx);

    for (int group : properties) {
        switch (group) {
            case 1: add(1, {boundary_length_record(pb, ctx)}); break;
            case 2: add(2, similar_subdivision_report(pb, ctx)); break;
            case 3:
                add(3, parallelogram_report(pb, ctx));
                add(3, {arbelos[2], arbelos[3]});
                break;
            case 4: {
                std::vector<VerificationRecord> cusp;
                for (const auto& t : cusp_tangency_report(pb, ctx)) cusp.push_back(t.record);
                add(4, std::move(cusp));
                add(4, tangent_rectangle_report(pb, ctx));
                break;
            }
            case 5: add(5, diagonal_tangency(pb, ctx).records()); break;
            case 6:
                add(6, rectangle_circumcircle(pb, ctx).records());
                add(6, lower_tangent_triangles(pb, ctx).records());
                add(6, {arbelos[4], arbelos[5], detail::seeded_lambert_sample(pb, ctx, seed)});
                break;
            case 7: {
                const auto locus = locus_equivalence(ar, pb, ctx);
                add(7, {arbelos[0], arbelos[1], locus[0], locus[1], locus[2]});
                break;
            }
            default: throw Error("invalid property list");
        }
    }
    for (const auto& pr : doc.records) (pr.record.pass ? doc.summary.passed : doc.summary.failed) += 1;
    doc.summary.total = static_cast<int>(doc.records.size());
    doc.derived_quantities = derived_quantities(pb, ar, ctx);
    return doc;
}

inline nlohmann::ordered_json to_json(const ReportDocument& doc) {
    using nlohmann::ordered_json;
    auto pt = [](const NamedPoint& p) {
        return ordered_json{{"name", p.name}, {"x", round_sig15(p.point.x)}, {"y", round_sig15(p.point.y)}};
    };
    ordered_json records = ordered_json::array();
    for (const auto& [group, r] : doc.records) {
        ordered_json witnesses = ordered_json::array();
        for (const auto& w : r.witness_points) witnesses.push_back(pt(w));
        ordered_json measurements = ordered_json::object();
        for (const auto& m : r.measurements) measurements[m.name] = round_sig15(m.value);
        records.push_back(ordered_json{{"property", group},
                                       {"name", r.property_name},
                                       {"pass", r.pass},
                                       {"lhs", round_sig15(r.lhs)},
                                       {"rhs", round_sig15(r.rhs)},
                                       {"residual", round_sig15(r.residual)},
                                       {"tolerance_used", round_sig15(r.tolerance_used)},
                                       {"witness_points", std::move(witnesses)},
                                       {"measurements", std::move(measurements)}});
    }
    ordered_json derived = ordered_json::object();
    for (const auto& q : doc.derived_quantities) derived[q.name] = round_sig15(q.value);
    return ordered_json{
        {"tool_version", doc.tool_version},
        {"cusps", {round_sig15(doc.cusps[0]), round_sig15(doc.cusps[1]), round_sig15(doc.cusps[2])}},
        {"records", std::move(records)},
        {"summary", {{"total", doc.summary.total}, {"passed", doc.summary.passed}, {"failed", doc.summary.failed}}},
        {"derived_quantities", std::move(derived)},
    };
}

inline std::string serialize(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }
inline std::string serialize(const ReportDocument& doc) { return serialize(to_json(doc)); }

// ---------------------------------------------------------------------------
// Ratio sweep
// ---------------------------------------------------------------------------

inline constexpr std::string_view sweep_header =
    "ratio,parbelos_area,rectangle_area,parallelogram_area,upper_arc,lower_arc_sum,circumradius,common_tangent_slope";

struct SweepRow {
    double ratio = 0.0;
    double parbelos_area = 0.0;
    double rectangle_area = 0.0;
    double parallelogram_area = 0.0;
    double upper_arc = 0.0;
    double lower_arc_sum = 0.0;
    double circumradius = 0.0;
    double common_tangent_slope = 0.0;
};

/// Quantities of the normalized parbelos with cusps (0, 4r, 4).
inline SweepRow sweep_row(double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0)) throw Error("ratio outside (0, 1)");
    const auto pb = Parbelos::from_cusps(0.0, 4.0 * ratio, 4.0);
    const auto ctx = pb.context();
    const auto len = boundary_lengths(pb);
    return {ratio,
            parbelos_area(pb),
            shoelace_area(tangent_rectangle(pb), ctx),
            shoelace_area(cusp_vertices_parallelogram(pb), ctx),
            len.upper,
            len.lower_sum,
            rectangle_circumcircle(pb, ctx).circle.radius(),
            common_lower_tangent(pb).slope};
}

/**
 * Grid tokens are either single ratios ("0.25") or inclusive ranges
 * "lo:hi:count" with count >= 2. Order is preserved.
 */
inline std::vector<double> parse_ratio_grid(const std::vector<std::string>& tokens) {
    std::vector<double> out;
    auto number = [](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || *end != '\0' || !std::isfinite(v)) throw Error("invalid ratio grid");
        return v;
    };
    for (const auto& tok : tokens) {
        const auto c1 = tok.find(':');
        if (c1 == std::string::npos) {
            out.push_back(number(tok));
            continue;
        }
        const auto c2 = tok.find(':', c1 + 1);
        if (c2 == std::string::npos) throw Error("invalid ratio grid");
        const double lo = number(tok.substr(0, c1));
        const double hi = number(tok.substr(c1 + 1, c2 - c1 - 1));
        const double n = number(tok.substr(c2 + 1));
        if (n < 2 || n != std::floor(n) || n > 1e6 || !(lo < hi)) throw Error("invalid ratio grid");
        const int count = static_cast<int>(n);
        for (int i = 0; i < count; ++i) out.push_back(i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
    }
    if (out.empty()) throw Error("empty ratio grid");
    for (double r : out)
        if (!(r > 0.0 && r < 1.0)) throw Error("ratio outside (0, 1)");
    return out;
}

inline std::string format_csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline std::string sweep_csv(const std::vector<double>& ratios) {
    std::ostringstream out;
    out << sweep_header << "\n";
    for (double r : ratios) {
        const auto row = sweep_row(r);
        const std::array<double, 8> cols{row.ratio,     row.parbelos_area, row.rectangle_area, row.parallelogram_area,
                                         row.upper_arc, row.lower_arc_sum, row.circumradius,   row.common_tangent_slope};
        for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << format_csv_number(cols[i]);
        out << "\n";
    }
    return out.str();
}

}  // namespace parbelos
