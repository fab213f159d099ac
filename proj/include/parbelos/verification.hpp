#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parbelos/euclid.hpp"

namespace parbelos {

struct NamedPoint {
    std::string name;
    Point point;
};

struct NamedValue {
    std::string name;
    double value = 0.0;
};

/**
 * Outcome of one numerical identity check.
 *
 * `pass` is always `residual <= tolerance_used`; build records through
 * make_record() so the two never disagree. Witness points let renderers mark
 * foci and contact points without recomputing them.
 */
struct VerificationRecord {
    std::string property_name;
    bool pass = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tolerance_used = 0.0;
    std::vector<NamedPoint> witness_points;
    std::vector<NamedValue> measurements;

    [[nodiscard]] const Point* witness(std::string_view name) const {
        for (const auto& w : witness_points)
            if (w.name == name) return &w.point;
        return nullptr;
    }
};

/// Record comparing lhs against rhs; residual is |lhs - rhs|.
inline VerificationRecord make_record(std::string name, double lhs, double rhs, double tolerance,
                                      std::vector<NamedPoint> witnesses = {},
                                      std::vector<NamedValue> measurements = {}) {
    VerificationRecord r;
    r.property_name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::abs(lhs - rhs);
    r.tolerance_used = tolerance;
    r.pass = std::isfinite(r.residual) && r.residual <= tolerance;
    r.witness_points = std::move(witnesses);
    r.measurements = std::move(measurements);
    return r;
}

/// Relative comparison: the tolerance is rel_tol scaled by |rhs|.
inline VerificationRecord make_relative_record(std::string name, double lhs, double rhs, double rel_tol,
                                               std::vector<NamedPoint> witnesses = {},
                                               std::vector<NamedValue> measurements = {}) {
    return make_record(std::move(name), lhs, rhs, rel_tol * std::abs(rhs), std::move(witnesses),
                       std::move(measurements));
}

}  // namespace parbelos
