#include "isoptica/isoptic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isoptica {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < M_PI)) {
        throw std::invalid_argument("viewing angle must satisfy 0 < alpha < pi, got " +
                                    std::to_string(alpha));
    }
}

}  // namespace

Point2 isoptic_point(const CycloidSpec& spec, double alpha, double t) {
    check_alpha(alpha);
    const double a = spec.a();
    const double sin_alpha = std::sin(alpha);
    if (spec.kind() == CycloidKind::Hypocycloid) {
        const double s1 = std::sin((a - 1.0) * alpha / (a - 2.0));
        const double s2 = std::sin(alpha / (a - 2.0));
        return {(a - 2.0) * (s1 * std::cos(t) + s2 * std::cos((a - 1.0) * t)) / (a * sin_alpha),
                (a - 2.0) * (s1 * std::sin(t) - s2 * std::sin((a - 1.0) * t)) / (a * sin_alpha)};
    }
    const double s1 = std::sin((a + 1.0) * alpha / (a + 2.0));
    const double s2 = std::sin(alpha / (a + 2.0));
    return {(a + 2.0) * (s1 * std::cos(t) - s2 * std::cos((a + 1.0) * t)) / (a * sin_alpha),
            (a + 2.0) * (s1 * std::sin(t) - s2 * std::sin((a + 1.0) * t)) / (a * sin_alpha)};
}

Point2 isoptic_point_oracle(const CycloidSpec& spec, double alpha, double t) {
    const double phi = phi_for_alpha(spec, alpha);
    return intersect_lines(tangent_line(spec, t - phi), tangent_line(spec, t + phi));
}

IsopticResult isoptic_trochoid(const CycloidSpec& spec, double alpha) {
    check_alpha(alpha);
    const double a = spec.a();
    const bool hypo = spec.kind() == CycloidKind::Hypocycloid;
    const double rate = hypo ? a - 2.0 : a + 2.0;   // a -+ 2
    const double arms = hypo ? a - 1.0 : a + 1.0;   // a -+ 1
    const double sin_alpha = std::sin(alpha);

    const double fixed = rate * std::sin(arms * alpha / rate) / (arms * sin_alpha);
    const double pen = rate * std::sin(alpha / rate) / (a * sin_alpha);
    if (fixed == 0.0) {
        throw std::domain_error("isoptic degenerates to a circle (A = B = 0); "
                                "use degenerate_circle");
    }

    TrochoidSpec trochoid;
    trochoid.kind = hypo ? TrochoidKind::Hypotrochoid : TrochoidKind::Epitrochoid;
    trochoid.fixed_radius = fixed;
    trochoid.rolling_radius = fixed / a;
    trochoid.pen_offset = pen;
    return {spec, alpha, trochoid, 0.0, Orientation::Same};
}

std::optional<double> degenerate_alpha(const CycloidSpec& spec) {
    if (spec.kind() != CycloidKind::Hypocycloid) {
        // The epitrochoid analogue would require alpha = (a + 2) pi / (a + 1) > pi.
        return std::nullopt;
    }
    const double a = spec.a();
    const double astar = (a - 2.0) * M_PI / (a - 1.0);
    if (!(astar > 0.0 && astar < M_PI)) {
        return std::nullopt;  // a < 2: no admissible viewing angle
    }
    return astar;
}

std::optional<CircleResult> degenerate_circle(const CycloidSpec& spec, double alpha, double tol) {
    const auto astar = degenerate_alpha(spec);
    if (!astar || std::abs(alpha - *astar) > tol) {
        return std::nullopt;
    }
    const double a = spec.a();
    const double radius = (a - 2.0) * std::sin(alpha / (a - 2.0)) / (a * std::sin(alpha));
    return CircleResult{radius};
}

}  // namespace isoptica
