#include "isoptica/tangent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace isoptica {

namespace {

double wrap_two_pi(double angle) {
    double w = std::fmod(angle, 2.0 * M_PI);
    if (w < 0.0) w += 2.0 * M_PI;
    return w;
}

// a - 2 for hypocycloids, a + 2 for epicycloids; the frequency of the
// tangent direction.
double direction_rate(const CycloidSpec& spec) {
    return spec.kind() == CycloidKind::Hypocycloid ? spec.a() - 2.0 : spec.a() + 2.0;
}

}  // namespace

TangentLine::TangentLine(double normal_angle, double distance)
    : normal_angle_(wrap_two_pi(normal_angle)), distance_(distance) {}

double TangentLine::residual(const Point2& point) const {
    return point.x * std::cos(normal_angle_) + point.y * std::sin(normal_angle_) - distance_;
}

Direction2 TangentLine::direction() const {
    return {-std::sin(normal_angle_), std::cos(normal_angle_)};
}

ParallelLines::ParallelLines(double normal_angle_delta)
    : std::runtime_error("lines are parallel (normal angle delta " +
                         std::to_string(normal_angle_delta) + ")"),
      delta_(normal_angle_delta) {}

Direction2 tangent_vector(const CycloidSpec& spec, double t) {
    const double half = direction_rate(spec) * t / 2.0;
    if (spec.kind() == CycloidKind::Hypocycloid) {
        return {-std::cos(half), std::sin(half)};
    }
    return {std::cos(half), std::sin(half)};
}

TangentLine tangent_line(const CycloidSpec& spec, double t) {
    const double a = spec.a();
    const double half = direction_rate(spec) * t / 2.0;
    const double dist = direction_rate(spec) / a * std::sin(a * t / 2.0);
    // Hypocycloid line: x sin(half) + y cos(half) = dist  -> normal at pi/2 - half.
    // Epicycloid line:  x sin(half) - y cos(half) = dist  -> normal at half - pi/2.
    const double normal =
        spec.kind() == CycloidKind::Hypocycloid ? M_PI / 2.0 - half : half - M_PI / 2.0;
    return TangentLine(normal, dist);
}

double inter_tangent_cos(const CycloidSpec& spec, double phi) {
    return std::cos(direction_rate(spec) * phi);
}

double inter_tangent_angle(const CycloidSpec& spec, double phi) {
    return std::acos(std::clamp(inter_tangent_cos(spec, phi), -1.0, 1.0));
}

double inter_tangent_line_angle(const CycloidSpec& spec, double phi) {
    return std::acos(std::clamp(std::abs(inter_tangent_cos(spec, phi)), 0.0, 1.0));
}

double phi_for_alpha(const CycloidSpec& spec, double alpha) {
    if (!(alpha > 0.0 && alpha < M_PI)) {
        throw std::invalid_argument("viewing angle must satisfy 0 < alpha < pi, got " +
                                    std::to_string(alpha));
    }
    return alpha / direction_rate(spec);
}

Point2 intersect_lines(const TangentLine& l1, const TangentLine& l2) {
    const double c1 = std::cos(l1.normal_angle());
    const double s1 = std::sin(l1.normal_angle());
    const double c2 = std::cos(l2.normal_angle());
    const double s2 = std::sin(l2.normal_angle());
    const double det = c1 * s2 - s1 * c2;  // sin of the normal angle difference
    if (std::abs(det) <= 1e-12) {
        throw ParallelLines(l2.normal_angle() - l1.normal_angle());
    }
    return {(l1.distance() * s2 - l2.distance() * s1) / det,
            (l2.distance() * c1 - l1.distance() * c2) / det};
}

}  // namespace isoptica
