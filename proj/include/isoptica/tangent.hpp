#pragma once

#include <stdexcept>

#include "isoptica/trochoid.hpp"

namespace isoptica {

/// Oriented line in Hesse normal form:
///   { (x, y) : x cos(normal_angle) + y sin(normal_angle) = distance }
/// with the normal angle normalized to [0, 2pi).  distance is signed.
class TangentLine {
  public:
    TangentLine(double normal_angle, double distance);

    double normal_angle() const { return normal_angle_; }
    double distance() const { return distance_; }

    /// x cos u + y sin u - d; zero iff the point lies on the line.
    double residual(const Point2& point) const;

    /// Unit vector along the line (the normal rotated +90 degrees).
    Direction2 direction() const;

  private:
    double normal_angle_;
    double distance_;
};

/// Thrown by intersect_lines when |sin(delta)| <= 1e-12 for the normal
/// angle difference delta.
class ParallelLines : public std::runtime_error {
  public:
    explicit ParallelLines(double normal_angle_delta);
    double normal_angle_delta() const { return delta_; }

  private:
    double delta_;
};

/// Unit tangent direction at parameter t.
///
/// This is the bracketed unit factor of the velocity, not the velocity
/// itself: the scalar speed factor 2(a-+1)sin(at/2)/a vanishes at cusps
/// and is negative on alternating arcs, while the bracket stays unit
/// length and continuous for all t.  The inter-tangent angle identity
/// below holds exactly in this oriented convention.
Direction2 tangent_vector(const CycloidSpec& spec, double t);

/// Tangent line at parameter t in Hesse form; passes through
/// eval_cycloid(spec, t) and is parallel to tangent_vector(spec, t).
TangentLine tangent_line(const CycloidSpec& spec, double t);

/// cos of the angle between tangent_vector(t - phi) and
/// tangent_vector(t + phi): cos((a - 2) phi) for hypocycloids,
/// cos((a + 2) phi) for epicycloids, independent of t.
double inter_tangent_cos(const CycloidSpec& spec, double phi);

/// Angle between the oriented tangents, in [0, pi].
double inter_tangent_angle(const CycloidSpec& spec, double phi);

/// Angle between the tangents as unoriented lines, in [0, pi/2].
double inter_tangent_line_angle(const CycloidSpec& spec, double phi);

/// Half-separation phi such that tangents at t -+ phi meet at oriented
/// angle alpha: alpha/(a - 2) resp. alpha/(a + 2).  Negative for
/// hypocycloids with a < 2.  Throws std::invalid_argument unless
/// 0 < alpha < pi.
double phi_for_alpha(const CycloidSpec& spec, double alpha);

/// Intersection point of two Hesse-form lines.  Throws ParallelLines.
Point2 intersect_lines(const TangentLine& l1, const TangentLine& l2);

}  // namespace isoptica
