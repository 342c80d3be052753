#pragma once

#include "isoptica/isoptic.hpp"
#include "isoptica/trochoid.hpp"

namespace isoptica {

// Quasi-support functions of cycloids.
//
// A classical support function gives the distance from the origin to the
// tangent line with outward unit normal (cos u, sin u).  Cycloids are not
// convex, so p(u) here changes sign and one geometric line appears under
// both orientations; we therefore treat p on the unrolled parameter line
// u in R rather than on [0, 2pi).  No convexity-dependent property is
// assumed anywhere.
//
//   hypocycloid:  p(u) = (a-2)/a sin( a/(a-2) (pi/2 - u) )
//   epicycloid:   p(u) = (a+2)/a sin( a/(a+2) (pi/2 - u) )
//
// The line {x cos u + y sin u = p(u)} is the cycloid tangent at the
// contact parameter t(u) = 2(pi/2 - u)/(a-2) for hypocycloids and
// t(u) = 2(u - pi/2)/(a+2) for epicycloids (the mirrored sign comes from
// the curve's x-axis symmetry; it is why the epi parameter alignment runs
// Reversed).

/// Quasi-support function p(u) with analytic derivative.
class SupportFunction {
  public:
    static SupportFunction for_cycloid(const CycloidSpec& spec);

    /// Constant support p = radius: the circle of that radius.
    static SupportFunction constant(double radius);

    double value(double u) const;
    double derivative(double u) const;

  private:
    enum class Family { Hypo, Epi, Constant };
    SupportFunction(Family family, double param) : family_(family), param_(param) {}

    Family family_;
    double param_;  // a for cycloids, radius for Constant
};

/// Parameter correspondence between two parametrizations of one curve:
/// tau = t + shift (Same) or tau = shift - t (Reversed).
struct ParamAlignment {
    double shift = 0.0;
    Orientation orientation = Orientation::Same;
};

SupportFunction support_of(const CycloidSpec& spec);

/// Normal angle of the support line tangent at curve parameter t.
double support_normal_angle(const CycloidSpec& spec, double t);

/// Contact parameter of the support line with normal angle u (inverse of
/// support_normal_angle).
double support_contact_parameter(const CycloidSpec& spec, double u);

/// Envelope reconstruction: p(u) e^{iu} + p'(u) i e^{iu}.  For a cycloid
/// support this is the curve point at support_contact_parameter(u).
Point2 reconstruct_curve(const SupportFunction& sf, double u);

/// Isoptic point from the support function alone:
///
///   z(u) = p(u) e^{iu} + ( -p(u) cot(alpha) + p(u + alpha)/sin(alpha) ) i e^{iu}
///
/// i.e. the intersection of the support lines with normal angles u and
/// u + alpha.  Pairing the lines alpha apart matches the oriented-tangent
/// convention of isoptic_point: the oriented tangents along those two
/// lines meet at angle alpha.  (For a closed convex curve, where the
/// viewing angle is read as the exterior angle of the tangent
/// quadrilateral, the same formula is used with pi - alpha in place of
/// alpha.)  Requires 0 < alpha < pi.
Point2 isoptic_from_support(const SupportFunction& sf, double alpha, double u);

/// Alignment carrying the closed-form parameter onto the support route:
/// hypocycloids shift by alpha/(a-2) with the same direction,
/// epicycloids by alpha/(a+2) with the direction reversed.
ParamAlignment alignment(const CycloidSpec& spec, double alpha);

/// The aligned support-route parameter for closed-form parameter t:
/// u = (pi - (a -+ 2) tau)/2 with tau = t + shift (Same) or shift - t
/// (Reversed).  isoptic_from_support at this u equals isoptic_point at t.
double aligned_support_parameter(const CycloidSpec& spec, const ParamAlignment& align, double t);

}  // namespace isoptica
