#pragma once

#include <optional>

#include "isoptica/tangent.hpp"

namespace isoptica {

// The alpha-isoptic of a cycloid: the locus of intersection points of
// pairs of tangents whose oriented directions meet at angle alpha.
// Because the inter-tangent angle depends only on the parameter
// separation, the tangents at t - phi and t + phi (phi = alpha/(a -+ 2))
// intersect in a point that sweeps the isoptic as t runs over one period.
// Three independent routes compute it: the closed form below, the
// trochoid classification, and the brute-force tangent intersection
// (isoptic_point_oracle).  The oracle is the ground truth the other two
// are validated against.

/// An isoptic curve classified as a centered trochoid, together with the
/// parameter alignment against the closed-form parametrization.
struct IsopticResult {
    CycloidSpec base;
    double alpha = 0.0;
    TrochoidSpec trochoid;
    double param_shift = 0.0;
    Orientation orientation = Orientation::Same;
};

/// Degenerate isoptic: a circle centered at the origin.
struct CircleResult {
    double radius = 0.0;
};

/// Closed-form isoptic point at parameter t.  Requires 0 < alpha < pi.
Point2 isoptic_point(const CycloidSpec& spec, double alpha, double t);

/// Brute-force route: intersect tangent_line(t - phi) with
/// tangent_line(t + phi).  Equals isoptic_point up to rounding; kept as
/// an independent code path.  Throws ParallelLines if the tangents are
/// (numerically) parallel, which cannot happen for 0 < alpha < pi.
Point2 isoptic_point_oracle(const CycloidSpec& spec, double alpha, double t);

/// Classify the alpha-isoptic as a trochoid (same family as the base:
/// hypo -> hypotrochoid, epi -> epitrochoid), with
///   A = (a -+ 2) sin((a -+ 1) phi) / ((a -+ 1) sin alpha),  B = A / a,
///   H = (a -+ 2) sin(phi) / (a sin alpha),        phi = alpha / (a -+ 2).
/// eval_trochoid of the result reproduces isoptic_point for all t
/// (param_shift 0, orientation Same).  Throws std::domain_error in the
/// exactly-degenerate case A = B = 0 (use degenerate_circle instead).
IsopticResult isoptic_trochoid(const CycloidSpec& spec, double alpha);

/// The viewing angle at which a hypocycloid's isoptic collapses to a
/// circle: (a - 2) pi / (a - 1).  Epicycloids have no such angle in
/// (0, pi), so this returns nullopt for them.
std::optional<double> degenerate_alpha(const CycloidSpec& spec);

/// Detects the circle case: hypocycloids with
/// |alpha - (a - 2) pi / (a - 1)| <= tol.  The returned radius is the pen
/// offset H at this alpha, which simplifies to (a - 2)/a — the inner
/// circle the base hypocycloid rolls on.  nullopt otherwise, and always
/// for epicycloids.
std::optional<CircleResult> degenerate_circle(const CycloidSpec& spec, double alpha,
                                              double tol = 1e-12);

}  // namespace isoptica
