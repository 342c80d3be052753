#pragma once

#include <optional>

#include "isoptica/geometry.hpp"

namespace isoptica {

// Centered-trochoid curve families on a unit fixed circle.
//
// Cycloid convention used throughout: the rolling circle has rational
// radius p/q (in lowest terms), and a := q/p is the frequency parameter
// appearing in the parametrizations.  With this convention a curve closes
// after a parameter interval of 2*p*pi and shows q cusps per period
// (astroid: a = 4, p = 1, q = 4 -> period 2*pi, 4 cusps).

/// Exact ratio a = q/p. q is the fixed/rolling radius ratio numerator,
/// p the denominator; the rolling-circle radius is p/q.
class RationalShape {
  public:
    /// Requires p >= 1, q >= 1 and gcd(p, q) = 1.
    RationalShape(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    double a() const { return static_cast<double>(q_) / static_cast<double>(p_); }

  private:
    int p_;
    int q_;
};

enum class CycloidKind { Hypocycloid, Epicycloid };
enum class TrochoidKind { Hypotrochoid, Epitrochoid };

/// A hypo- or epicycloid: point ON the rolling circle.
class CycloidSpec {
  public:
    /// Hypocycloids require p < q and 2p != q (2p = q degenerates to a
    /// diameter segment).  Epicycloids require p <= q; p = q (a = 1) is
    /// the cardioid.
    CycloidSpec(CycloidKind kind, RationalShape shape);

    CycloidKind kind() const { return kind_; }
    const RationalShape& shape() const { return shape_; }
    double a() const { return shape_.a(); }

  private:
    CycloidKind kind_;
    RationalShape shape_;
};

/// A hypo- or epitrochoid: pen rigidly attached to the rolling circle.
/// fixed_radius / rolling_radius / pen_offset are the classical A, B, H.
struct TrochoidSpec {
    TrochoidKind kind = TrochoidKind::Hypotrochoid;
    double fixed_radius = 0.0;    // A
    double rolling_radius = 0.0;  // B
    double pen_offset = 0.0;      // H
};

Point2 eval_hypocycloid(const RationalShape& shape, double t);
Point2 eval_epicycloid(const RationalShape& shape, double t);
Point2 eval_cycloid(const CycloidSpec& spec, double t);

/// Throws std::invalid_argument when rolling_radius == 0 (the frequency
/// ratio (A -+ B)/B is undefined) or the kind does not match.
Point2 eval_hypotrochoid(const TrochoidSpec& spec, double t);
Point2 eval_epitrochoid(const TrochoidSpec& spec, double t);
Point2 eval_trochoid(const TrochoidSpec& spec, double t);

/// Smallest T > 0 with point(t + T) = point(t) for all t.  Equals 2*p*pi.
double closure_period(const CycloidSpec& spec);

/// Number of cusps (zeros of sin(a t / 2)) in one closure period.  Equals q.
int cusp_count(const CycloidSpec& spec);

}  // namespace isoptica
