#pragma once

#include <cmath>

namespace isoptica {

/// Cartesian point/vector in fixed-circle units.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Unit direction vector (|u| = 1 up to rounding).
struct Direction2 {
    double ux = 0.0;
    double uy = 0.0;
};

/// How one parametrization runs relative to another.
enum class Orientation { Same, Reversed };

inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator*(double s, const Point2& p) { return {s * p.x, s * p.y}; }

inline double norm(const Point2& p) { return std::hypot(p.x, p.y); }
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }

inline double dot(const Direction2& a, const Direction2& b) { return a.ux * b.ux + a.uy * b.uy; }

}  // namespace isoptica
