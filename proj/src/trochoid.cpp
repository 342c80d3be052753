#include "isoptica/trochoid.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace isoptica {

RationalShape::RationalShape(int p, int q) : p_(p), q_(q) {
    if (p < 1 || q < 1) {
        throw std::invalid_argument("RationalShape: p and q must be positive, got p=" +
                                    std::to_string(p) + " q=" + std::to_string(q));
    }
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument("RationalShape: p/q must be in lowest terms, got " +
                                    std::to_string(p) + "/" + std::to_string(q));
    }
}

CycloidSpec::CycloidSpec(CycloidKind kind, RationalShape shape) : kind_(kind), shape_(shape) {
    const int p = shape.p();
    const int q = shape.q();
    if (kind == CycloidKind::Hypocycloid) {
        if (p >= q) {
            throw std::invalid_argument("hypocycloid requires p < q (rolling radius < 1)");
        }
        if (2 * p == q) {
            throw std::invalid_argument("hypocycloid with 2p = q degenerates to a segment");
        }
    } else {
        if (p > q) {
            throw std::invalid_argument("epicycloid requires p <= q");
        }
    }
}

Point2 eval_hypocycloid(const RationalShape& shape, double t) {
    const double a = shape.a();
    return {((a - 1.0) * std::cos(t) + std::cos((a - 1.0) * t)) / a,
            ((a - 1.0) * std::sin(t) - std::sin((a - 1.0) * t)) / a};
}

Point2 eval_epicycloid(const RationalShape& shape, double t) {
    const double a = shape.a();
    return {((a + 1.0) * std::cos(t) - std::cos((a + 1.0) * t)) / a,
            ((a + 1.0) * std::sin(t) - std::sin((a + 1.0) * t)) / a};
}

Point2 eval_cycloid(const CycloidSpec& spec, double t) {
    return spec.kind() == CycloidKind::Hypocycloid ? eval_hypocycloid(spec.shape(), t)
                                                   : eval_epicycloid(spec.shape(), t);
}

namespace {

void check_rolling_radius(const TrochoidSpec& spec, TrochoidKind expected) {
    if (spec.kind != expected) {
        throw std::invalid_argument("trochoid kind mismatch");
    }
    if (spec.rolling_radius == 0.0) {
        throw std::invalid_argument("trochoid rolling radius must be nonzero");
    }
}

}  // namespace

Point2 eval_hypotrochoid(const TrochoidSpec& spec, double t) {
    check_rolling_radius(spec, TrochoidKind::Hypotrochoid);
    const double ab = spec.fixed_radius - spec.rolling_radius;
    const double ratio = ab / spec.rolling_radius;
    return {ab * std::cos(t) + spec.pen_offset * std::cos(ratio * t),
            ab * std::sin(t) - spec.pen_offset * std::sin(ratio * t)};
}

Point2 eval_epitrochoid(const TrochoidSpec& spec, double t) {
    check_rolling_radius(spec, TrochoidKind::Epitrochoid);
    const double ab = spec.fixed_radius + spec.rolling_radius;
    const double ratio = ab / spec.rolling_radius;
    return {ab * std::cos(t) - spec.pen_offset * std::cos(ratio * t),
            ab * std::sin(t) - spec.pen_offset * std::sin(ratio * t)};
}

Point2 eval_trochoid(const TrochoidSpec& spec, double t) {
    return spec.kind == TrochoidKind::Hypotrochoid ? eval_hypotrochoid(spec, t)
                                                   : eval_epitrochoid(spec, t);
}

double closure_period(const CycloidSpec& spec) {
    return 2.0 * M_PI * static_cast<double>(spec.shape().p());
}

int cusp_count(const CycloidSpec& spec) {
    return spec.shape().q();
}

}  // namespace isoptica
