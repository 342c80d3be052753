#include "isoptica/support.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isoptica {

namespace {

double rate_of(const CycloidSpec& spec) {
    return spec.kind() == CycloidKind::Hypocycloid ? spec.a() - 2.0 : spec.a() + 2.0;
}

}  // namespace

SupportFunction SupportFunction::for_cycloid(const CycloidSpec& spec) {
    return SupportFunction(
        spec.kind() == CycloidKind::Hypocycloid ? Family::Hypo : Family::Epi, spec.a());
}

SupportFunction SupportFunction::constant(double radius) {
    return SupportFunction(Family::Constant, radius);
}

double SupportFunction::value(double u) const {
    switch (family_) {
        case Family::Hypo: {
            const double a = param_;
            return (a - 2.0) / a * std::sin(a / (a - 2.0) * (M_PI / 2.0 - u));
        }
        case Family::Epi: {
            const double a = param_;
            return (a + 2.0) / a * std::sin(a / (a + 2.0) * (M_PI / 2.0 - u));
        }
        case Family::Constant:
            return param_;
    }
    return 0.0;
}

double SupportFunction::derivative(double u) const {
    switch (family_) {
        case Family::Hypo: {
            const double a = param_;
            return -std::cos(a / (a - 2.0) * (M_PI / 2.0 - u));
        }
        case Family::Epi: {
            const double a = param_;
            return -std::cos(a / (a + 2.0) * (M_PI / 2.0 - u));
        }
        case Family::Constant:
            return 0.0;
    }
    return 0.0;
}

SupportFunction support_of(const CycloidSpec& spec) {
    return SupportFunction::for_cycloid(spec);
}

double support_normal_angle(const CycloidSpec& spec, double t) {
    if (spec.kind() == CycloidKind::Hypocycloid) {
        return M_PI / 2.0 - (spec.a() - 2.0) * t / 2.0;
    }
    return M_PI / 2.0 + (spec.a() + 2.0) * t / 2.0;
}

double support_contact_parameter(const CycloidSpec& spec, double u) {
    if (spec.kind() == CycloidKind::Hypocycloid) {
        return 2.0 * (M_PI / 2.0 - u) / (spec.a() - 2.0);
    }
    return 2.0 * (u - M_PI / 2.0) / (spec.a() + 2.0);
}

Point2 reconstruct_curve(const SupportFunction& sf, double u) {
    const double p = sf.value(u);
    const double dp = sf.derivative(u);
    const double cu = std::cos(u);
    const double su = std::sin(u);
    return {p * cu - dp * su, p * su + dp * cu};
}

Point2 isoptic_from_support(const SupportFunction& sf, double alpha, double u) {
    if (!(alpha > 0.0 && alpha < M_PI)) {
        throw std::invalid_argument("viewing angle must satisfy 0 < alpha < pi, got " +
                                    std::to_string(alpha));
    }
    const double sin_alpha = std::sin(alpha);
    const double p = sf.value(u);
    const double c = (-p * std::cos(alpha) + sf.value(u + alpha)) / sin_alpha;
    const double cu = std::cos(u);
    const double su = std::sin(u);
    return {p * cu - c * su, p * su + c * cu};
}

ParamAlignment alignment(const CycloidSpec& spec, double alpha) {
    if (spec.kind() == CycloidKind::Hypocycloid) {
        return {alpha / (spec.a() - 2.0), Orientation::Same};
    }
    return {alpha / (spec.a() + 2.0), Orientation::Reversed};
}

double aligned_support_parameter(const CycloidSpec& spec, const ParamAlignment& align, double t) {
    const double tau =
        align.orientation == Orientation::Same ? t + align.shift : align.shift - t;
    return (M_PI - rate_of(spec) * tau) / 2.0;
}

}  // namespace isoptica
