// Acceptance suite: runs every gate criterion end to end and prints one
// pass/fail line per criterion.  Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isoptica/render.hpp"
#include "isoptica/support.hpp"
#include "isoptica/validate.hpp"
#include "xml_check.hpp"

using namespace isoptica;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& details) {
    std::printf("[%s] criterion %d %s: %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                details.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// hypo a in {3, 4, 5, 6, 5/2, 7/3}, epi a in {2, 3, 6, 5/2}
std::vector<CycloidSpec> acceptance_specs() {
    return {
        {CycloidKind::Hypocycloid, {1, 3}}, {CycloidKind::Hypocycloid, {1, 4}},
        {CycloidKind::Hypocycloid, {1, 5}}, {CycloidKind::Hypocycloid, {1, 6}},
        {CycloidKind::Hypocycloid, {2, 5}}, {CycloidKind::Hypocycloid, {3, 7}},
        {CycloidKind::Epicycloid, {1, 2}},  {CycloidKind::Epicycloid, {1, 3}},
        {CycloidKind::Epicycloid, {1, 6}},  {CycloidKind::Epicycloid, {2, 5}},
    };
}

const std::vector<std::pair<double, std::string>>& alpha_set() {
    static const std::vector<std::pair<double, std::string>> alphas = {
        {M_PI / 6.0, "pi/6"},        {M_PI / 3.0, "pi/3"},  {M_PI / 2.0, "pi/2"},
        {2.0 * M_PI / 3.0, "2pi/3"}, {3.0 * M_PI / 4.0, "3pi/4"},
    };
    return alphas;
}

std::string spec_name(const CycloidSpec& spec) {
    std::string s = spec.kind() == CycloidKind::Hypocycloid ? "hypo a=" : "epi a=";
    s += std::to_string(spec.shape().q());
    if (spec.shape().p() != 1) s += "/" + std::to_string(spec.shape().p());
    return s;
}

void criterion_1_route_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double worst_closed = 0.0, worst_trochoid = 0.0;
    for (const CycloidSpec& spec : acceptance_specs()) {
        const double period = closure_period(spec);
        for (const auto& [alpha, label] : alpha_set()) {
            const TrochoidSpec trochoid = isoptic_trochoid(spec, alpha).trochoid;
            for (int i = 0; i < 100; ++i) {
                const double t = period * (i + 0.37) / 100.0;
                const Point2 oracle = isoptic_point_oracle(spec, alpha, t);
                worst_closed =
                    std::max(worst_closed, distance(isoptic_point(spec, alpha, t), oracle));
                worst_trochoid =
                    std::max(worst_trochoid, distance(eval_trochoid(trochoid, t), oracle));
            }
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass = worst_closed < 1e-9 && worst_trochoid < 1e-9 && elapsed < 10.0;
    report(1, "route-equivalence grid", pass,
           "max|closed-oracle|=" + fmt(worst_closed) + " max|trochoid-oracle|=" +
               fmt(worst_trochoid) + " (tol 1e-9), runtime " + fmt(elapsed) + "s < 10s");
}

void criterion_2_support_route() {
    double worst = 0.0;
    std::string failing;
    for (const CycloidSpec& spec : acceptance_specs()) {
        const SupportFunction sf = support_of(spec);
        const double period = closure_period(spec);
        for (const auto& [alpha, label] : alpha_set()) {
            const ParamAlignment align = alignment(spec, alpha);
            double cell = 0.0;
            for (int i = 0; i < 100; ++i) {
                const double t = period * (i + 0.71) / 100.0;
                const double u = aligned_support_parameter(spec, align, t);
                cell = std::max(cell, distance(isoptic_from_support(sf, alpha, u),
                                               isoptic_point(spec, alpha, t)));
            }
            if (cell >= 1e-9) {
                failing += " " + spec_name(spec) + " alpha=" + label + " err=" + fmt(cell);
            }
            worst = std::max(worst, cell);
        }
    }
    const bool pass = worst < 1e-9;
    report(2, "support-route equivalence after alignment", pass,
           "max deviation=" + fmt(worst) + " (tol 1e-9)" +
               (failing.empty() ? std::string(", no failing cells") : "; failing cells:" + failing));
}

void criterion_3_viewing_angle() {
    double worst = 0.0;
    for (const CycloidSpec& spec : acceptance_specs()) {
        const double period = closure_period(spec);
        for (const auto& [alpha, label] : alpha_set()) {
            const double phi = phi_for_alpha(spec, alpha);
            const double target = std::min(alpha, M_PI - alpha);
            for (int i = 0; i < 100; ++i) {
                const double t = period * (i + 0.37) / 100.0;
                const Direction2 d1 = tangent_line(spec, t - phi).direction();
                const Direction2 d2 = tangent_line(spec, t + phi).direction();
                const double angle =
                    std::acos(std::clamp(std::abs(dot(d1, d2)), 0.0, 1.0));
                worst = std::max(worst, std::abs(angle - target));
            }
        }
    }
    report(3, "viewing angle min(alpha, pi-alpha) between the defining tangents",
           worst < 1e-9, "max angle error=" + fmt(worst) + " (tol 1e-9)");
}

void criterion_4_angle_identity() {
    const std::vector<CycloidSpec> specs = {
        {CycloidKind::Hypocycloid, {1, 3}}, {CycloidKind::Hypocycloid, {1, 4}},
        {CycloidKind::Hypocycloid, {2, 5}}, {CycloidKind::Epicycloid, {1, 2}},
        {CycloidKind::Epicycloid, {1, 3}},  {CycloidKind::Epicycloid, {1, 6}},
    };
    std::mt19937_64 rng(0x6e1a);
    double worst = 0.0;
    for (const CycloidSpec& spec : specs) {
        std::uniform_real_distribution<double> draw_t(0.0, closure_period(spec));
        std::uniform_real_distribution<double> draw_phi(1e-6, M_PI - 1e-6);
        for (int i = 0; i < 2000; ++i) {
            const double t = draw_t(rng);
            const double phi = draw_phi(rng);
            const double d = dot(tangent_vector(spec, t - phi), tangent_vector(spec, t + phi));
            worst = std::max(worst, std::abs(d - inter_tangent_cos(spec, phi)));
        }
    }
    report(4, "inter-tangent angle identity over 2000 random (t, phi) x 6 curves",
           worst < 1e-12, "sup deviation=" + fmt(worst) + " (tol 1e-12)");
}

void criterion_5_degenerate_circle() {
    bool pass = true;
    std::string details;
    for (int q : {3, 4, 5, 6}) {
        const CycloidSpec spec{CycloidKind::Hypocycloid, {1, q}};
        const double a = spec.a();
        const double astar = (a - 2.0) * M_PI / (a - 1.0);
        const auto circle = degenerate_circle(spec, astar);
        if (!circle) {
            pass = false;
            details += " a=" + std::to_string(q) + ":not-detected";
            continue;
        }
        const int n = 1000;
        const double period = closure_period(spec);
        std::vector<double> radii(n);
        double mean = 0.0;
        for (int i = 0; i < n; ++i) {
            radii[i] = norm(isoptic_point(spec, astar, period * i / n));
            mean += radii[i];
        }
        mean /= n;
        double var = 0.0;
        for (double r : radii) var += (r - mean) * (r - mean);
        const double stddev = std::sqrt(var / n);
        // printed radius formula, with and without the pi factor in the
        // second sine
        const double with_pi =
            (a - 2.0) * std::sin(M_PI / (a - 1.0)) / (a * std::sin((a - 2.0) * M_PI / (a - 1.0)));
        const double without_pi =
            (a - 2.0) * std::sin(M_PI / (a - 1.0)) / (a * std::sin((a - 2.0) / (a - 1.0)));
        const bool with_matches = std::abs(mean - with_pi) < 1e-6;
        const bool without_matches = std::abs(mean - without_pi) < 1e-6;
        if (stddev >= 1e-9 || !with_matches || without_matches) pass = false;
        details += " a=" + std::to_string(q) + ": stddev=" + fmt(stddev) + " radius=" +
                   fmt(mean) + " matches with-pi variant " + fmt(with_pi) +
                   (with_matches ? " (yes)" : " (NO)") + ", without-pi variant " +
                   fmt(without_pi) + (without_matches ? " (yes)" : " (no)");
        if (q == 5) details += " [the a=5, alpha=3pi/4 circle panel]";
    }
    report(5, "degenerate circle at alpha=(a-2)pi/(a-1)", pass, details);
}

void criterion_6_reconstruction() {
    const std::vector<CycloidSpec> specs = {
        {CycloidKind::Hypocycloid, {1, 3}}, {CycloidKind::Hypocycloid, {1, 4}},
        {CycloidKind::Hypocycloid, {2, 5}}, {CycloidKind::Hypocycloid, {3, 7}},
        {CycloidKind::Epicycloid, {1, 1}},  {CycloidKind::Epicycloid, {1, 2}},
        {CycloidKind::Epicycloid, {1, 3}},  {CycloidKind::Epicycloid, {2, 5}},
    };
    double worst = 0.0;
    for (const CycloidSpec& spec : specs) {
        const SupportFunction sf = support_of(spec);
        const double period = closure_period(spec);
        for (int i = 0; i < 1000; ++i) {
            const double t = period * (i + 0.5) / 1000.0;
            const double u = support_normal_angle(spec, t);
            worst = std::max(worst, distance(reconstruct_curve(sf, u), eval_cycloid(spec, t)));
        }
    }
    report(6, "support-function reconstruction (4 curves per family, 1000 samples)",
           worst < 1e-9, "max deviation=" + fmt(worst) + " (tol 1e-9)");
}

void criterion_7_figures() {
    struct Panel {
        CycloidKind kind;
        int p, q;
        double alpha;
        const char* path;
    };
    const std::vector<Panel> panels = {
        {CycloidKind::Hypocycloid, 1, 4, M_PI / 3.0, "fig_hypo_a4_pi3.svg"},
        {CycloidKind::Hypocycloid, 1, 6, 2.0 * M_PI / 3.0, "fig_hypo_a6_2pi3.svg"},
        {CycloidKind::Epicycloid, 1, 3, M_PI / 3.0, "fig_epi_a3_pi3.svg"},
        {CycloidKind::Epicycloid, 1, 6, M_PI / 6.0, "fig_epi_a6_pi6.svg"},
        {CycloidKind::Hypocycloid, 1, 5, 3.0 * M_PI / 4.0, "fig_hypo_a5_3pi4.svg"},
    };
    bool pass = true;
    std::string details;
    for (const Panel& panel : panels) {
        const RenderJob job{CycloidSpec(panel.kind, RationalShape(panel.p, panel.q)),
                            CurveSelector::Isoptic,
                            panel.alpha,
                            2000,
                            OutputFormat::Svg,
                            panel.path};
        std::ostringstream err;
        bool ok = run(job, err) == 0;
        if (ok) {
            std::ifstream in(panel.path, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            const std::string svg = ss.str();
            int polylines = 0;
            for (std::size_t pos = 0; (pos = svg.find("<polyline", pos)) != std::string::npos;
                 pos += 9) {
                ++polylines;
            }
            ok = xml_well_formed(svg) && polylines == 2;
        }
        if (!ok) pass = false;
        details += std::string(" ") + panel.path + (ok ? " ok" : " FAILED");
    }
    report(7, "figure panels rendered as valid SVG with base + isoptic", pass, details);
}

void criterion_8_kernel_invariants() {
    const auto start = std::chrono::steady_clock::now();
    double worst_period = 0.0, worst_special = 0.0, worst_cusp = 0.0, worst_annulus = 0.0;
    bool mirror_exact = true;
    for (const CycloidSpec& spec : acceptance_specs()) {
        const double period = closure_period(spec);
        const double a = spec.a();
        const bool hypo = spec.kind() == CycloidKind::Hypocycloid;
        for (int i = 0; i < 100; ++i) {
            const double t = -4.0 + 0.21 * i;
            const Point2 p = eval_cycloid(spec, t);
            worst_period = std::max(worst_period, distance(eval_cycloid(spec, t + period), p));
            const Point2 m = eval_cycloid(spec, -t);
            if (m.x != p.x || m.y != -p.y) mirror_exact = false;
            const double r = norm(p);
            const double lo = hypo ? (a - 2.0) / a : 1.0;
            const double hi = hypo ? 1.0 : (a + 2.0) / a;
            worst_annulus = std::max({worst_annulus, lo - r, r - hi});

            TrochoidSpec same_pen;
            same_pen.kind = hypo ? TrochoidKind::Hypotrochoid : TrochoidKind::Epitrochoid;
            same_pen.fixed_radius = 1.0;
            same_pen.rolling_radius = 1.0 / a;
            same_pen.pen_offset = 1.0 / a;
            worst_special = std::max(worst_special, distance(eval_trochoid(same_pen, t), p));
        }
        for (int k = 0; k < spec.shape().q(); ++k) {
            const double cusp = 2.0 * M_PI * k * spec.shape().p() / spec.shape().q();
            worst_cusp = std::max(worst_cusp, std::abs(norm(eval_cycloid(spec, cusp)) - 1.0));
        }
    }
    const double elapsed = seconds_since(start);
    const bool pass = worst_period < 1e-9 && mirror_exact && worst_annulus < 1e-12 &&
                      worst_special < 1e-12 && worst_cusp < 1e-12 && elapsed < 5.0;
    report(8, "curve-kernel periodicity/symmetry suite", pass,
           "periodicity=" + fmt(worst_period) + " (tol 1e-9), mirror " +
               (mirror_exact ? "exact" : "NOT exact") + ", annulus overshoot=" +
               fmt(worst_annulus) + ", trochoid-specialization=" + fmt(worst_special) +
               ", cusp-on-circle=" + fmt(worst_cusp) + " (tol 1e-12), runtime " + fmt(elapsed) +
               "s < 5s");
}

}  // namespace

int main() {
    criterion_1_route_equivalence();
    criterion_2_support_route();
    criterion_3_viewing_angle();
    criterion_4_angle_identity();
    criterion_5_degenerate_circle();
    criterion_6_reconstruction();
    criterion_7_figures();
    criterion_8_kernel_invariants();

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
