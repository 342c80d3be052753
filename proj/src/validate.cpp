#include "isoptica/validate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

namespace isoptica {

double CellReport::max_error() const {
    return std::max({closed_vs_oracle, trochoid_vs_oracle, support_vs_closed, line_angle_error,
                     oriented_angle_error});
}

std::vector<GridCell> default_grid() {
    struct Entry {
        CycloidKind kind;
        int p, q;
    };
    const std::vector<Entry> curves = {
        {CycloidKind::Hypocycloid, 1, 3}, {CycloidKind::Hypocycloid, 1, 4},
        {CycloidKind::Hypocycloid, 1, 5}, {CycloidKind::Hypocycloid, 1, 6},
        {CycloidKind::Hypocycloid, 2, 5}, {CycloidKind::Hypocycloid, 3, 7},
        {CycloidKind::Epicycloid, 1, 1},  {CycloidKind::Epicycloid, 1, 2},
        {CycloidKind::Epicycloid, 1, 3},  {CycloidKind::Epicycloid, 1, 6},
        {CycloidKind::Epicycloid, 2, 5},
    };
    const std::vector<std::pair<double, std::string>> alphas = {
        {M_PI / 6.0, "pi/6"},       {M_PI / 3.0, "pi/3"},       {M_PI / 2.0, "pi/2"},
        {2.0 * M_PI / 3.0, "2pi/3"}, {3.0 * M_PI / 4.0, "3pi/4"},
    };

    std::vector<GridCell> cells;
    for (const auto& c : curves) {
        const CycloidSpec spec(c.kind, RationalShape(c.p, c.q));
        for (const auto& [alpha, label] : alphas) {
            cells.push_back({spec, alpha, label});
        }
    }
    return cells;
}

std::string cell_id(const GridCell& cell) {
    std::string id = cell.spec.kind() == CycloidKind::Hypocycloid ? "hypo" : "epi";
    id += " a=" + std::to_string(cell.spec.shape().q());
    if (cell.spec.shape().p() != 1) {
        id += "/" + std::to_string(cell.spec.shape().p());
    }
    id += " alpha=" + (cell.alpha_label.empty() ? std::to_string(cell.alpha) : cell.alpha_label);
    return id;
}

ValidationReport run_validation(const ValidationConfig& config) {
    const std::vector<GridCell> cells = config.cells.empty() ? default_grid() : config.cells;

    ValidationReport report;
    std::mt19937_64 rng(config.seed);

    for (const GridCell& cell : cells) {
        const CycloidSpec& spec = cell.spec;
        const double alpha = cell.alpha;
        const double period = closure_period(spec);
        std::uniform_real_distribution<double> draw_t(0.0, period);

        const IsopticResult classified = isoptic_trochoid(spec, alpha);
        const SupportFunction sf = support_of(spec);
        const ParamAlignment align = alignment(spec, alpha);
        const double phi = phi_for_alpha(spec, alpha);
        const double line_target = std::min(alpha, M_PI - alpha);

        CellReport cr;
        cr.id = cell_id(cell);
        for (int i = 0; i < config.samples; ++i) {
            const double t = draw_t(rng);

            const Point2 oracle = isoptic_point_oracle(spec, alpha, t);
            const Point2 closed = isoptic_point(spec, alpha, t);
            const Point2 tro = eval_trochoid(classified.trochoid, t);
            const Point2 sup =
                isoptic_from_support(sf, alpha, aligned_support_parameter(spec, align, t));

            cr.closed_vs_oracle = std::max(cr.closed_vs_oracle, distance(closed, oracle));
            cr.trochoid_vs_oracle = std::max(cr.trochoid_vs_oracle, distance(tro, oracle));
            cr.support_vs_closed = std::max(cr.support_vs_closed, distance(sup, closed));

            const double d =
                dot(tangent_vector(spec, t - phi), tangent_vector(spec, t + phi));
            const double oriented = std::acos(std::clamp(d, -1.0, 1.0));
            const double line = std::acos(std::clamp(std::abs(d), 0.0, 1.0));
            cr.oriented_angle_error = std::max(cr.oriented_angle_error, std::abs(oriented - alpha));
            cr.line_angle_error = std::max(cr.line_angle_error, std::abs(line - line_target));
        }
        report.max_error = std::max(report.max_error, cr.max_error());
        report.cells.push_back(std::move(cr));
    }
    return report;
}

void write_report(std::ostream& os, const ValidationReport& report, double tolerance) {
    for (const CellReport& cr : report.cells) {
        os << (cr.ok(tolerance) ? "ok   " : "FAIL ") << cr.id
           << "  closed-oracle=" << cr.closed_vs_oracle
           << "  trochoid-oracle=" << cr.trochoid_vs_oracle
           << "  support-closed=" << cr.support_vs_closed
           << "  line-angle=" << cr.line_angle_error
           << "  oriented-angle=" << cr.oriented_angle_error << "\n";
    }
    os << (report.all_ok(tolerance) ? "PASS" : "FAIL") << " max error " << report.max_error
       << " (tolerance " << tolerance << ", " << report.cells.size() << " cells)\n";
}

}  // namespace isoptica
