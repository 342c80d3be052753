#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "isoptica/isoptic.hpp"
#include "isoptica/support.hpp"

namespace isoptica {

/// One (curve, viewing angle) cell of the cross-validation grid.
struct GridCell {
    CycloidSpec spec;
    double alpha;
    std::string alpha_label;  // how alpha is written in reports, e.g. "pi/3"
};

struct ValidationConfig {
    std::vector<GridCell> cells;  // empty -> default_grid()
    int samples = 100;
    double tolerance = 1e-9;
    std::uint64_t seed = 0x15071904u;
};

/// Worst-case deviations across the sampled parameters of one cell.
struct CellReport {
    std::string id;
    double closed_vs_oracle = 0.0;
    double trochoid_vs_oracle = 0.0;
    double support_vs_closed = 0.0;
    double line_angle_error = 0.0;      // vs min(alpha, pi - alpha)
    double oriented_angle_error = 0.0;  // vs alpha
    double max_error() const;
    bool ok(double tolerance) const { return max_error() < tolerance; }
};

struct ValidationReport {
    std::vector<CellReport> cells;
    double max_error = 0.0;
    bool all_ok(double tolerance) const { return max_error < tolerance; }
};

/// hypo a in {3, 4, 5, 6, 5/2, 7/3} x epi a in {1, 2, 3, 6, 5/2},
/// alpha in {pi/6, pi/3, pi/2, 2pi/3, 3pi/4}.
std::vector<GridCell> default_grid();

std::string cell_id(const GridCell& cell);

/// Runs every route over seeded t samples in one closure period and
/// records the worst deviations per cell.
ValidationReport run_validation(const ValidationConfig& config);

/// One line per cell plus a summary line; matches the CLI `validate`
/// output.
void write_report(std::ostream& os, const ValidationReport& report, double tolerance);

}  // namespace isoptica
