#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isoptica/isoptic.hpp"
#include "isoptica/support.hpp"

namespace isoptica {

enum class CurveSelector { Base, Isoptic, Trochoid, CircleCheck };
enum class OutputFormat { Svg, Csv, Json };

/// One sampling/output request.  alpha must be present for every
/// selector except Base, and absent for Base.  Empty out_path writes to
/// stdout.
struct RenderJob {
    CycloidSpec spec;
    CurveSelector curve = CurveSelector::Base;
    std::optional<double> alpha;
    int samples = 2000;
    OutputFormat format = OutputFormat::Svg;
    std::string out_path;
};

struct Sample {
    double t;
    Point2 point;
};

/// samples points with t uniform over one closure period, endpoints
/// included (so closed curves visually close).
std::vector<Sample> sample_base(const CycloidSpec& spec, int samples);
std::vector<Sample> sample_isoptic(const CycloidSpec& spec, double alpha, int samples);
/// Same curve as sample_isoptic but evaluated through the trochoid
/// classification.
std::vector<Sample> sample_trochoid_route(const CycloidSpec& spec, double alpha, int samples);

/// Accepts plain radians ("1.0471", "0.5") and symbolic fractions of pi
/// ("pi", "pi/3", "2pi/3", "0.5pi").  Symbolic values are computed as
/// coef * pi / den exactly.  Throws std::invalid_argument on anything
/// else.
double parse_angle(const std::string& text);

/// Header `t,x,y`, one row per sample, 17 significant digits.
std::string to_csv(const std::vector<Sample>& samples);

/// Object with `base`, and for isoptic-family jobs `alpha`,
/// `trochoid:{A,B,H}`, `alignment:{shift,orientation}`, optional
/// `circle:{radius}` for the degenerate case, and `points:[[t,x,y],...]`.
std::string to_json(const RenderJob& job, const std::vector<Sample>& points);

/// Standalone SVG with the base curve and, when given, the isoptic
/// overlaid; viewBox encloses everything with a margin.
std::string to_svg(const std::vector<Sample>& base, const std::vector<Sample>* overlay);

/// Executes the job: samples, formats, writes.  Returns 0 on success;
/// on any error writes a diagnostic to `diagnostics` and returns 1.
int run(const RenderJob& job, std::ostream& diagnostics);

}  // namespace isoptica
