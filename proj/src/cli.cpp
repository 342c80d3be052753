#include "isoptica/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "isoptica/render.hpp"
#include "isoptica/validate.hpp"

namespace isoptica {

namespace {

CycloidSpec make_spec(const std::string& kind, int p, int q) {
    if (kind != "hypo" && kind != "epi") {
        throw std::invalid_argument("--kind must be 'hypo' or 'epi'");
    }
    return CycloidSpec(kind == "hypo" ? CycloidKind::Hypocycloid : CycloidKind::Epicycloid,
                       RationalShape(p, q));
}

double default_tolerance() {
    if (const char* env = std::getenv("ISOPTICA_TOLERANCE")) {
        return std::stod(env);
    }
    return 1e-9;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"isoptic curves of hypocycloids and epicycloids"};
    app.require_subcommand(1);

    std::string kind = "hypo";
    int p = 1;
    int q = 4;
    std::string alpha_text;
    int samples = 2000;

    auto* render_cmd =
        app.add_subcommand("render", "sample a curve or isoptic and write svg/csv/json");
    std::string format = "svg";
    std::string curve = "";
    std::string out_path;
    render_cmd->add_option("--kind", kind, "curve family: hypo | epi")->required();
    render_cmd->add_option("--p", p, "denominator of a (rolling radius numerator)")->required();
    render_cmd->add_option("--q", q, "numerator of a (rolling radius denominator)")->required();
    render_cmd->add_option("--alpha", alpha_text, "viewing angle, radians or 'pi/3' style");
    render_cmd->add_option("--samples", samples, "number of samples (default 2000)");
    render_cmd->add_option("--format", format, "svg | csv | json (default svg)")
        ->check(CLI::IsMember({"svg", "csv", "json"}));
    render_cmd->add_option("--curve", curve,
                           "base | isoptic | trochoid | circle-check "
                           "(default: isoptic when --alpha is given, base otherwise)")
        ->check(CLI::IsMember({"base", "isoptic", "trochoid", "circle-check"}));
    render_cmd->add_option("--out", out_path, "output path (default: stdout)");

    auto* validate_cmd =
        app.add_subcommand("validate", "run the route cross-validation grid");
    double tolerance = -1.0;
    std::uint64_t seed = ValidationConfig{}.seed;
    int vsamples = 100;
    bool single_cell = false;
    validate_cmd->add_option("--samples", vsamples, "t samples per cell (default 100)");
    validate_cmd->add_option("--tolerance", tolerance,
                             "max allowed deviation (default 1e-9 or ISOPTICA_TOLERANCE)");
    validate_cmd->add_option("--seed", seed, "rng seed for the t samples");
    auto* vk = validate_cmd->add_option("--kind", kind, "restrict to one cell: curve family");
    validate_cmd->add_option("--p", p, "single cell: p")->needs(vk);
    validate_cmd->add_option("--q", q, "single cell: q")->needs(vk);
    validate_cmd->add_option("--alpha", alpha_text, "single cell: viewing angle")->needs(vk);
    validate_cmd->callback([&] { single_cell = vk->count() > 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (render_cmd->parsed()) {
            RenderJob job{make_spec(kind, p, q), CurveSelector::Base, std::nullopt,
                          2000,                  OutputFormat::Svg,   {}};
            if (!alpha_text.empty()) {
                job.alpha = parse_angle(alpha_text);
            }
            if (curve.empty()) {
                curve = job.alpha ? "isoptic" : "base";
            }
            job.curve = curve == "base"      ? CurveSelector::Base
                        : curve == "isoptic" ? CurveSelector::Isoptic
                        : curve == "trochoid" ? CurveSelector::Trochoid
                                              : CurveSelector::CircleCheck;
            job.samples = samples;
            job.format = format == "svg" ? OutputFormat::Svg
                         : format == "csv" ? OutputFormat::Csv
                                           : OutputFormat::Json;
            job.out_path = out_path;
            return run(job, std::cerr);
        }

        // validate
        ValidationConfig config;
        config.samples = vsamples;
        config.seed = seed;
        config.tolerance = tolerance > 0.0 ? tolerance : default_tolerance();
        if (single_cell) {
            if (alpha_text.empty()) {
                throw std::invalid_argument("single-cell validation requires --alpha");
            }
            config.cells.push_back(
                {make_spec(kind, p, q), parse_angle(alpha_text), alpha_text});
        }
        const ValidationReport report = run_validation(config);
        write_report(std::cout, report, config.tolerance);
        return report.all_ok(config.tolerance) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace isoptica
