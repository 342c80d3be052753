#include "isoptica/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace isoptica {

namespace {

std::vector<Sample> sample_with(const CycloidSpec& spec, int samples,
                                const std::function<Point2(double)>& eval) {
    if (samples < 2) {
        throw std::invalid_argument("samples must be >= 2");
    }
    const double period = closure_period(spec);
    std::vector<Sample> out;
    out.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = period * static_cast<double>(i) / static_cast<double>(samples - 1);
        out.push_back({t, eval(t)});
    }
    return out;
}

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace

std::vector<Sample> sample_base(const CycloidSpec& spec, int samples) {
    return sample_with(spec, samples, [&](double t) { return eval_cycloid(spec, t); });
}

std::vector<Sample> sample_isoptic(const CycloidSpec& spec, double alpha, int samples) {
    return sample_with(spec, samples, [&](double t) { return isoptic_point(spec, alpha, t); });
}

std::vector<Sample> sample_trochoid_route(const CycloidSpec& spec, double alpha, int samples) {
    const TrochoidSpec trochoid = isoptic_trochoid(spec, alpha).trochoid;
    return sample_with(spec, samples, [&](double t) { return eval_trochoid(trochoid, t); });
}

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) {
        throw std::invalid_argument("empty angle");
    }

    const auto parse_number = [](const std::string& part) {
        std::size_t used = 0;
        double v = std::stod(part, &used);
        if (used != part.size()) {
            throw std::invalid_argument("trailing characters in angle: '" + part + "'");
        }
        return v;
    };

    double value = 0.0;
    const std::size_t pos = s.find("pi");
    if (pos != std::string::npos) {
        const std::string pre = s.substr(0, pos);
        const std::string post = s.substr(pos + 2);
        double coef = 1.0;
        if (pre == "-") {
            coef = -1.0;
        } else if (!pre.empty()) {
            coef = parse_number(pre);
        }
        double den = 1.0;
        if (!post.empty()) {
            if (post[0] != '/') {
                throw std::invalid_argument("cannot parse angle '" + text + "'");
            }
            den = parse_number(post.substr(1));
        }
        value = coef * M_PI / den;
    } else {
        value = parse_number(s);
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("angle is not finite: '" + text + "'");
    }
    return value;
}

std::string to_csv(const std::vector<Sample>& samples) {
    std::string out = "t,x,y\n";
    for (const Sample& s : samples) {
        out += format_double("%.17g", s.t);
        out += ',';
        out += format_double("%.17g", s.point.x);
        out += ',';
        out += format_double("%.17g", s.point.y);
        out += '\n';
    }
    return out;
}

std::string to_json(const RenderJob& job, const std::vector<Sample>& points) {
    nlohmann::ordered_json doc;
    doc["base"] = {
        {"kind", job.spec.kind() == CycloidKind::Hypocycloid ? "hypo" : "epi"},
        {"p", job.spec.shape().p()},
        {"q", job.spec.shape().q()},
        {"a", job.spec.a()},
    };
    if (job.alpha) {
        const double alpha = *job.alpha;
        doc["alpha"] = alpha;
        const IsopticResult result = isoptic_trochoid(job.spec, alpha);
        doc["trochoid"] = {
            {"A", result.trochoid.fixed_radius},
            {"B", result.trochoid.rolling_radius},
            {"H", result.trochoid.pen_offset},
        };
        const ParamAlignment align = alignment(job.spec, alpha);
        doc["alignment"] = {
            {"shift", align.shift},
            {"orientation", align.orientation == Orientation::Same ? "same" : "reversed"},
        };
        if (const auto circle = degenerate_circle(job.spec, alpha)) {
            doc["circle"] = {{"radius", circle->radius}};
        }
    }
    auto& pts = doc["points"] = nlohmann::ordered_json::array();
    for (const Sample& s : points) {
        pts.push_back({s.t, s.point.x, s.point.y});
    }
    return doc.dump(2) + "\n";
}

std::string to_svg(const std::vector<Sample>& base, const std::vector<Sample>* overlay) {
    double min_x = base.front().point.x, max_x = min_x;
    double min_y = -base.front().point.y, max_y = min_y;
    const auto grow = [&](const std::vector<Sample>& samples) {
        for (const Sample& s : samples) {
            min_x = std::min(min_x, s.point.x);
            max_x = std::max(max_x, s.point.x);
            min_y = std::min(min_y, -s.point.y);  // svg y axis points down
            max_y = std::max(max_y, -s.point.y);
        }
    };
    grow(base);
    if (overlay) grow(*overlay);

    const double extent = std::max({max_x - min_x, max_y - min_y, 1e-6});
    const double margin = 0.08 * extent;
    const double vx = min_x - margin;
    const double vy = min_y - margin;
    const double vw = (max_x - min_x) + 2.0 * margin;
    const double vh = (max_y - min_y) + 2.0 * margin;

    const auto polyline = [&](const std::vector<Sample>& samples, const char* color) {
        std::string el = "  <polyline fill=\"none\" stroke=\"";
        el += color;
        el += "\" stroke-width=\"" + format_double("%.6g", 0.004 * extent) + "\" points=\"";
        for (const Sample& s : samples) {
            el += format_double("%.9g", s.point.x);
            el += ',';
            el += format_double("%.9g", -s.point.y);
            el += ' ';
        }
        if (!samples.empty()) el.pop_back();
        el += "\"/>\n";
        return el;
    };

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"";
    svg += format_double("%.9g", vx);
    svg += ' ';
    svg += format_double("%.9g", vy);
    svg += ' ';
    svg += format_double("%.9g", vw);
    svg += ' ';
    svg += format_double("%.9g", vh);
    svg += "\">\n";
    svg += polyline(base, "#1f77b4");
    if (overlay) svg += polyline(*overlay, "#d62728");
    svg += "</svg>\n";
    return svg;
}

int run(const RenderJob& job, std::ostream& diagnostics) {
    try {
        if (job.samples < 2) {
            throw std::invalid_argument("samples must be >= 2");
        }
        if (job.curve == CurveSelector::Base) {
            if (job.alpha) {
                throw std::invalid_argument("--alpha is only valid for isoptic curves");
            }
        } else if (!job.alpha) {
            throw std::invalid_argument("this curve selection requires --alpha");
        }
        if (job.curve == CurveSelector::CircleCheck &&
            !degenerate_circle(job.spec, *job.alpha)) {
            throw std::invalid_argument(
                "circle-check: alpha is not the degenerate angle (a-2)pi/(a-1)");
        }

        const std::vector<Sample> base = sample_base(job.spec, job.samples);
        std::vector<Sample> curve;
        switch (job.curve) {
            case CurveSelector::Base:
                break;
            case CurveSelector::Trochoid:
                curve = sample_trochoid_route(job.spec, *job.alpha, job.samples);
                break;
            case CurveSelector::Isoptic:
            case CurveSelector::CircleCheck:
                curve = sample_isoptic(job.spec, *job.alpha, job.samples);
                break;
        }
        const std::vector<Sample>& rows = job.curve == CurveSelector::Base ? base : curve;

        std::string document;
        switch (job.format) {
            case OutputFormat::Csv:
                document = to_csv(rows);
                break;
            case OutputFormat::Json:
                document = to_json(job, rows);
                break;
            case OutputFormat::Svg:
                document = to_svg(base, job.curve == CurveSelector::Base ? nullptr : &curve);
                break;
        }

        if (job.out_path.empty()) {
            std::cout << document;
            return 0;
        }
        std::ofstream out(job.out_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output path '" + job.out_path + "'");
        }
        out << document;
        out.close();
        if (!out) {
            throw std::runtime_error("failed writing '" + job.out_path + "'");
        }
        return 0;
    } catch (const std::exception& e) {
        diagnostics << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace isoptica
