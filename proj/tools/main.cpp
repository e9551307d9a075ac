#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "circim/classify.hpp"
#include "circim/construct.hpp"
#include "circim/errors.hpp"
#include "circim/intersect.hpp"
#include "circim/json_io.hpp"
#include "circim/laurent.hpp"
#include "circim/numeric.hpp"
#include "circim/resultant.hpp"

namespace {

using circim::BigRational;
using circim::GaussianRational;
using circim::LaurentPolynomial;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw circim::input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw circim::input_error("cannot write " + path);
    out << text;
}

LaurentPolynomial load_poly(const std::string& path) {
    return circim::normalize_orientation(circim::laurent_from_json(read_file(path)));
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---------------------------------------------------------------------------

int cmd_compute_h(const std::string& input, const std::string& output) {
    const LaurentPolynomial p = load_poly(input);
    const circim::HPair hp = circim::compute_h(p);
    const auto hd = hp.h.degrees();
    const auto cd = hp.hC.degrees();
    ordered_json j{{"degrees", ordered_json{{"h_total", hd.total}, {"hC_w", cd.first}, {"hC_wbar", cd.second}}},
                   {"h", ordered_json::parse(circim::to_json(hp.h))},
                   {"hC", ordered_json::parse(circim::to_json(hp.hC))}};
    write_output(output, j.dump(2) + "\n");
    return 0;
}

int cmd_classify(const std::string& input, double angle_tol, const std::string& output) {
    const LaurentPolynomial p = load_poly(input);
    write_output(output, circim::to_json(circim::classify(p, angle_tol)));
    return 0;
}

int cmd_verify(const std::string& input, int rational, int samples, const std::string& output) {
    if (rational < 1) throw circim::input_error("--rational must be at least 1");
    if (samples < 16) throw circim::input_error("--samples must be at least 16");
    const LaurentPolynomial p = load_poly(input);
    const circim::HPair hp = circim::compute_h(p);

    int exact = 0;
    for (int j = 0; j < rational; ++j) {
        // Distinct parameters: odd numerators over a fixed denominator.
        const BigRational t(2 * j - rational + 1, rational);
        const GaussianRational z = circim::circle_point(t);
        const GaussianRational w = p.eval(z);
        if (hp.h.eval(GaussianRational(w.re), GaussianRational(w.im)).is_zero()) ++exact;
    }

    const circim::CurveSample s = circim::sample_curve(p, samples);
    double residual = 0.0;
    for (const auto& [x, y] : s.points) residual = std::max(residual, std::abs(hp.h.eval(x, y)));
    const double scale = std::max(1.0, hp.h.coefficient_scale());

    std::ostringstream out;
    out << exact << "/" << rational << " exact zeros\n";
    out << "max float residual " << fmt(residual) << " over " << samples
        << " samples (coefficient scale " << fmt(scale) << ")\n";
    write_output(output, out.str());
    return (exact == rational && residual < 1e-9 * scale) ? 0 : 4;
}

int cmd_bound(const std::string& p_path, const std::string& q_path, bool no_count,
              const std::string& output) {
    const circim::BoundReport rep = circim::analyze_pair(load_poly(p_path), load_poly(q_path), !no_count);
    write_output(output, circim::to_json(rep));
    return 0;
}

int cmd_intersections(const std::string& p_path, const std::string& q_path, int grid, double tol,
                      const std::string& output) {
    const circim::IntersectionCount ic =
        circim::count_intersections(load_poly(p_path), load_poly(q_path), grid, tol);
    ordered_json points = ordered_json::array();
    for (const auto& [x, y] : ic.points) points.push_back(ordered_json::array({x, y}));
    ordered_json j{{"count", ic.count}, {"overlap_suspected", ic.overlap_suspected}, {"points", points}};
    write_output(output, j.dump(2) + "\n");
    return 0;
}

int cmd_construct(int points, const std::string& anchors_path, const std::string& output) {
    circim::SingletonSpec spec;
    if (!anchors_path.empty()) {
        ordered_json j;
        try {
            j = ordered_json::parse(read_file(anchors_path));
        } catch (const nlohmann::json::exception& e) {
            throw circim::input_error(std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("anchors") || !j["anchors"].is_array())
            throw circim::input_error("anchors JSON must be an object with an \"anchors\" array");
        for (const auto& item : j["anchors"]) {
            if (!item.is_object() || !item.contains("re") || !item.contains("im"))
                throw circim::input_error("each anchor needs \"re\" and \"im\" fields");
            spec.anchors.emplace_back(BigRational::from_string(item["re"].get<std::string>()),
                                      BigRational::from_string(item["im"].get<std::string>()));
        }
    } else {
        if (points < 1) throw circim::input_error("--points must be at least 1 (or pass --anchors)");
        // Default spread: distinct moduli k/(N+1) along distinct rational
        // circle directions.
        for (int k = 1; k <= points; ++k) {
            const GaussianRational dir = circim::circle_point(BigRational(k));
            spec.anchors.push_back(dir * GaussianRational(BigRational(k, points + 1)));
        }
    }

    const circim::SingletonExample ex = circim::build_singleton_example(spec);
    ordered_json j{{"N", static_cast<int>(spec.anchors.size())},
                   {"M", ex.M.str()},
                   {"certified_min_modulus", ex.certified_min_modulus},
                   {"p", ordered_json::parse(circim::to_json(ex.p))}};
    write_output(output, j.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// Plotting.

struct Bbox {
    double x0, y0, x1, y1;
};

Bbox auto_bbox(const circim::CurveSample& s) {
    Bbox b{s.points[0].first, s.points[0].second, s.points[0].first, s.points[0].second};
    for (const auto& [x, y] : s.points) {
        b.x0 = std::min(b.x0, x);
        b.y0 = std::min(b.y0, y);
        b.x1 = std::max(b.x1, x);
        b.y1 = std::max(b.y1, y);
    }
    double px = 0.25 * (b.x1 - b.x0);
    double py = 0.25 * (b.y1 - b.y0);
    if (px < 1e-6) px = 1.0;
    if (py < 1e-6) py = 1.0;
    return {b.x0 - px, b.y0 - py, b.x1 + px, b.y1 + py};
}

Bbox parse_bbox(const std::string& text) {
    Bbox b;
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &b.x0, &b.y0, &b.x1, &b.y1, &extra) != 4 ||
        !(b.x1 > b.x0) || !(b.y1 > b.y0))
        throw circim::input_error("--bbox expects x0,y0,x1,y1 with positive extent");
    return b;
}

int cmd_plot(const std::string& input, const std::string& output, int resolution,
             const std::string& bbox_text, int samples) {
    const LaurentPolynomial p = load_poly(input);
    const circim::HPair hp = circim::compute_h(p);
    const circim::CurveSample curve = circim::sample_curve(p, samples);
    const Bbox box = bbox_text.empty() ? auto_bbox(curve) : parse_bbox(bbox_text);

    const auto polylines =
        circim::contour(hp.h, {box.x0, box.y0, box.x1, box.y1}, resolution);
    const auto gaps = circim::find_gap_candidates(p, hp.h);

    const double W = 800, H = 800;
    const auto X = [&](double x) { return (x - box.x0) / (box.x1 - box.x0) * W; };
    const auto Y = [&](double y) { return (box.y1 - y) / (box.y1 - box.y0) * H; };
    const auto pt = [&](double x, double y) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f,%.2f", X(x), Y(y));
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    svg << "<!-- circim 0.1.0 -->\n";
    svg << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
    svg << "<g fill=\"none\" stroke=\"#6b7280\" stroke-width=\"1.2\">\n";
    for (const auto& line : polylines) {
        svg << "<polyline points=\"";
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) svg << " ";
            svg << pt(line[i].first, line[i].second);
        }
        svg << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<g fill=\"none\" stroke=\"#dc2626\" stroke-width=\"2\">\n<polyline points=\"";
    for (size_t i = 0; i <= curve.points.size(); ++i) {
        if (i) svg << " ";
        const auto& [x, y] = curve.points[i % curve.points.size()];  // close the loop
        svg << pt(x, y);
    }
    svg << "\"/>\n</g>\n";
    svg << "<g fill=\"#16a34a\">\n";
    for (const auto& w : gaps)
        if (w.real() >= box.x0 && w.real() <= box.x1 && w.imag() >= box.y0 && w.imag() <= box.y1) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\"/>\n",
                          X(w.real()), Y(w.imag()));
            svg << buf;
        }
    svg << "</g>\n</svg>\n";
    write_output(output, svg.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact real-algebraic envelopes of circle images of Laurent polynomials"};
    app.require_subcommand(1);

    std::string in_path, out_path, p_path, q_path, bbox_text, anchors_path;
    double angle_tol = 1e-9, tol = 0.05;
    int rational = 20, samples = 256, grid = 256, resolution = 256, points = 0, plot_samples = 1024;
    bool no_count = false;

    auto* compute = app.add_subcommand("compute-h", "Vanishing polynomial of the circle image");
    compute->add_option("input", in_path, "Laurent polynomial JSON")->required();
    compute->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* classify = app.add_subcommand("classify", "Finite/infinite status of the gap set");
    classify->add_option("input", in_path, "Laurent polynomial JSON")->required();
    classify->add_option("--angle-tol", angle_tol, "line-coincidence tolerance in radians");
    classify->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Exact and float vanishing checks on the circle");
    verify->add_option("input", in_path, "Laurent polynomial JSON")->required();
    verify->add_option("--rational", rational, "number of exact rational circle points");
    verify->add_option("--samples", samples, "number of float samples");
    verify->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* bound = app.add_subcommand("bound", "Intersection bound report for two polynomials");
    bound->add_option("--p", p_path, "first polynomial JSON")->required();
    bound->add_option("--q", q_path, "second polynomial JSON")->required();
    bound->add_flag("--no-count", no_count, "skip the numeric intersection count");
    bound->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* inter = app.add_subcommand("intersections", "Numeric intersection count of two circle images");
    inter->add_option("--p", p_path, "first polynomial JSON")->required();
    inter->add_option("--q", q_path, "second polynomial JSON")->required();
    inter->add_option("--grid", grid, "torus grid resolution (>= 64)");
    inter->add_option("--tol", tol, "hit tolerance in image space");
    inter->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* construct = app.add_subcommand("construct", "Build a polynomial with prescribed gap points");
    construct->add_option("--points", points, "number of gap points 1..N with default anchors");
    construct->add_option("--anchors", anchors_path, "JSON file with explicit anchors");
    construct->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* plot = app.add_subcommand("plot", "SVG of the algebraic set, the circle image, and gap points");
    plot->add_option("input", in_path, "Laurent polynomial JSON")->required();
    plot->add_option("-o,--output", out_path, "SVG output file (default stdout)");
    plot->add_option("--resolution", resolution, "contour grid resolution (>= 32)");
    plot->add_option("--bbox", bbox_text, "x0,y0,x1,y1 (default: curve box + 25%)");
    plot->add_option("--samples", plot_samples, "curve polyline samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute_h(in_path, out_path);
        if (classify->parsed()) return cmd_classify(in_path, angle_tol, out_path);
        if (verify->parsed()) return cmd_verify(in_path, rational, samples, out_path);
        if (bound->parsed()) return cmd_bound(p_path, q_path, no_count, out_path);
        if (inter->parsed()) return cmd_intersections(p_path, q_path, grid, tol, out_path);
        if (construct->parsed()) return cmd_construct(points, anchors_path, out_path);
        if (plot->parsed()) return cmd_plot(in_path, out_path, resolution, bbox_text, plot_samples);
    } catch (const circim::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const circim::error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
