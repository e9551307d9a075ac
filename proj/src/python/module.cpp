#include <json.hpp>
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "circim/classify.hpp"
#include "circim/construct.hpp"
#include "circim/errors.hpp"
#include "circim/intersect.hpp"
#include "circim/json_io.hpp"
#include "circim/numeric.hpp"
#include "circim/resultant.hpp"

namespace py = pybind11;

namespace {

circim::LaurentPolynomial parse(const std::string& json) {
    return circim::normalize_orientation(circim::laurent_from_json(json));
}

std::string compute_h_json(const std::string& p_json) {
    return circim::to_json(circim::compute_h(parse(p_json)).h);
}

std::string compute_hc_json(const std::string& p_json) {
    return circim::to_json(circim::compute_h(parse(p_json)).hC);
}

std::string classify_json(const std::string& p_json, double angle_tol) {
    return circim::to_json(circim::classify(parse(p_json), angle_tol));
}

bool verify_extra_point_json(const std::string& p_json, std::complex<double> w, double delta,
                             int N) {
    const circim::LaurentPolynomial p = parse(p_json);
    return circim::verify_extra_point(p, circim::compute_h(p).h, w, delta, N);
}

std::string bound_json(const std::string& p_json, const std::string& q_json, bool with_count) {
    return circim::to_json(circim::analyze_pair(parse(p_json), parse(q_json), with_count));
}

std::string construct_json(const std::vector<std::pair<std::string, std::string>>& anchors) {
    circim::SingletonSpec spec;
    for (const auto& [re, im] : anchors)
        spec.anchors.emplace_back(circim::BigRational::from_string(re),
                                  circim::BigRational::from_string(im));
    const circim::SingletonExample ex = circim::build_singleton_example(spec);
    nlohmann::ordered_json j{{"N", static_cast<int>(spec.anchors.size())},
                             {"M", ex.M.str()},
                             {"certified_min_modulus", ex.certified_min_modulus},
                             {"p", nlohmann::ordered_json::parse(circim::to_json(ex.p))}};
    return j.dump(2) + "\n";
}

std::vector<std::pair<double, double>> sample_points(const std::string& p_json, int N) {
    return circim::sample_curve(parse(p_json), N).points;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact vanishing polynomials for circle images of Laurent polynomials";

    // Translators run newest-first, so the base class goes first.
    py::register_exception<circim::error>(m, "CircimError", PyExc_RuntimeError);
    py::register_exception<circim::input_error>(m, "InputError", PyExc_ValueError);

    m.def("compute_h_json", &compute_h_json, py::arg("p_json"),
          "Real bivariate vanishing polynomial h(x, y), as JSON");
    m.def("compute_hc_json", &compute_hc_json, py::arg("p_json"),
          "Complex eliminant hC(w, wbar), as JSON");
    m.def("classify_json", &classify_json, py::arg("p_json"), py::arg("angle_tol") = 1e-9,
          "Gap-set classification report, as JSON");
    m.def("verify_extra_point_json", &verify_extra_point_json, py::arg("p_json"), py::arg("w"),
          py::arg("delta") = 1e-3, py::arg("n") = 4096,
          "True when w vanishes on h but stays delta away from the circle image");
    m.def("bound_json", &bound_json, py::arg("p_json"), py::arg("q_json"),
          py::arg("with_count") = true, "Intersection bound report for two polynomials, as JSON");
    m.def("construct_json", &construct_json, py::arg("anchors"),
          "Polynomial whose gap points sit at 1..N, from rational anchors [(re, im)...]");
    m.def("intersection_bound", &circim::intersection_bound, py::arg("m"), py::arg("n"),
          py::arg("r"), py::arg("s"), "Upper bound 4ns - 2(n - m)(s - r)");
    m.def("sample_curve", &sample_points, py::arg("p_json"), py::arg("n") = 256,
          "Points of the circle image p(e^{it})");
}
