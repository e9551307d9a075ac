#include "circim/construct.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "circim/determinant.hpp"
#include "circim/errors.hpp"

namespace circim {

LaurentPolynomial lagrange_interpolate(const std::vector<GaussianRational>& nodes,
                                       const std::vector<GaussianRational>& values) {
    std::vector<GaussianRational> coeffs = lagrange_coeffs(nodes, values);
    LaurentPolynomial q;
    for (size_t i = 0; i < coeffs.size(); ++i) q.set_coeff(static_cast<int>(i), coeffs[i]);
    return q;
}

namespace {

double min_modulus_on_circle(const LaurentPolynomial& p, int grid) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double theta = 2 * std::numbers::pi * i / grid;
        const double v = std::abs(p.eval(std::polar(1.0, theta)));
        if (v < best) best = v;
    }
    return best;
}

// |d p(e^{i t}) / dt| <= sum |k| |a_k| on the circle.
double circle_lipschitz(const LaurentPolynomial& p) {
    double sum = 0.0;
    for (const auto& [k, c] : p.terms()) sum += std::abs(k) * std::sqrt(c.abs_sq().to_double());
    return sum;
}

}  // namespace

SingletonExample build_singleton_example(const SingletonSpec& spec) {
    const size_t N = spec.anchors.size();
    if (N == 0) throw input_error("at least one anchor is required");
    for (const auto& a : spec.anchors) {
        const BigRational r2 = a.abs_sq();
        if (r2.is_zero() || !(r2 < BigRational(1)))
            throw input_error("anchors must satisfy 0 < |a| < 1: got " + a.str());
    }
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j)
            if (spec.anchors[i] == spec.anchors[j]) throw input_error("anchors must be pairwise distinct");

    // Interpolation nodes: each anchor and its circle reflection, sharing
    // the value k. Reflections are outside the disk, so no collisions.
    std::vector<GaussianRational> nodes, values;
    for (size_t k = 0; k < N; ++k) {
        nodes.push_back(spec.anchors[k]);
        nodes.push_back(spec.anchors[k].conj().inverse());
        values.emplace_back(static_cast<long>(k + 1));
        values.emplace_back(static_cast<long>(k + 1));
    }
    const LaurentPolynomial q = lagrange_interpolate(nodes, values);

    LaurentPolynomial r = LaurentPolynomial::constant(GaussianRational(1));
    for (const auto& node : nodes) {
        LaurentPolynomial factor{{1, GaussianRational(1)}, {0, -node}};
        r = r * factor;
    }

    const double target = static_cast<double>(N);
    SingletonExample out;
    out.M = BigRational(1);
    for (int attempt = 0; attempt < 60; ++attempt, out.M *= BigRational(2)) {
        LaurentPolynomial p = q + r.scaled(GaussianRational(out.M));
        if (min_modulus_on_circle(p, 1024) <= target + 0.5) continue;
        // Certify: between adjacent samples of a 4096 grid, |p| can drop by
        // at most L * (half the spacing).
        const double margin = circle_lipschitz(p) * (std::numbers::pi / 4096);
        const double bound = min_modulus_on_circle(p, 4096) - margin;
        if (bound > target) {
            out.p = std::move(p);
            out.certified_min_modulus = bound;
            return out;
        }
    }
    throw construction_error("no multiplier up to 2^60 certified the modulus bound");
}

}  // namespace circim
