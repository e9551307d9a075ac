#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "circim/bivariate.hpp"
#include "circim/laurent.hpp"

namespace circim {

struct CurveSample {
    std::vector<double> params;                     ///< strictly increasing, in [0, 2pi)
    std::vector<std::pair<double, double>> points;  ///< p(e^{it}) per parameter
};

/// All complex roots, with multiplicity, of the polynomial with the given
/// ascending coefficients, via companion-matrix eigenvalues plus a short
/// Newton polish. The leading coefficient must be nonzero.
std::vector<std::complex<double>> roots(const std::vector<std::complex<double>>& coeffs);

/// Root-product form of the eliminant value at a fixed w:
/// |a_n|^{2(m+n)} prod_{i,j} (z_i conj(z_j) - 1) over the numeric roots z_i
/// of z^m (p(z) - w). Cross-validates the determinant; the result is real
/// up to rounding. Breaks down only at m = 0, w = a_0 (callers avoid it).
std::complex<double> res_zeros_oracle(const LaurentPolynomial& p, std::complex<double> w);

/// Uniform sampling t_j = 2 pi j / N of the circle image. N >= 16.
CurveSample sample_curve(const LaurentPolynomial& p, int N);

/// Numeric witness that w is in the zero set of h but off the circle image:
/// |h(Re w, Im w)| < 1e-8 * coefficient scale, and every of N samples of
/// p(e^{it}) stays farther than delta from w.
bool verify_extra_point(const LaurentPolynomial& p, const BivariatePolynomial& h,
                        std::complex<double> w, double delta = 1e-3, int N = 4096);

struct IntersectionCount {
    int count = 0;
    std::vector<std::pair<double, double>> points;  ///< one representative per cluster
    bool overlap_suspected = false;                 ///< grid hits form a 1-dimensional family
};

/// Counts transversal intersections of the two circle images by grid search
/// over |p(e^{is}) - q(e^{it})|, coordinate-descent refinement of grid
/// minima below tol, and clustering of the refined hits. grid >= 64.
IntersectionCount count_intersections(const LaurentPolynomial& p, const LaurentPolynomial& q,
                                      int grid = 256, double tol = 0.05);

using Polyline = std::vector<std::pair<double, double>>;

struct BoundingBox {
    double x0 = -1, y0 = -1, x1 = 1, y1 = 1;
};

/// Marching-squares level set h = 0 over the box, resolution cells per
/// axis (>= 32), crossings linearly interpolated, segments joined into
/// polylines (closed ones repeat their first point).
std::vector<Polyline> contour(const BivariatePolynomial& h, const BoundingBox& box, int resolution);

/// Numeric gap-point candidates: Newton solving p(z) = p(1/conj(z)) from a
/// grid of starts inside the unit disk, mapping solutions through p, and
/// keeping the values that pass verify_extra_point. Sorted by (re, im).
std::vector<std::complex<double>> find_gap_candidates(const LaurentPolynomial& p,
                                                      const BivariatePolynomial& h,
                                                      double delta = 1e-3, int N = 4096);

}  // namespace circim
