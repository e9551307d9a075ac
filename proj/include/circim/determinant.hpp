#pragma once

#include <vector>

#include "circim/gaussian.hpp"

namespace circim {

/// Exact determinant of a square Gaussian-rational matrix.
/// Rows are scaled to Gaussian integers, the integral matrix is reduced by
/// fraction-free (Bareiss) elimination, and the row scales are divided back out.
GaussianRational det_exact(std::vector<std::vector<GaussianRational>> m);

/// Coefficients (ascending) of the unique polynomial of degree < nodes.size()
/// passing through (nodes[i], values[i]). Nodes must be pairwise distinct.
std::vector<GaussianRational> lagrange_coeffs(const std::vector<GaussianRational>& nodes,
                                              const std::vector<GaussianRational>& values);

/// Horner evaluation of an ascending coefficient vector.
GaussianRational poly_eval(const std::vector<GaussianRational>& coeffs, const GaussianRational& z);

}  // namespace circim
