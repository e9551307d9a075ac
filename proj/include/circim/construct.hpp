#pragma once

#include <vector>

#include "circim/laurent.hpp"
#include "circim/rational.hpp"

namespace circim {

/// Anchors a_1, ..., a_N: distinct points with 0 < |a_k| < 1. The built
/// polynomial takes the value k at a_k and at the reflected point
/// 1/conj(a_k), which places k = 1..N in the zero set of h off the circle
/// image once the modulus of p on the circle is pushed above N.
struct SingletonSpec {
    std::vector<GaussianRational> anchors;
};

/// Exact interpolation: the unique polynomial of degree < #nodes through
/// the given points, returned with exponents 0..#nodes-1.
LaurentPolynomial lagrange_interpolate(const std::vector<GaussianRational>& nodes,
                                       const std::vector<GaussianRational>& values);

struct SingletonExample {
    LaurentPolynomial p;  ///< q + M r, degree 2N, no pole
    BigRational M;        ///< the accepted multiplier (a power of two)
    /// Certified lower bound for |p| on the unit circle, > N.
    double certified_min_modulus = 0.0;
};

/// Builds p = q + M r with q interpolating k at a_k and 1/conj(a_k), and
/// r the monic polynomial vanishing at all those nodes. M doubles from 1
/// until a 1024-point grid minimum of |p| on the circle clears N + 1/2,
/// then the bound min|p| > N is certified on a 4096-point grid with a
/// Lipschitz margin. Throws construction_error if 60 doublings never
/// certify (unreachable for valid specs).
SingletonExample build_singleton_example(const SingletonSpec& spec);

}  // namespace circim
