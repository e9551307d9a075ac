#pragma once

#include <optional>
#include <vector>

#include "circim/bivariate.hpp"
#include "circim/laurent.hpp"

namespace circim {

struct BoundReport {
    int m = 0, n = 0;  ///< pole order and degree of p
    int r = 0, s = 0;  ///< pole order and degree of q
    int bound = 0;     ///< 4ns - 2(n-m)(s-r)
    bool common_factor = false;
    std::optional<int> numeric_count;  ///< absent when not computed or when overlap is suspected
};

/// The intersection bound 4ns - 2(n-m)(s-r) for the circle images of two
/// Laurent polynomials with pole orders m, r and degrees n, s.
int intersection_bound(int m, int n, int r, int s);

/// Resultant of a and b with respect to one variable, as the ascending
/// coefficient list in the surviving variable. Computed by evaluating the
/// entries of the Sylvester matrix at integer nodes of the kept variable
/// and interpolating the exact determinants. eliminate_second resolves
/// which variable is eliminated (the second is y, or wbar).
std::vector<GaussianRational> variable_resultant(const BivariatePolynomial& a,
                                                 const BivariatePolynomial& b,
                                                 bool eliminate_second);

/// True iff the two nonzero polynomials share a nonconstant factor,
/// detected through identically vanishing resultants in y and in x.
bool common_factor(const BivariatePolynomial& h1, const BivariatePolynomial& h2);

/// End-to-end bound check for a pair: both envelope polynomials, the
/// degree bound, the common-factor guard, and optionally the numeric
/// intersection count, which is asserted <= bound when no common factor
/// blocks the statement.
BoundReport analyze_pair(const LaurentPolynomial& p, const LaurentPolynomial& q,
                         bool with_numeric_count = true);

}  // namespace circim
