#pragma once

#include <vector>

#include "circim/bivariate.hpp"
#include "circim/laurent.hpp"

namespace circim {

/// Coefficient lists of g(z) = z^m (p(z) - w) and of its reflected conjugate
/// g*(z) = z^{m+n} conj(g(1/conj(z))), both ascending in z. The parameter w
/// is carried symbolically: g[w_index] holds the constant part a_0, and the
/// full entry is a_0 - w. Likewise g_star[wbar_index] is conj(a_0) - wbar.
struct ConjugatePair {
    std::vector<GaussianRational> g;
    std::vector<GaussianRational> g_star;
    int m = 0;        ///< pole order of p
    int n = 0;        ///< degree of p
    int w_index = 0;  ///< = m
    int wbar_index = 0;  ///< = n
};

/// Requires a non-constant p with pole order <= degree.
ConjugatePair build_pair(const LaurentPolynomial& p);

/// Square matrix of side 2(m+n) whose determinant eliminates z between
/// g and g*: row i of the top half carries g shifted right by i, row i of
/// the bottom half carries g* shifted right by i. Entries are polynomials
/// of total degree <= 1 in (w, wbar).
class SylvesterMatrix {
public:
    explicit SylvesterMatrix(ConjugatePair pair);

    int size() const { return 2 * (pair_.m + pair_.n); }
    const ConjugatePair& pair() const { return pair_; }

    /// Entry (i, j) as a polynomial in (w, wbar).
    BivariatePolynomial entry(int i, int j) const;

    /// Scalar matrix at w = u, wbar = v.
    std::vector<std::vector<GaussianRational>> evaluate(const GaussianRational& u,
                                                        const GaussianRational& v) const;

private:
    ConjugatePair pair_;
};

/// Determinant of the matrix as a polynomial in (w, wbar), computed by
/// exact evaluation at integer nodes followed by bivariate interpolation.
BivariatePolynomial resultant_det(const SylvesterMatrix& mat);

struct HPair {
    BivariatePolynomial hC;  ///< in (w, wbar)
    BivariatePolynomial h;   ///< in (x, y), real coefficients
};

/// Full pipeline: orientation normalization, matrix determinant, and the
/// substitution w = x + iy. The result satisfies h(p(z)) = 0 for every z
/// on the unit circle. Verified invariants: hC is Hermitian-symmetric,
/// its degree in each of w and wbar is m+n, and deg h = 2n.
HPair compute_h(const LaurentPolynomial& p);

}  // namespace circim
