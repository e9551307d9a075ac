#include "circim/resultant.hpp"

#include <string>
#include <utility>
#include <vector>

#include "circim/determinant.hpp"
#include "circim/errors.hpp"

namespace circim {

ConjugatePair build_pair(const LaurentPolynomial& p) {
    if (p.is_zero() || p.is_constant())
        throw input_error("conjugate pair needs a non-constant polynomial");
    const int n = p.degree();
    const int m = p.pole_order();
    if (m > n) throw input_error("pole order exceeds degree; normalize the orientation first");

    ConjugatePair pair;
    pair.m = m;
    pair.n = n;
    pair.w_index = m;
    pair.wbar_index = n;
    pair.g.assign(m + n + 1, GaussianRational());
    for (const auto& [k, c] : p.terms()) pair.g[k + m] = c;
    pair.g_star.assign(m + n + 1, GaussianRational());
    for (int j = 0; j <= m + n; ++j) pair.g_star[j] = pair.g[m + n - j].conj();
    return pair;
}

SylvesterMatrix::SylvesterMatrix(ConjugatePair pair) : pair_(std::move(pair)) {
    const size_t len = static_cast<size_t>(pair_.m + pair_.n) + 1;
    if (pair_.g.size() != len || pair_.g_star.size() != len)
        throw input_error("conjugate pair has inconsistent lengths");
}

BivariatePolynomial SylvesterMatrix::entry(int i, int j) const {
    const int half = size() / 2;
    if (i < 0 || j < 0 || i >= size() || j >= size()) throw input_error("matrix index out of range");
    BivariatePolynomial e(VarTag::WWbar);
    const bool top = i < half;
    const int offset = j - (top ? i : i - half);
    if (offset < 0 || offset > half) return e;
    if (top) {
        e.add_term(0, 0, pair_.g[offset]);
        if (offset == pair_.w_index) e.add_term(1, 0, GaussianRational(-1));
    } else {
        e.add_term(0, 0, pair_.g_star[offset]);
        if (offset == pair_.wbar_index) e.add_term(0, 1, GaussianRational(-1));
    }
    return e;
}

std::vector<std::vector<GaussianRational>> SylvesterMatrix::evaluate(const GaussianRational& u,
                                                                     const GaussianRational& v) const {
    const int half = size() / 2;
    std::vector<std::vector<GaussianRational>> out(
        static_cast<size_t>(2 * half), std::vector<GaussianRational>(static_cast<size_t>(2 * half)));
    for (int i = 0; i < half; ++i)
        for (int t = 0; t <= half; ++t) {
            GaussianRational e = pair_.g[t];
            if (t == pair_.w_index) e -= u;
            out[i][i + t] = e;
        }
    for (int i = 0; i < half; ++i)
        for (int t = 0; t <= half; ++t) {
            GaussianRational e = pair_.g_star[t];
            if (t == pair_.wbar_index) e -= v;
            out[half + i][i + t] = std::move(e);
        }
    return out;
}

BivariatePolynomial resultant_det(const SylvesterMatrix& mat) {
    const int half = mat.size() / 2;
    const int nodes = half + 1;  // degree in each variable is at most half

    // Scalar determinants on the integer grid {0..half}^2.
    std::vector<std::vector<GaussianRational>> dets(
        static_cast<size_t>(nodes), std::vector<GaussianRational>(static_cast<size_t>(nodes)));
    for (int a = 0; a < nodes; ++a)
        for (int b = 0; b < nodes; ++b)
            dets[a][b] = det_exact(mat.evaluate(GaussianRational(a), GaussianRational(b)));

    std::vector<GaussianRational> grid(static_cast<size_t>(nodes));
    for (int a = 0; a < nodes; ++a) grid[a] = GaussianRational(a);

    // Interpolate rows in wbar, then each wbar-coefficient column in w.
    std::vector<std::vector<GaussianRational>> rows(static_cast<size_t>(nodes));
    for (int a = 0; a < nodes; ++a) rows[a] = lagrange_coeffs(grid, dets[a]);

    BivariatePolynomial hC(VarTag::WWbar);
    std::vector<GaussianRational> column(static_cast<size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        for (int a = 0; a < nodes; ++a) column[a] = rows[a][j];
        std::vector<GaussianRational> cs = lagrange_coeffs(grid, column);
        for (int i = 0; i < nodes; ++i)
            if (!cs[i].is_zero()) hC.set_coeff(i, j, cs[i]);
    }
    return hC;
}

HPair compute_h(const LaurentPolynomial& p_in) {
    const LaurentPolynomial p = normalize_orientation(p_in);
    const ConjugatePair pair = build_pair(p);
    const int m = pair.m, n = pair.n;

    SylvesterMatrix mat(pair);
    BivariatePolynomial hC = resultant_det(mat);
    if (hC.is_zero()) throw internal_error("eliminant vanished identically");

    // Hermitian symmetry c_{ij} = conj(c_{ji}); this is what makes the
    // (x, y) substitution land in real coefficients.
    for (const auto& [ij, c] : hC.terms())
        if (hC.coeff(ij.second, ij.first) != c.conj())
            throw internal_error("eliminant is not Hermitian-symmetric");

    auto deg = hC.degrees();
    if (deg.first != m + n || deg.second != m + n)
        throw internal_error("eliminant degree in w or wbar is not m+n");

    if (m > 0) {
        // |leading coefficient| in each variable = |a_n|^m |a_{-m}|^n.
        BigRational want = pair.g[m + n].abs_sq().pow(static_cast<unsigned>(m)) *
                           pair.g[0].abs_sq().pow(static_cast<unsigned>(n));
        if (hC.coeff(m + n, 0).abs_sq() != want)
            throw internal_error("leading w-coefficient has the wrong modulus");
        if (hC.coeff(0, m + n).abs_sq() != want)
            throw internal_error("leading wbar-coefficient has the wrong modulus");
    }

    HPair out;
    out.h = substitute_real(hC);
    out.hC = std::move(hC);
    if (out.h.degrees().total != 2 * n)
        throw internal_error("real form degree is not twice the polynomial degree");
    return out;
}

}  // namespace circim
