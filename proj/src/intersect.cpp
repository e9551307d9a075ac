#include "circim/intersect.hpp"

#include <algorithm>
#include <vector>

#include "circim/determinant.hpp"
#include "circim/errors.hpp"
#include "circim/numeric.hpp"
#include "circim/resultant.hpp"

namespace circim {

int intersection_bound(int m, int n, int r, int s) {
    if (m < 0 || r < 0 || m > n || r > s || n < 1 || s < 1)
        throw input_error("intersection bound needs 0 <= m <= n, 0 <= r <= s, n >= 1, s >= 1");
    return 4 * n * s - 2 * (n - m) * (s - r);
}

namespace {

// h as a polynomial in the eliminated variable; each coefficient is an
// ascending list in the kept variable.
std::vector<std::vector<GaussianRational>> split_by_variable(const BivariatePolynomial& h,
                                                             bool eliminate_second) {
    int de = 0, dk = 0;
    for (const auto& [ij, c] : h.terms()) {
        const int e = eliminate_second ? ij.second : ij.first;
        const int k = eliminate_second ? ij.first : ij.second;
        de = std::max(de, e);
        dk = std::max(dk, k);
    }
    std::vector<std::vector<GaussianRational>> out(
        static_cast<size_t>(de) + 1, std::vector<GaussianRational>(static_cast<size_t>(dk) + 1));
    for (const auto& [ij, c] : h.terms()) {
        const int e = eliminate_second ? ij.second : ij.first;
        const int k = eliminate_second ? ij.first : ij.second;
        out[static_cast<size_t>(e)][static_cast<size_t>(k)] = c;
    }
    return out;
}

int kept_degree(const std::vector<std::vector<GaussianRational>>& split) {
    return static_cast<int>(split.front().size()) - 1;
}

}  // namespace

std::vector<GaussianRational> variable_resultant(const BivariatePolynomial& a,
                                                 const BivariatePolynomial& b,
                                                 bool eliminate_second) {
    if (a.is_zero() || b.is_zero()) throw input_error("resultant of a zero polynomial");
    const auto sa = split_by_variable(a, eliminate_second);
    const auto sb = split_by_variable(b, eliminate_second);
    const int da = static_cast<int>(sa.size()) - 1;
    const int db = static_cast<int>(sb.size()) - 1;
    if (da == 0 && db == 0) return {GaussianRational(1)};  // empty matrix

    // The determinant's degree in the kept variable is at most
    // deg_kept(a) * db + deg_kept(b) * da.
    const int D = kept_degree(sa) * db + kept_degree(sb) * da;
    const int size = da + db;

    std::vector<GaussianRational> nodes(static_cast<size_t>(D) + 1), values(static_cast<size_t>(D) + 1);
    for (int node = 0; node <= D; ++node) {
        const GaussianRational x(node);
        // Entries first, then the determinant: the matrix layout is fixed by
        // the formal degrees da, db even where a leading coefficient
        // vanishes at this node.
        std::vector<GaussianRational> ca(static_cast<size_t>(da) + 1), cb(static_cast<size_t>(db) + 1);
        for (int t = 0; t <= da; ++t) ca[static_cast<size_t>(t)] = poly_eval(sa[static_cast<size_t>(t)], x);
        for (int t = 0; t <= db; ++t) cb[static_cast<size_t>(t)] = poly_eval(sb[static_cast<size_t>(t)], x);
        std::vector<std::vector<GaussianRational>> mat(
            static_cast<size_t>(size), std::vector<GaussianRational>(static_cast<size_t>(size)));
        for (int i = 0; i < db; ++i)
            for (int t = 0; t <= da; ++t) mat[static_cast<size_t>(i)][static_cast<size_t>(i + t)] = ca[static_cast<size_t>(t)];
        for (int i = 0; i < da; ++i)
            for (int t = 0; t <= db; ++t) mat[static_cast<size_t>(db + i)][static_cast<size_t>(i + t)] = cb[static_cast<size_t>(t)];
        nodes[static_cast<size_t>(node)] = x;
        values[static_cast<size_t>(node)] = det_exact(std::move(mat));
    }
    return lagrange_coeffs(nodes, values);
}

bool common_factor(const BivariatePolynomial& h1, const BivariatePolynomial& h2) {
    if (h1.is_zero() || h2.is_zero()) throw input_error("common-factor test needs nonzero polynomials");
    const auto d1 = h1.degrees();
    const auto d2 = h2.degrees();
    if (d1.total == 0 || d2.total == 0) return false;  // constants have no factors

    const auto vanishes = [](const std::vector<GaussianRational>& v) {
        return std::all_of(v.begin(), v.end(), [](const GaussianRational& c) { return c.is_zero(); });
    };
    // A shared factor with positive y-degree kills the resultant in y; a
    // shared factor free of y has positive x-degree and kills the one in x.
    if (d1.second > 0 && d2.second > 0 && vanishes(variable_resultant(h1, h2, true))) return true;
    if (d1.first > 0 && d2.first > 0 && vanishes(variable_resultant(h1, h2, false))) return true;
    return false;
}

BoundReport analyze_pair(const LaurentPolynomial& p_in, const LaurentPolynomial& q_in,
                         bool with_numeric_count) {
    const LaurentPolynomial p = normalize_orientation(p_in);
    const LaurentPolynomial q = normalize_orientation(q_in);

    BoundReport rep;
    rep.m = p.pole_order();
    rep.n = p.degree();
    rep.r = q.pole_order();
    rep.s = q.degree();
    rep.bound = intersection_bound(rep.m, rep.n, rep.r, rep.s);
    rep.common_factor = common_factor(compute_h(p).h, compute_h(q).h);

    if (with_numeric_count) {
        const IntersectionCount ic = count_intersections(p, q);
        if (!ic.overlap_suspected) {
            rep.numeric_count = ic.count;
            if (!rep.common_factor && ic.count > rep.bound)
                throw internal_error("numeric intersection count exceeds the bound without a common factor");
        }
    }
    return rep;
}

}  // namespace circim
