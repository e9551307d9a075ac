#include "circim/determinant.hpp"

#include <gmpxx.h>

#include <utility>

#include "circim/errors.hpp"

namespace circim {

namespace {

// Gaussian integer with raw mpz components; the elimination kernel stays off
// the mpq canonicalization path.
struct GaussInt {
    mpz_class re, im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    GaussInt r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

// Exact quotient a / b for Gaussian integers, valid only when b divides a.
GaussInt div_exact(const GaussInt& a, const GaussInt& b) {
    mpz_class norm = b.re * b.re + b.im * b.im;
    GaussInt r;
    mpz_class t = a.re * b.re + a.im * b.im;
    mpz_divexact(r.re.get_mpz_t(), t.get_mpz_t(), norm.get_mpz_t());
    t = a.im * b.re - a.re * b.im;
    mpz_divexact(r.im.get_mpz_t(), t.get_mpz_t(), norm.get_mpz_t());
    return r;
}

}  // namespace

GaussianRational det_exact(std::vector<std::vector<GaussianRational>> m) {
    const size_t n = m.size();
    if (n == 0) return GaussianRational(1);
    for (const auto& row : m)
        if (row.size() != n) throw input_error("determinant of a non-square matrix");

    // Scale each row to Gaussian integers; remember the combined scale.
    mpz_class scale_den = 1;
    std::vector<std::vector<GaussInt>> a(n, std::vector<GaussInt>(n));
    for (size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (const auto& e : m[i]) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.re.den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.im.den().get_mpz_t());
        }
        for (size_t j = 0; j < n; ++j) {
            const auto& e = m[i][j];
            a[i][j].re = e.re.num() * (l / e.re.den());
            a[i][j].im = e.im.num() * (l / e.im.den());
        }
        scale_den *= l;
    }

    // Bareiss: entries stay Gaussian integers, divisions are exact.
    int sign = 1;
    GaussInt prev{mpz_class(1), mpz_class(0)};
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return GaussianRational();  // singular
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                GaussInt t = mul(a[k][k], a[i][j]);
                GaussInt s = mul(a[i][k], a[k][j]);
                t.re -= s.re;
                t.im -= s.im;
                a[i][j] = div_exact(t, prev);
            }
            a[i][k].re = 0;
            a[i][k].im = 0;
        }
        prev = a[k][k];
    }

    const GaussInt& d = a[n - 1][n - 1];
    BigRational re(sign > 0 ? d.re : mpz_class(-d.re), scale_den);
    BigRational im(sign > 0 ? d.im : mpz_class(-d.im), scale_den);
    return {re, im};
}

std::vector<GaussianRational> lagrange_coeffs(const std::vector<GaussianRational>& nodes,
                                              const std::vector<GaussianRational>& values) {
    const size_t n = nodes.size();
    if (n == 0 || values.size() != n) throw input_error("interpolation needs matching nonempty node/value lists");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j]) throw input_error("interpolation nodes must be pairwise distinct");

    // full(x) = prod (x - nodes[i]), ascending coefficients.
    std::vector<GaussianRational> full(n + 1);
    full[0] = GaussianRational(1);
    size_t deg = 0;
    for (size_t i = 0; i < n; ++i) {
        full[deg + 1] = GaussianRational(1);
        for (size_t j = deg; j > 0; --j) full[j] = full[j - 1] - nodes[i] * full[j];
        full[0] = -nodes[i] * full[0];
        ++deg;
    }

    std::vector<GaussianRational> out(n);
    std::vector<GaussianRational> basis(n);
    for (size_t i = 0; i < n; ++i) {
        if (values[i].is_zero()) continue;
        // basis = full / (x - nodes[i]) by synthetic division (exact).
        GaussianRational carry = full[n];
        for (size_t j = n; j > 0; --j) {
            basis[j - 1] = carry;
            carry = full[j - 1] + nodes[i] * carry;
        }
        GaussianRational denom = poly_eval(basis, nodes[i]);
        GaussianRational w = values[i] / denom;
        for (size_t j = 0; j < n; ++j) out[j] += w * basis[j];
    }
    return out;
}

GaussianRational poly_eval(const std::vector<GaussianRational>& coeffs, const GaussianRational& z) {
    GaussianRational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace circim
