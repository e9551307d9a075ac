#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "circim/gaussian.hpp"

namespace circim {

/// Sparse Laurent polynomial sum a_k z^k over Q(i). Zero coefficients are
/// never stored. Exponents may be negative; pole_order() and degree() name
/// the m and n of the normalized form a_{-m} z^{-m} + ... + a_n z^n.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(std::initializer_list<std::pair<int, GaussianRational>> terms);

    static LaurentPolynomial constant(GaussianRational c);

    void set_coeff(int k, GaussianRational c);
    void add_term(int k, const GaussianRational& c);

    /// Zero when no term with exponent k is stored.
    GaussianRational coeff(int k) const;

    const std::map<int, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    int min_exponent() const;  // requires a nonzero polynomial
    int max_exponent() const;

    /// m = max(0, -min_exponent): order of the pole at the origin.
    int pole_order() const;
    /// n = max_exponent. Can be <= 0 before orientation normalization.
    int degree() const;

    GaussianRational eval(const GaussianRational& z) const;
    std::complex<double> eval(std::complex<double> z) const;

    /// p(1/z): every exponent negated. The image of the unit circle is unchanged.
    LaurentPolynomial reciprocal_substitution() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial scaled(const GaussianRational& c) const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::map<int, GaussianRational> terms_;
};

/// Flips p to p(1/z) when the pole order exceeds the degree, so that m <= n
/// afterwards. Constant input is rejected.
LaurentPolynomial normalize_orientation(const LaurentPolynomial& p);

}  // namespace circim
