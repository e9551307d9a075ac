#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "circim/gaussian.hpp"

namespace circim {

/// Which pair of formally independent variables a bivariate polynomial lives in.
enum class VarTag {
    WWbar,  // (w, wbar) with Gaussian-rational coefficients
    XY,     // (x, y) with real rational coefficients
};

/// Sparse bivariate polynomial sum c_{ij} u^i v^j. The two variables are
/// formally independent: nothing ever forces v = conj(u). XY-tagged
/// polynomials keep every coefficient real.
class BivariatePolynomial {
public:
    explicit BivariatePolynomial(VarTag tag = VarTag::WWbar) : tag_(tag) {}

    VarTag tag() const { return tag_; }

    void set_coeff(int i, int j, GaussianRational c);
    void add_term(int i, int j, const GaussianRational& c);
    GaussianRational coeff(int i, int j) const;

    const std::map<std::pair<int, int>, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussianRational eval(const GaussianRational& u, const GaussianRational& v) const;
    std::complex<double> eval(std::complex<double> u, std::complex<double> v) const;
    /// Real fast path; meaningful for XY-tagged polynomials.
    double eval(double x, double y) const;

    struct Degrees {
        int total;
        int first;
        int second;
    };
    /// Errors out on the zero polynomial.
    Degrees degrees() const;

    /// Terms of total degree exactly d.
    BivariatePolynomial homogeneous_part(int d) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    BivariatePolynomial scaled(const GaussianRational& c) const;

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }

    /// Sum of |coefficient| as doubles; a scale for float residual tests.
    double coefficient_scale() const;

    std::string str() const;

private:
    VarTag tag_;
    std::map<std::pair<int, int>, GaussianRational> terms_;
};

/// Substitutes w = x+iy, wbar = x-iy into a WWbar polynomial and checks that
/// every resulting coefficient is exactly real. Total degree is preserved.
BivariatePolynomial substitute_real(const BivariatePolynomial& hC);

}  // namespace circim
