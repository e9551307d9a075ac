#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "circim/rational.hpp"

namespace circim {

/// Exact element of Q(i): rational real and imaginary parts.
struct GaussianRational {
    BigRational re;
    BigRational im;

    GaussianRational() = default;
    GaussianRational(BigRational real, BigRational imag = BigRational())
        : re(std::move(real)), im(std::move(imag)) {}
    GaussianRational(long real, long imag = 0) : re(real), im(imag) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    BigRational abs_sq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        BigRational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw division_by_zero();
        BigRational d = o.abs_sq();
        BigRational r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }
    GaussianRational pow(unsigned e) const;

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    /// e.g. "2", "-3/2*i", "1/2+1/2*i"
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);
};

/// Rational point of the unit circle: ((1-t^2) + 2t*i) / (1+t^2).
/// abs_sq of the result is exactly 1; the point (-1, 0) is never produced.
GaussianRational circle_point(const BigRational& t);

}  // namespace circim
