#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "circim/errors.hpp"

namespace circim {

/// Arbitrary-precision rational number. Always stored in lowest terms
/// with a positive denominator; every operation is exact.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT: implicit by design
    BigRational(long num, long den);
    explicit BigRational(const mpz_class& n) : v_(n) {}
    BigRational(const mpz_class& num, const mpz_class& den);

    /// Parses "p/q" or "p" (decimal digits, optional leading '-').
    static BigRational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    BigRational abs() const;
    BigRational inverse() const;
    BigRational pow(unsigned e) const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Round-to-nearest conversion to double.
    double to_double() const;

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

private:
    mpq_class v_;  // canonical at all times
};

BigRational gcd(const BigRational& a, const BigRational& b);

}  // namespace circim
