#include "circim/rational.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>

namespace circim {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (sgn(den) == 0) throw division_by_zero();
}

}  // namespace

BigRational::BigRational(long num, long den) {
    require_nonzero_den(mpz_class(den));
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    require_nonzero_den(den);
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational BigRational::from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw input_error("invalid rational literal: '" + s + "'");
    require_nonzero_den(q.get_den());
    q.canonicalize();
    BigRational r;
    r.v_ = q;
    return r;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.v_ = -v_;
    return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::abs() const {
    BigRational r;
    r.v_ = ::abs(v_);
    return r;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw division_by_zero();
    BigRational r;
    r.v_ = 1 / v_;
    return r;
}

BigRational BigRational::pow(unsigned e) const {
    BigRational base = *this, acc = 1;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string BigRational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

double BigRational::to_double() const {
    if (is_zero()) return 0.0;
    const mpz_class& n = v_.get_num();
    const mpz_class& d = v_.get_den();
    mpz_class an = ::abs(n);
    // Scale |n|/d so the integer quotient carries 62 significant bits, round
    // the division to nearest, then push the scale back in through ldexp.
    long e = static_cast<long>(mpz_sizeinbase(an.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    long k = 62 - e;
    mpz_class num = an, den = d;
    if (k >= 0) {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class twice_r = 2 * r;
    if (twice_r >= den) q += 1;
    double mant = static_cast<double>(q.get_ui());
    if (!q.fits_ulong_p()) {
        // quotient has at most 64 bits; split it
        mpz_class hi = q >> 32, lo = q & mpz_class{0xffffffffUL};
        mant = std::ldexp(static_cast<double>(hi.get_ui()), 32) + static_cast<double>(lo.get_ui());
    }
    double out = std::ldexp(mant, static_cast<int>(-k));
    return sgn(n) < 0 ? -out : out;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

BigRational gcd(const BigRational& a, const BigRational& b) {
    mpz_class gn, gd;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(gd.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    if (sgn(gn) == 0) return BigRational(0);
    return BigRational(gn, gd);
}

}  // namespace circim
