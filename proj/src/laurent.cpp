#include "circim/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "circim/errors.hpp"

namespace circim {

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<int, GaussianRational>> terms) {
    for (const auto& [k, c] : terms) add_term(k, c);
}

LaurentPolynomial LaurentPolynomial::constant(GaussianRational c) {
    LaurentPolynomial p;
    p.set_coeff(0, std::move(c));
    return p;
}

void LaurentPolynomial::set_coeff(int k, GaussianRational c) {
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = std::move(c);
}

void LaurentPolynomial::add_term(int k, const GaussianRational& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GaussianRational LaurentPolynomial::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GaussianRational() : it->second;
}

bool LaurentPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPolynomial::min_exponent() const {
    if (terms_.empty()) throw degenerate_input_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
    if (terms_.empty()) throw degenerate_input_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

int LaurentPolynomial::pole_order() const { return std::max(0, -min_exponent()); }

int LaurentPolynomial::degree() const { return max_exponent(); }

GaussianRational LaurentPolynomial::eval(const GaussianRational& z) const {
    if (terms_.empty()) return {};
    if (z.is_zero()) {
        if (min_exponent() < 0) throw pole_error();
        return coeff(0);
    }
    int lo = min_exponent();
    GaussianRational power(1);
    if (lo > 0)
        power = z.pow(static_cast<unsigned>(lo));
    else if (lo < 0)
        power = z.inverse().pow(static_cast<unsigned>(-lo));
    GaussianRational acc;
    int k = lo;
    for (const auto& [exp, c] : terms_) {
        while (k < exp) {
            power *= z;
            ++k;
        }
        acc += c * power;
    }
    return acc;
}

std::complex<double> LaurentPolynomial::eval(std::complex<double> z) const {
    std::complex<double> acc(0.0, 0.0);
    if (terms_.empty()) return acc;
    int lo = min_exponent();
    std::complex<double> power = std::pow(z, lo);
    int k = lo;
    for (const auto& [exp, c] : terms_) {
        while (k < exp) {
            power *= z;
            ++k;
        }
        acc += c.to_complex() * power;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::reciprocal_substitution() const {
    LaurentPolynomial out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(-k, c);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const GaussianRational& c) const {
    LaurentPolynomial out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        if (it->first != 0) os << "*z^" << it->first;
    }
    return os.str();
}

LaurentPolynomial normalize_orientation(const LaurentPolynomial& p) {
    if (p.is_constant()) throw degenerate_input_error("constant polynomial: nothing to normalize");
    if (p.pole_order() > p.degree()) return p.reciprocal_substitution();
    return p;
}

}  // namespace circim
