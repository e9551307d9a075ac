#include "circim/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "circim/errors.hpp"

namespace circim {

void BivariatePolynomial::set_coeff(int i, int j, GaussianRational c) {
    if (c.is_zero())
        terms_.erase({i, j});
    else
        terms_[{i, j}] = std::move(c);
}

void BivariatePolynomial::add_term(int i, int j, const GaussianRational& c) {
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GaussianRational BivariatePolynomial::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? GaussianRational() : it->second;
}

namespace {

template <typename Scalar>
std::vector<Scalar> power_table(const Scalar& base, int top, const Scalar& one) {
    std::vector<Scalar> t(static_cast<size_t>(top) + 1, one);
    for (int e = 1; e <= top; ++e) t[static_cast<size_t>(e)] = t[static_cast<size_t>(e - 1)] * base;
    return t;
}

}  // namespace

GaussianRational BivariatePolynomial::eval(const GaussianRational& u, const GaussianRational& v) const {
    if (terms_.empty()) return {};
    int du = 0, dv = 0;
    for (const auto& [ij, c] : terms_) {
        du = std::max(du, ij.first);
        dv = std::max(dv, ij.second);
    }
    auto pu = power_table(u, du, GaussianRational(1));
    auto pv = power_table(v, dv, GaussianRational(1));
    GaussianRational acc;
    for (const auto& [ij, c] : terms_)
        acc += c * pu[static_cast<size_t>(ij.first)] * pv[static_cast<size_t>(ij.second)];
    return acc;
}

std::complex<double> BivariatePolynomial::eval(std::complex<double> u, std::complex<double> v) const {
    if (terms_.empty()) return {};
    int du = 0, dv = 0;
    for (const auto& [ij, c] : terms_) {
        du = std::max(du, ij.first);
        dv = std::max(dv, ij.second);
    }
    auto pu = power_table(u, du, std::complex<double>(1.0));
    auto pv = power_table(v, dv, std::complex<double>(1.0));
    std::complex<double> acc(0.0);
    for (const auto& [ij, c] : terms_)
        acc += c.to_complex() * pu[static_cast<size_t>(ij.first)] * pv[static_cast<size_t>(ij.second)];
    return acc;
}

double BivariatePolynomial::eval(double x, double y) const {
    if (terms_.empty()) return 0.0;
    int du = 0, dv = 0;
    for (const auto& [ij, c] : terms_) {
        du = std::max(du, ij.first);
        dv = std::max(dv, ij.second);
    }
    auto px = power_table(x, du, 1.0);
    auto py = power_table(y, dv, 1.0);
    double acc = 0.0;
    for (const auto& [ij, c] : terms_)
        acc += c.re.to_double() * px[static_cast<size_t>(ij.first)] * py[static_cast<size_t>(ij.second)];
    return acc;
}

BivariatePolynomial::Degrees BivariatePolynomial::degrees() const {
    if (terms_.empty()) throw input_error("degree of the zero polynomial is undefined");
    Degrees d{0, 0, 0};
    for (const auto& [ij, c] : terms_) {
        d.total = std::max(d.total, ij.first + ij.second);
        d.first = std::max(d.first, ij.first);
        d.second = std::max(d.second, ij.second);
    }
    return d;
}

BivariatePolynomial BivariatePolynomial::homogeneous_part(int d) const {
    BivariatePolynomial out(tag_);
    for (const auto& [ij, c] : terms_)
        if (ij.first + ij.second == d) out.terms_.emplace(ij, c);
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [ij, c] : o.terms_) add_term(ij.first, ij.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [ij, c] : o.terms_) add_term(ij.first, ij.second, -c);
    return *this;
}

BivariatePolynomial BivariatePolynomial::scaled(const GaussianRational& c) const {
    BivariatePolynomial out(tag_);
    if (c.is_zero()) return out;
    for (const auto& [ij, v] : terms_) out.terms_.emplace(ij, v * c);
    return out;
}

double BivariatePolynomial::coefficient_scale() const {
    double s = 0.0;
    for (const auto& [ij, c] : terms_) s += std::abs(c.to_complex());
    return s;
}

std::string BivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    const char* u = tag_ == VarTag::XY ? "x" : "w";
    const char* v = tag_ == VarTag::XY ? "y" : "wbar";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        if (it->first.first != 0) os << "*" << u << "^" << it->first.first;
        if (it->first.second != 0) os << "*" << v << "^" << it->first.second;
    }
    return os.str();
}

BivariatePolynomial substitute_real(const BivariatePolynomial& hC) {
    if (hC.tag() != VarTag::WWbar)
        throw usage_error("substitute_real expects a (w, wbar) polynomial");

    int dw = 0, dwbar = 0;
    for (const auto& [ij, c] : hC.terms()) {
        dw = std::max(dw, ij.first);
        dwbar = std::max(dwbar, ij.second);
    }

    // Powers of (x + iy) and (x - iy) as polynomials in (x, y).
    using XYMap = std::map<std::pair<int, int>, GaussianRational>;
    auto build_powers = [](int top, const GaussianRational& iy_coeff) {
        std::vector<XYMap> powers(static_cast<size_t>(top) + 1);
        powers[0][{0, 0}] = GaussianRational(1);
        for (int e = 1; e <= top; ++e) {
            XYMap next;
            for (const auto& [ab, c] : powers[static_cast<size_t>(e - 1)]) {
                auto [a, b] = ab;
                next[{a + 1, b}] += c;
                GaussianRational& slot = next[{a, b + 1}];
                slot += c * iy_coeff;
            }
            for (auto it = next.begin(); it != next.end();)
                it = it->second.is_zero() ? next.erase(it) : std::next(it);
            powers[static_cast<size_t>(e)] = std::move(next);
        }
        return powers;
    };
    const GaussianRational plus_i(BigRational(0), BigRational(1));
    auto wp = build_powers(dw, plus_i);
    auto wbp = build_powers(dwbar, -plus_i);

    XYMap acc;
    for (const auto& [ij, c] : hC.terms()) {
        const XYMap& pa = wp[static_cast<size_t>(ij.first)];
        const XYMap& pb = wbp[static_cast<size_t>(ij.second)];
        for (const auto& [ab1, c1] : pa)
            for (const auto& [ab2, c2] : pb) {
                GaussianRational& slot = acc[{ab1.first + ab2.first, ab1.second + ab2.second}];
                slot += c * c1 * c2;
            }
    }

    BivariatePolynomial out(VarTag::XY);
    for (const auto& [ab, c] : acc) {
        if (c.is_zero()) continue;
        if (!c.im.is_zero())
            throw realization_error("nonreal coefficient " + c.str() + " at x^" +
                                    std::to_string(ab.first) + " y^" + std::to_string(ab.second) +
                                    " after w -> x+iy substitution");
        out.set_coeff(ab.first, ab.second, c);
    }

    if (!hC.is_zero()) {
        // The substitution is an invertible linear change of variables.
        int before = hC.degrees().total;
        int after = out.is_zero() ? -1 : out.degrees().total;
        if (before != after)
            throw internal_error("total degree changed under w -> x+iy substitution");
    }
    return out;
}

}  // namespace circim
