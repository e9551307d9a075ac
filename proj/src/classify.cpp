#include "circim/classify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "circim/errors.hpp"

namespace circim {

namespace {

constexpr double kPi = std::numbers::pi;

// Distance between two line directions, i.e. between angles mod pi.
double dist_mod_pi(double a, double b) {
    double d = std::fmod(a - b, kPi);
    if (d < 0) d += kPi;
    return std::min(d, kPi - d);
}

double fold_mod_pi(double a) {
    double d = std::fmod(a, kPi);
    if (d < 0) d += kPi;
    return d;
}

void check_balanced_top(const LaurentPolynomial& p, const char* who) {
    if (p.is_zero() || p.is_constant()) throw usage_error(std::string(who) + " needs a non-constant polynomial");
    const int n = p.degree();
    if (p.pole_order() != n) throw usage_error(std::string(who) + " needs pole order equal to degree");
    if (p.coeff(n).abs_sq() != p.coeff(-n).abs_sq())
        throw usage_error(std::string(who) + " needs |a_n| = |a_-n|");
}

}  // namespace

const char* to_string(GapVerdict v) {
    switch (v) {
        case GapVerdict::FINITE_GAP: return "FINITE_GAP";
        case GapVerdict::LINE_INFINITE_GAP: return "LINE_INFINITE_GAP";
        case GapVerdict::CONDITION_B_UNDETERMINED: return "CONDITION_B_UNDETERMINED";
    }
    throw internal_error("unknown verdict");
}

std::optional<GaussianRational> line_condition(const LaurentPolynomial& p) {
    if (p.is_zero() || p.is_constant()) return std::nullopt;
    const int n = p.degree();
    if (n < 1 || p.pole_order() != n) return std::nullopt;

    // eta p(T) has constant real part iff eta^2 a_k = -conj(a_{-k}) for
    // k = 1..n; the quotient must exist, be shared, and be unimodular.
    std::optional<GaussianRational> eta2;
    for (int k = 1; k <= n; ++k) {
        const GaussianRational ak = p.coeff(k);
        const GaussianRational amk = p.coeff(-k);
        if (ak.is_zero() != amk.is_zero()) return std::nullopt;
        if (ak.is_zero()) continue;
        if (ak.abs_sq() != amk.abs_sq()) return std::nullopt;
        GaussianRational q = -(amk.conj()) / ak;
        if (eta2 && *eta2 != q) return std::nullopt;
        if (!eta2) eta2 = std::move(q);
    }
    return eta2;  // set: k = n always lands in the a_k != 0 branch
}

ConditionBScan condition_b_scan(const LaurentPolynomial& p, double angle_tol) {
    check_balanced_top(p, "the angle analysis");
    if (line_condition(p)) throw usage_error("the image lies on a line; the angle analysis does not apply");
    if (!(angle_tol > 0)) throw usage_error("angle tolerance must be positive");

    const int n = p.degree();
    const GaussianRational an = p.coeff(n);
    const GaussianRational eta2 = -(p.coeff(-n).conj()) / an;

    // Largest k below n breaking the line identity; exact test. Such k
    // exists because k = n satisfies the identity by choice of eta^2.
    std::optional<int> K;
    for (int k = n - 1; k >= 1; --k)
        if (!(eta2 * p.coeff(k) + p.coeff(-k).conj()).is_zero()) {
            K = k;
            break;
        }
    if (!K) throw internal_error("line identity fails yet every index below n satisfies it");

    const std::complex<double> eta = std::sqrt(eta2.to_complex());
    const double alpha = std::arg(eta * an.to_complex());
    // c_K = eta a_K + conj(eta a_{-K}) = conj(eta) (eta^2 a_K + conj(a_{-K})),
    // with the parenthesized factor exact and nonzero.
    const GaussianRational dK = eta2 * p.coeff(*K) + p.coeff(-*K).conj();
    const double beta = std::arg(std::conj(eta) * dK.to_complex());

    ConditionBScan out;
    out.K = *K;
    out.min_gap = kPi;
    for (int j = 0; j < 2 * n; ++j) {
        const double theta_n = (kPi / 2 - alpha + j * kPi) / n;
        for (int l = 0; l < 2 * out.K; ++l) {
            const double theta_k = (-beta + l * kPi) / out.K;
            const double d = dist_mod_pi(theta_n, theta_k);
            if (d < out.min_gap) out.min_gap = d;
            if (d < angle_tol && !out.matched_angle) out.matched_angle = fold_mod_pi(theta_n);
        }
    }
    return out;
}

std::optional<std::pair<int, double>> condition_b(const LaurentPolynomial& p, double angle_tol) {
    ConditionBScan scan = condition_b_scan(p, angle_tol);
    if (scan.matched_angle) return std::make_pair(scan.K, *scan.matched_angle);
    return std::nullopt;
}

ClassificationReport classify(const LaurentPolynomial& p_in, double angle_tol) {
    const LaurentPolynomial p = normalize_orientation(p_in);
    ClassificationReport rep;
    const int n = p.degree();
    if (p.pole_order() < n) return rep;  // FINITE_GAP

    const GaussianRational an = p.coeff(n);
    const GaussianRational amn = p.coeff(-n);
    if (an.abs_sq() != amn.abs_sq()) return rep;  // no unimodular eta exists

    rep.eta_squared = -(amn.conj()) / an;
    if (line_condition(p)) {
        rep.verdict = GapVerdict::LINE_INFINITE_GAP;
        return rep;
    }

    ConditionBScan scan = condition_b_scan(p, angle_tol);
    rep.K = scan.K;
    rep.min_angle_gap = scan.min_gap;
    if (scan.matched_angle) {
        rep.verdict = GapVerdict::CONDITION_B_UNDETERMINED;
        rep.matched_angle = scan.matched_angle;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Top-form positivity certificate.

namespace {

// Dense univariate polynomial over the rationals, ascending coefficients.
using Poly = std::vector<BigRational>;

void trim(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly deriv(const Poly& a) {
    Poly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * BigRational(static_cast<long>(i)));
    trim(d);
    return d;
}

// Remainder of a by b over Q; b nonzero.
Poly rem(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        BigRational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly gcd_poly(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly div_exact_poly(const Poly& a, const Poly& b) {
    Poly r = a;
    trim(r);
    Poly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0);
    while (r.size() >= b.size()) {
        BigRational f = r.back() / b.back();
        q[r.size() - b.size()] = f;
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        r.pop_back();
        trim(r);
    }
    if (!r.empty()) throw internal_error("square-free division left a remainder");
    trim(q);
    return q;
}

int variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Number of distinct real roots of a square-free polynomial.
int real_root_count(const Poly& u) {
    if (u.size() <= 1) return 0;
    std::vector<Poly> chain{u, deriv(u)};
    while (!chain.back().empty()) {
        Poly r = rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    std::vector<int> at_minus, at_plus;
    for (const Poly& s : chain) {
        int lc = s.back().sign();
        at_plus.push_back(lc);
        at_minus.push_back((s.size() - 1) % 2 ? -lc : lc);
    }
    return variations(at_minus) - variations(at_plus);
}

}  // namespace

TopFormStatus top_form_positive(const BivariatePolynomial& h) {
    if (h.is_zero()) throw input_error("positivity certificate needs a nonzero polynomial");
    if (h.tag() != VarTag::XY) throw input_error("positivity certificate expects an (x, y) polynomial");

    const int d = h.degrees().total;
    const BivariatePolynomial H = h.homogeneous_part(d);
    if (d == 0) return TopFormStatus::BOUNDED_CERTIFIED;  // nonzero constant: empty zero set
    if (d % 2) return TopFormStatus::INCONCLUSIVE;        // odd form changes sign

    // Float screen on the circle; a non-positive sample settles it.
    const int samples = 4 * d;
    for (int i = 0; i < samples; ++i) {
        const double theta = 2 * kPi * i / samples;
        if (!(H.eval(std::cos(theta), std::sin(theta)) > 0)) return TopFormStatus::INCONCLUSIVE;
    }

    // Exact certificate: u(s) = H(1, s) positive on all of R, plus H(0, 1) > 0.
    // Then H(x, y) = x^d u(y/x) > 0 off the y-axis and H(0, y) = y^d H(0,1) > 0.
    Poly u(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) u[static_cast<size_t>(j)] = H.coeff(d - j, j).re;
    if (u[0].sign() <= 0) return TopFormStatus::INCONCLUSIVE;                       // H(1,0)
    if (u[static_cast<size_t>(d)].sign() <= 0) return TopFormStatus::INCONCLUSIVE;  // H(0,1)
    trim(u);
    Poly g = gcd_poly(u, deriv(u));
    Poly square_free = g.size() <= 1 ? u : div_exact_poly(u, g);
    if (real_root_count(square_free) != 0) return TopFormStatus::INCONCLUSIVE;
    return TopFormStatus::BOUNDED_CERTIFIED;
}

}  // namespace circim
