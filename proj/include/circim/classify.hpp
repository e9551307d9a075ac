#pragma once

#include <optional>

#include "circim/bivariate.hpp"
#include "circim/laurent.hpp"

namespace circim {

enum class GapVerdict {
    FINITE_GAP,                ///< the algebraic set exceeds the circle image by finitely many points
    LINE_INFINITE_GAP,         ///< the image lies on a line, so the gap set is infinite
    CONDITION_B_UNDETERMINED,  ///< the necessary angle-coincidence condition holds; no verdict
};

const char* to_string(GapVerdict v);

struct ClassificationReport {
    GapVerdict verdict = GapVerdict::FINITE_GAP;
    /// -conj(a_{-n})/a_n; present when m = n and |a_n| = |a_{-n}| exactly.
    std::optional<GaussianRational> eta_squared;
    /// Largest k in {1..n-1} with eta^2 a_k + conj(a_{-k}) != 0; present when
    /// the angle analysis ran. Absent in the line case by definition.
    std::optional<int> K;
    /// Angle where the two zero-line families coincide (radians, mod pi).
    std::optional<double> matched_angle;
    /// Smallest distance mod pi between the two families, when analyzed.
    std::optional<double> min_angle_gap;
};

/// The common unimodular quotient -conj(a_{-k})/a_k over k = 1..n, when it
/// exists; that is the eta^2 making eta*p(T) have a constant real part.
/// Absent for m < n and whenever any k breaks the identity.
std::optional<GaussianRational> line_condition(const LaurentPolynomial& p);

/// Angle-coincidence test between the zero lines of re(eta a_n z^n) and of
/// im(c_K z^K). Requires m = n, no line, |a_n| = |a_{-n}|. Returns (K,
/// matched angle) when some pair of lines coincides within angle_tol.
std::optional<std::pair<int, double>> condition_b(const LaurentPolynomial& p, double angle_tol = 1e-9);

struct ConditionBScan {
    int K = 0;
    double min_gap = 0.0;                 ///< over all family pairs, distance mod pi
    std::optional<double> matched_angle;  ///< set when min_gap < angle_tol
};

/// Same analysis as condition_b with the full gap data exposed.
ConditionBScan condition_b_scan(const LaurentPolynomial& p, double angle_tol = 1e-9);

/// Decides the status of the gap set from the coefficients alone.
ClassificationReport classify(const LaurentPolynomial& p, double angle_tol = 1e-9);

enum class TopFormStatus {
    BOUNDED_CERTIFIED,  ///< top form provably positive away from the origin
    INCONCLUSIVE,
};

/// Certificate that the zero set of h is bounded: the top-degree homogeneous
/// part H is checked for positivity on the circle, first by float sampling,
/// then exactly (Sturm real-root count of the square-free part of H(1, s),
/// plus the signs of H(1, 0) and H(0, 1)).
TopFormStatus top_form_positive(const BivariatePolynomial& h);

}  // namespace circim
