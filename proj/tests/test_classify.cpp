#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "circim/bivariate.hpp"
#include "circim/classify.hpp"
#include "circim/errors.hpp"
#include "circim/laurent.hpp"
#include "circim/numeric.hpp"
#include "circim/resultant.hpp"

using circim::BigRational;
using circim::BivariatePolynomial;
using circim::ClassificationReport;
using circim::GapVerdict;
using circim::GaussianRational;
using circim::LaurentPolynomial;
using circim::TopFormStatus;
using circim::VarTag;

namespace {

const LaurentPolynomial kBalanced{{1, GaussianRational(1)}, {-1, GaussianRational(1)}};
const LaurentPolynomial kQuadratic{{2, GaussianRational(1)}, {1, GaussianRational(3)}, {0, GaussianRational(1)}};
const LaurentPolynomial kUndetermined{{2, GaussianRational(1)}, {1, GaussianRational(1)}, {-2, GaussianRational(1)}};
const LaurentPolynomial kNoMatch{{2, GaussianRational(1)}, {1, GaussianRational(1)}, {-2, GaussianRational(-1)}};

BivariatePolynomial xy(std::initializer_list<std::tuple<int, int, long>> terms) {
    BivariatePolynomial h(VarTag::XY);
    for (const auto& [i, j, c] : terms) h.set_coeff(i, j, GaussianRational(c));
    return h;
}

}  // namespace

TEST_CASE("line detection: symmetric coefficients give a segment") {
    auto eta2 = circim::line_condition(kBalanced);
    REQUIRE(eta2.has_value());
    CHECK(*eta2 == GaussianRational(-1, 0));
}

TEST_CASE("line detection: i-twisted coefficients give a tilted segment") {
    LaurentPolynomial p{{1, GaussianRational(1)}, {-1, GaussianRational(0, 1)}};
    auto eta2 = circim::line_condition(p);
    REQUIRE(eta2.has_value());
    CHECK(*eta2 == GaussianRational(0, 1));
    CHECK(eta2->abs_sq() == BigRational(1));
}

TEST_CASE("line detection is absent when the pole is dominated") {
    CHECK_FALSE(circim::line_condition(kQuadratic).has_value());
}

TEST_CASE("line detection fails on modulus or quotient mismatch") {
    // |a_1| != |a_{-1}|
    LaurentPolynomial off{{1, GaussianRational(2)}, {-1, GaussianRational(1)}};
    CHECK_FALSE(circim::line_condition(off).has_value());
    // one-sided zero coefficient
    CHECK_FALSE(circim::line_condition(kUndetermined).has_value());
    // equal moduli but inconsistent quotients across k
    LaurentPolynomial mixed{{2, GaussianRational(1)}, {-2, GaussianRational(0, 1)},
                            {1, GaussianRational(1)}, {-1, GaussianRational(1)}};
    CHECK_FALSE(circim::line_condition(mixed).has_value());
}

TEST_CASE("line detection tolerates interior zero pairs") {
    // a_1 = a_{-1} = 0; only k = 2 constrains the quotient.
    LaurentPolynomial p{{2, GaussianRational(1)}, {-2, GaussianRational(1)}, {0, GaussianRational(5)}};
    auto eta2 = circim::line_condition(p);
    REQUIRE(eta2.has_value());
    CHECK(*eta2 == GaussianRational(-1, 0));
}

TEST_CASE("verdicts for the three reference polynomials") {
    CHECK(circim::classify(kQuadratic).verdict == GapVerdict::FINITE_GAP);

    ClassificationReport line = circim::classify(kBalanced);
    CHECK(line.verdict == GapVerdict::LINE_INFINITE_GAP);
    REQUIRE(line.eta_squared.has_value());
    CHECK(*line.eta_squared == GaussianRational(-1, 0));
    CHECK_FALSE(line.K.has_value());

    ClassificationReport undet = circim::classify(kUndetermined);
    CHECK(undet.verdict == GapVerdict::CONDITION_B_UNDETERMINED);
    REQUIRE(undet.K.has_value());
    CHECK(*undet.K == 1);
    REQUIRE(undet.matched_angle.has_value());
    CHECK(std::abs(*undet.matched_angle - std::numbers::pi / 2) < 1e-9);
    REQUIRE(undet.min_angle_gap.has_value());
    CHECK(*undet.min_angle_gap < 1e-9);
}

TEST_CASE("angle families that never meet give a finite verdict") {
    ClassificationReport rep = circim::classify(kNoMatch);
    CHECK(rep.verdict == GapVerdict::FINITE_GAP);
    REQUIRE(rep.K.has_value());
    CHECK(*rep.K == 1);
    REQUIRE(rep.min_angle_gap.has_value());
    CHECK(*rep.min_angle_gap > 0.5);  // families sit pi/4 apart
}

TEST_CASE("unequal extreme moduli short-circuit to a finite verdict") {
    LaurentPolynomial p{{2, GaussianRational(3)}, {1, GaussianRational(1)}, {-2, GaussianRational(1)}};
    ClassificationReport rep = circim::classify(p);
    CHECK(rep.verdict == GapVerdict::FINITE_GAP);
    CHECK_FALSE(rep.eta_squared.has_value());
    CHECK_FALSE(rep.K.has_value());
}

TEST_CASE("angle scan preconditions are enforced") {
    CHECK_THROWS_AS(circim::condition_b(kBalanced), circim::usage_error);   // line case
    CHECK_THROWS_AS(circim::condition_b(kQuadratic), circim::usage_error);  // m < n
    LaurentPolynomial unequal{{2, GaussianRational(3)}, {-2, GaussianRational(1)}, {1, GaussianRational(1)}};
    CHECK_THROWS_AS(circim::condition_b(unequal), circim::usage_error);
    CHECK_THROWS_AS(circim::condition_b(kUndetermined, 0.0), circim::usage_error);
}

TEST_CASE("angle scan returns the coincidence for the reference instance") {
    auto hit = circim::condition_b(kUndetermined);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 1);
    CHECK(std::abs(hit->second - std::numbers::pi / 2) < 1e-9);
    CHECK_FALSE(circim::condition_b(kNoMatch).has_value());
}

TEST_CASE("classification is invariant under unimodular-square scalings") {
    std::vector<GaussianRational> scalars{GaussianRational(2), GaussianRational(0, 1),
                                          GaussianRational(0, -3),
                                          GaussianRational(BigRational(3, 5), BigRational(4, 5))};
    for (const LaurentPolynomial* p : {&kBalanced, &kQuadratic, &kUndetermined, &kNoMatch}) {
        GapVerdict base = circim::classify(*p).verdict;
        for (const auto& c : scalars) CHECK(circim::classify(p->scaled(c)).verdict == base);
    }
}

TEST_CASE("line verdicts come with collinear samples") {
    for (const LaurentPolynomial& p :
         {kBalanced, LaurentPolynomial{{1, GaussianRational(1)}, {-1, GaussianRational(0, 1)}}}) {
        REQUIRE(circim::classify(p).verdict == GapVerdict::LINE_INFINITE_GAP);
        circim::CurveSample s = circim::sample_curve(p, 64);
        // Direction from the two most distant samples, then residuals.
        double ax = s.points[0].first, ay = s.points[0].second;
        double bx = ax, by = ay, best = -1;
        for (const auto& [x, y] : s.points) {
            double d = (x - ax) * (x - ax) + (y - ay) * (y - ay);
            if (d > best) best = d, bx = x, by = y;
        }
        double len = std::sqrt(best);
        REQUIRE(len > 0.1);
        for (const auto& [x, y] : s.points) {
            double cross = (bx - ax) * (y - ay) - (by - ay) * (x - ax);
            CHECK(std::abs(cross) / len < 1e-9);
        }
    }
}

TEST_CASE("a detected line makes re(eta p) exactly constant") {
    // eta^2 = -1 admits the exact representative eta = i.
    const GaussianRational eta(0, 1);
    GaussianRational first = eta * kBalanced.eval(circim::circle_point(BigRational(0)));
    for (int j = 1; j < 20; ++j) {
        GaussianRational v = eta * kBalanced.eval(circim::circle_point(BigRational(j, 3)));
        CHECK(v.re == first.re);
    }
}

TEST_CASE("an irrational eta keeps re(eta p) constant to float accuracy") {
    LaurentPolynomial p{{1, GaussianRational(1)}, {-1, GaussianRational(0, 1)}};
    auto eta2 = circim::line_condition(p);
    REQUIRE(eta2.has_value());
    std::complex<double> eta = std::sqrt(eta2->to_complex());
    circim::CurveSample s = circim::sample_curve(p, 64);
    double first = (eta * std::complex<double>(s.points[0].first, s.points[0].second)).real();
    for (const auto& [x, y] : s.points)
        CHECK(std::abs((eta * std::complex<double>(x, y)).real() - first) < 1e-9);
}

TEST_CASE("finite verdict at m = n implies both conditions are absent") {
    ClassificationReport rep = circim::classify(kNoMatch);
    REQUIRE(rep.verdict == GapVerdict::FINITE_GAP);
    CHECK_FALSE(circim::line_condition(kNoMatch).has_value());
    CHECK_FALSE(circim::condition_b(kNoMatch).has_value());
}

TEST_CASE("bounded certificates for definite top forms") {
    CHECK(circim::top_form_positive(xy({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}})) ==
          TopFormStatus::BOUNDED_CERTIFIED);
    CHECK(circim::top_form_positive(circim::compute_h(kQuadratic).h) ==
          TopFormStatus::BOUNDED_CERTIFIED);
    CHECK(circim::top_form_positive(xy({{4, 0, 1}, {0, 4, 1}})) == TopFormStatus::BOUNDED_CERTIFIED);
    CHECK(circim::top_form_positive(xy({{0, 0, 5}})) == TopFormStatus::BOUNDED_CERTIFIED);
}

TEST_CASE("top forms with real zero lines stay inconclusive") {
    CHECK(circim::top_form_positive(xy({{0, 2, -4}})) == TopFormStatus::INCONCLUSIVE);
    CHECK(circim::top_form_positive(xy({{3, 0, 1}, {1, 0, 1}})) == TopFormStatus::INCONCLUSIVE);
    // (x^2 - y^2)^2 vanishes on the diagonals.
    CHECK(circim::top_form_positive(xy({{4, 0, 1}, {2, 2, -2}, {0, 4, 1}})) ==
          TopFormStatus::INCONCLUSIVE);
    // (x + y)^2 vanishes on a single line.
    CHECK(circim::top_form_positive(xy({{2, 0, 1}, {1, 1, 2}, {0, 2, 1}})) ==
          TopFormStatus::INCONCLUSIVE);
}

TEST_CASE("top form check validates its input") {
    CHECK_THROWS_AS(circim::top_form_positive(BivariatePolynomial(VarTag::XY)), circim::input_error);
    BivariatePolynomial ww(VarTag::WWbar);
    ww.set_coeff(1, 1, GaussianRational(1));
    CHECK_THROWS_AS(circim::top_form_positive(ww), circim::input_error);
}
