#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "circim/bivariate.hpp"
#include "circim/errors.hpp"
#include "circim/laurent.hpp"

using circim::BigRational;
using circim::BivariatePolynomial;
using circim::GaussianRational;
using circim::LaurentPolynomial;
using circim::VarTag;

namespace {

std::mt19937 rng(911);

GaussianRational random_gaussian() {
    std::uniform_int_distribution<long> d(-9, 9);
    return {BigRational(d(rng), 1 + (d(rng) & 3)), BigRational(d(rng), 1 + (d(rng) & 3))};
}

// Frozen reference quartic used across the suite:
// x^4 + 2x^2y^2 + y^4 - 4x^3 - 4xy^2 - 5x^2 - 9y^2.
BivariatePolynomial frozen_quartic() {
    BivariatePolynomial h(VarTag::XY);
    h.set_coeff(4, 0, GaussianRational(1));
    h.set_coeff(2, 2, GaussianRational(2));
    h.set_coeff(0, 4, GaussianRational(1));
    h.set_coeff(3, 0, GaussianRational(-4));
    h.set_coeff(1, 2, GaussianRational(-4));
    h.set_coeff(2, 0, GaussianRational(-5));
    h.set_coeff(0, 2, GaussianRational(-9));
    return h;
}

}  // namespace

TEST_CASE("laurent evaluation at exact points") {
    LaurentPolynomial p{{2, GaussianRational(1)}, {1, GaussianRational(3)}, {0, GaussianRational(1)}};
    CHECK(p.eval(GaussianRational(1)) == GaussianRational(5));

    LaurentPolynomial q{{1, GaussianRational(1)}, {-1, GaussianRational(1)}};
    CHECK(q.eval(GaussianRational(0, 1)) == GaussianRational(0));
    CHECK_THROWS_AS(q.eval(GaussianRational(0)), circim::pole_error);
    CHECK(p.eval(GaussianRational(0)) == GaussianRational(1));  // no pole, fine at 0
}

TEST_CASE("laurent float evaluation matches the exact one") {
    LaurentPolynomial p{{2, GaussianRational(1, 1)}, {-1, GaussianRational(0, -2)}, {0, GaussianRational(3)}};
    GaussianRational z(BigRational(1, 2), BigRational(-1, 3));
    std::complex<double> exact = p.eval(z).to_complex();
    std::complex<double> approx = p.eval(z.to_complex());
    CHECK(std::abs(exact - approx) < 1e-12);
}

TEST_CASE("coefficient storage drops zeros and accumulates terms") {
    LaurentPolynomial p;
    p.add_term(3, GaussianRational(2));
    p.add_term(3, GaussianRational(-2));
    CHECK(p.is_zero());
    p.add_term(1, GaussianRational(1));
    p.add_term(-2, GaussianRational(5));
    CHECK(p.coeff(1) == GaussianRational(1));
    CHECK(p.coeff(7) == GaussianRational(0));
    CHECK(p.pole_order() == 2);
    CHECK(p.degree() == 1);
    CHECK(p.terms().size() == 2);
}

TEST_CASE("rational circle points lie exactly on the unit circle") {
    CHECK(circim::circle_point(BigRational(0)) == GaussianRational(1, 0));
    CHECK(circim::circle_point(BigRational(1)) == GaussianRational(0, 1));
    CHECK(circim::circle_point(BigRational(1, 2)) ==
          GaussianRational(BigRational(3, 5), BigRational(4, 5)));
    for (long j = -10; j <= 10; ++j) {
        GaussianRational z = circim::circle_point(BigRational(3 * j + 1, 7));
        CHECK(z.abs_sq() == BigRational(1));
    }
}

TEST_CASE("orientation normalization flips only when the pole dominates") {
    LaurentPolynomial p{{2, GaussianRational(1)}, {-3, GaussianRational(1)}};
    LaurentPolynomial flipped = circim::normalize_orientation(p);
    CHECK(flipped == LaurentPolynomial{{3, GaussianRational(1)}, {-2, GaussianRational(1)}});

    LaurentPolynomial balanced{{1, GaussianRational(1)}, {-1, GaussianRational(1)}};
    CHECK(circim::normalize_orientation(balanced) == balanced);

    CHECK_THROWS_AS(circim::normalize_orientation(LaurentPolynomial::constant(GaussianRational(4))),
                    circim::input_error);
    CHECK_THROWS_AS(circim::normalize_orientation(LaurentPolynomial{}), circim::input_error);
}

TEST_CASE("a flipped polynomial evaluates as the original at the inverse point") {
    LaurentPolynomial p{{1, GaussianRational(2, 1)}, {-3, GaussianRational(0, 5)}, {0, GaussianRational(7)}};
    LaurentPolynomial q = circim::normalize_orientation(p);
    for (int i = 0; i < 10; ++i) {
        GaussianRational z = random_gaussian();
        if (z.is_zero()) continue;
        CHECK(q.eval(z) == p.eval(z.inverse()));
    }
}

TEST_CASE("normalization preserves the circle image pointwise under t -> -t") {
    LaurentPolynomial p{{1, GaussianRational(1, 2)}, {-4, GaussianRational(3, -1)}};
    LaurentPolynomial q = circim::normalize_orientation(p);
    for (int j = 0; j < 32; ++j) {
        double t = 2.0 * 3.14159265358979323846 * j / 32;
        std::complex<double> a = p.eval(std::complex<double>(std::cos(t), std::sin(t)));
        std::complex<double> b = q.eval(std::complex<double>(std::cos(t), -std::sin(t)));
        CHECK(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("bivariate evaluation treats the variables as independent") {
    BivariatePolynomial circle(VarTag::XY);
    circle.set_coeff(2, 0, GaussianRational(1));
    circle.set_coeff(0, 2, GaussianRational(1));
    circle.set_coeff(0, 0, GaussianRational(-1));
    CHECK(circle.eval(GaussianRational(1), GaussianRational(0)) == GaussianRational(0));

    CHECK(frozen_quartic().eval(GaussianRational(5), GaussianRational(0)) == GaussianRational(0));

    BivariatePolynomial minus4y2(VarTag::XY);
    minus4y2.set_coeff(0, 2, GaussianRational(-4));
    for (long x : {-3L, 7L}) {
        CHECK(minus4y2.eval(GaussianRational(BigRational(x)), GaussianRational(0)) ==
              GaussianRational(0));
    }
    CHECK(minus4y2.eval(GaussianRational(BigRational(1, 2)), GaussianRational(0)) ==
          GaussianRational(0));
    // (w, wbar) without the conjugacy constraint: w * wbar at (2, 3) is 6.
    BivariatePolynomial prod(VarTag::WWbar);
    prod.set_coeff(1, 1, GaussianRational(1));
    CHECK(prod.eval(GaussianRational(2), GaussianRational(3)) == GaussianRational(6));
}

TEST_CASE("degree queries report total and per-variable degrees") {
    BivariatePolynomial h(VarTag::WWbar);
    h.set_coeff(3, 1, GaussianRational(1));
    auto d = h.degrees();
    CHECK(d.total == 4);
    CHECK(d.first == 3);
    CHECK(d.second == 1);

    BivariatePolynomial minus4y2(VarTag::XY);
    minus4y2.set_coeff(0, 2, GaussianRational(-4));
    CHECK(minus4y2.degrees().total == 2);

    CHECK_THROWS_AS(BivariatePolynomial(VarTag::XY).degrees(), circim::input_error);
}

TEST_CASE("homogeneous part picks exactly one total degree") {
    BivariatePolynomial h = frozen_quartic();
    BivariatePolynomial top = h.homogeneous_part(4);
    CHECK(top.coeff(4, 0) == GaussianRational(1));
    CHECK(top.coeff(2, 2) == GaussianRational(2));
    CHECK(top.coeff(0, 4) == GaussianRational(1));
    CHECK(top.terms().size() == 3);
    CHECK(h.homogeneous_part(1).is_zero());
}

TEST_CASE("substitution w = x+iy realizes hermitian polynomials over the reals") {
    BivariatePolynomial hC(VarTag::WWbar);
    hC.set_coeff(1, 1, GaussianRational(1));
    hC.set_coeff(0, 0, GaussianRational(-1));
    BivariatePolynomial h = circim::substitute_real(hC);
    CHECK(h.tag() == VarTag::XY);
    CHECK(h.coeff(2, 0) == GaussianRational(1));
    CHECK(h.coeff(0, 2) == GaussianRational(1));
    CHECK(h.coeff(0, 0) == GaussianRational(-1));
    CHECK(h.terms().size() == 3);
}

TEST_CASE("substitution turns (w - wbar)^2 into -4y^2") {
    BivariatePolynomial hC(VarTag::WWbar);
    hC.set_coeff(2, 0, GaussianRational(1));
    hC.set_coeff(1, 1, GaussianRational(-2));
    hC.set_coeff(0, 2, GaussianRational(1));
    BivariatePolynomial h = circim::substitute_real(hC);
    CHECK(h.coeff(0, 2) == GaussianRational(-4));
    CHECK(h.terms().size() == 1);
}

TEST_CASE("substitution rejects polynomials with nonreal realization") {
    BivariatePolynomial hC(VarTag::WWbar);
    hC.set_coeff(1, 0, GaussianRational(1));  // bare w -> x+iy is not real
    CHECK_THROWS_AS(circim::substitute_real(hC), circim::realization_error);
    BivariatePolynomial xy(VarTag::XY);
    xy.set_coeff(1, 0, GaussianRational(1));
    CHECK_THROWS_AS(circim::substitute_real(xy), circim::usage_error);
}

TEST_CASE("substitution is linear over real rational scalars") {
    auto hermitian = [&]() {
        BivariatePolynomial f(VarTag::WWbar);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= i; ++j) {
                GaussianRational c = random_gaussian();
                if (i == j) c = GaussianRational(c.re);  // diagonal must be real
                f.add_term(i, j, c);
                if (i != j) f.add_term(j, i, c.conj());
            }
        return f;
    };
    for (int trial = 0; trial < 8; ++trial) {
        BivariatePolynomial f = hermitian(), g = hermitian();
        GaussianRational a(BigRational(3, 2)), b(BigRational(-2, 5));
        BivariatePolynomial lhs = circim::substitute_real(f.scaled(a) + g.scaled(b));
        BivariatePolynomial rhs =
            circim::substitute_real(f).scaled(a) + circim::substitute_real(g).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("substitution preserves total degree") {
    BivariatePolynomial hC(VarTag::WWbar);
    hC.set_coeff(2, 2, GaussianRational(3));
    hC.set_coeff(1, 1, GaussianRational(-1));
    BivariatePolynomial h = circim::substitute_real(hC);
    CHECK(h.degrees().total == hC.degrees().total);
    for (const auto& [ij, c] : h.terms()) CHECK(c.is_real());
}

TEST_CASE("float evaluation of a realized polynomial matches exact evaluation") {
    BivariatePolynomial h = frozen_quartic();
    for (int i = 0; i < 10; ++i) {
        GaussianRational x = random_gaussian(), y = random_gaussian();
        double exact = h.eval(GaussianRational(x.re), GaussianRational(y.re)).re.to_double();
        double approx = h.eval(x.re.to_double(), y.re.to_double());
        CHECK(exact == doctest::Approx(approx).epsilon(1e-9));
    }
}
