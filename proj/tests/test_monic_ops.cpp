#include <doctest.h>

#include "altpoly/errors.hpp"
#include "altpoly/families.hpp"
#include "altpoly/monic_ops.hpp"

using altpoly::MomentFunctional;
using altpoly::Polynomial;
using altpoly::Rational;

TEST_CASE("legendre-type moments give the classical monic sequence") {
    const altpoly::MonicOPS ops = altpoly::mops_from_functional(altpoly::legendre_moments(), 4);
    const Polynomial x = Polynomial::x();
    CHECK(ops.polys[0] == Polynomial::one());
    CHECK(ops.polys[1] == x);
    CHECK(ops.polys[2] == x * x - Polynomial(Rational(1, 3)));
    CHECK(ops.polys[3] == x * x * x - Rational(3, 5) * x);
    for (std::size_t n = 0; n < 4; ++n) CHECK(ops.beta[n] == Rational(0));
    CHECK(ops.gamma[0] == Rational(0));
    CHECK(ops.gamma[1] == Rational(1, 3));
    CHECK(ops.gamma[2] == Rational(4, 15));
    CHECK(ops.gamma[3] == Rational(9, 35));
}

TEST_CASE("non-regular prefixes are reported with their degree") {
    try {
        altpoly::mops_from_functional(MomentFunctional::zero(), 2);
        FAIL("expected NotRegularUpTo");
    } catch (const altpoly::NotRegularUpTo& e) {
        CHECK(e.degree == 0);
    }
    const MomentFunctional u = MomentFunctional::stored(
        {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)});
    try {
        altpoly::mops_from_functional(u, 2);
        FAIL("expected NotRegularUpTo");
    } catch (const altpoly::NotRegularUpTo& e) {
        CHECK(e.degree == 1);
    }
}

TEST_CASE("recurrence fit recovers coefficients from a valid prefix") {
    const Polynomial x = Polynomial::x();
    const std::vector<Polynomial> family{Polynomial::one(), x - Polynomial(1), x * x};
    const altpoly::RecurrenceData fit = altpoly::recurrence_fit(family);
    CHECK(fit.beta[0] == Rational(1));
    CHECK(fit.beta[1] == Rational(-1));
    CHECK(fit.gamma[0] == Rational(0));
    CHECK(fit.gamma[1] == Rational(-1));
    // expansion oracle: the fitted coefficients must reproduce the member
    CHECK((x - Polynomial(fit.beta[1])) * family[1] - Rational(fit.gamma[1]) * family[0] ==
          family[2]);
}

TEST_CASE("recurrence fit round-trips a constructed sequence") {
    const altpoly::LaguerreParams p{Rational(1, 2), Rational(1)};
    const altpoly::MonicOPS ops =
        altpoly::mops_from_functional(altpoly::laguerre_family_moments(p), 6);
    const altpoly::RecurrenceData fit = altpoly::recurrence_fit(ops.polys);
    CHECK(fit.beta == ops.beta);
    CHECK(fit.gamma == ops.gamma);
}

TEST_CASE("recurrence fit rejects structural defects") {
    const Polynomial x = Polynomial::x();
    try {
        altpoly::recurrence_fit({Polynomial::one(), x, x * x * x});
        FAIL("expected NotAnOPSCandidate");
    } catch (const altpoly::NotAnOPSCandidate& e) {
        CHECK(e.index == 2);
    }
    try {
        altpoly::recurrence_fit({Polynomial::one(), Rational(2) * x});
        FAIL("expected NotAnOPSCandidate");
    } catch (const altpoly::NotAnOPSCandidate& e) {
        CHECK(e.index == 1);
    }
    // residual failure: no beta, gamma turn x^3 + 1 into a step from x^2 and x - 1
    try {
        altpoly::recurrence_fit(
            {Polynomial::one(), x - Polynomial(1), x * x, x * x * x + Polynomial(1)});
        FAIL("expected NotAnOPSCandidate");
    } catch (const altpoly::NotAnOPSCandidate& e) {
        CHECK(e.index == 3);
    }
}

TEST_CASE("recurrence fit flags vanishing gamma") {
    const Polynomial x = Polynomial::x();
    try {
        altpoly::recurrence_fit({Polynomial::one(), x, x * x, x * x * x});
        FAIL("expected DegenerateRecurrence");
    } catch (const altpoly::DegenerateRecurrence& e) {
        CHECK(e.index == 1);
    }
}
