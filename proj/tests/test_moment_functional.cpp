#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "altpoly/errors.hpp"
#include "altpoly/families.hpp"
#include "altpoly/moment_functional.hpp"
#include "test_util.hpp"

using altpoly::MomentFunctional;
using altpoly::Polynomial;
using altpoly::Rational;

TEST_CASE("stored functional returns its prefix and rejects deeper queries") {
    const MomentFunctional u =
        MomentFunctional::stored({Rational(1), Rational(2), Rational(3)});
    CHECK(u.moment(0) == Rational(1));
    CHECK(u.moment(2) == Rational(3));
    CHECK(u.moments_upto(2) == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    try {
        u.moment(5);
        FAIL("expected MomentDepthExceeded");
    } catch (const altpoly::MomentDepthExceeded& e) {
        CHECK(e.asked == 5);
        CHECK(e.have == 3);
    }
}

TEST_CASE("generator receives the already-computed prefix") {
    const MomentFunctional u = MomentFunctional::from_generator(
        [](std::size_t k, const std::vector<Rational>& prefix) {
            if (k == 0) return Rational(1);
            return Rational(static_cast<long>(k)) * prefix[k - 1];
        });
    CHECK(u.moment(0) == Rational(1));
    CHECK(u.moment(4) == Rational(24));
    CHECK(u.moment(6) == Rational(720));
}

TEST_CASE("zero functional vanishes everywhere") {
    const MomentFunctional z = MomentFunctional::zero();
    for (std::size_t k = 0; k < 10; ++k) CHECK(z.moment(k).is_zero());
}

TEST_CASE("apply pairs a functional with a polynomial") {
    const MomentFunctional v = altpoly::legendre_moments();
    const Polynomial p({Rational(1), Rational(0), Rational(1)});  // 1 + x^2
    CHECK(altpoly::apply(v, p) == Rational(4, 3));
    CHECK(altpoly::apply(v, Polynomial::zero()) == Rational(0));
}

TEST_CASE("polynomial multiplication shifts and combines moments") {
    std::mt19937 rng(17);
    const MomentFunctional u = testutil::random_stored_functional(rng, 20);
    const MomentFunctional xu = altpoly::mul_poly(Polynomial::x(), u);
    for (std::size_t k = 0; k < 10; ++k) CHECK(xu.moment(k) == u.moment(k + 1));
    const Polynomial phi({Rational(-1), Rational(2), Rational(1)});
    const MomentFunctional pu = altpoly::mul_poly(phi, u);
    for (std::size_t k = 0; k < 10; ++k)
        CHECK(pu.moment(k) ==
              -u.moment(k) + Rational(2) * u.moment(k + 1) + u.moment(k + 2));
}

TEST_CASE("copies observe one shared cache consistently") {
    int calls = 0;
    const MomentFunctional u = MomentFunctional::from_generator(
        [&calls](std::size_t k, const std::vector<Rational>&) {
            ++calls;
            return Rational(static_cast<long>(k));
        });
    const MomentFunctional copy = u;
    CHECK(u.moment(5) == Rational(5));
    const int after_first = calls;
    CHECK(copy.moment(5) == Rational(5));
    CHECK(calls == after_first);
}

TEST_CASE("concurrent queries agree") {
    const MomentFunctional u = MomentFunctional::from_generator(
        [](std::size_t k, const std::vector<Rational>& prefix) {
            if (k == 0) return Rational(1);
            return prefix[k - 1] + Rational(static_cast<long>(k));
        });
    std::vector<std::thread> workers;
    std::vector<Rational> results(4, Rational(0));
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&u, &results, t] { results[static_cast<std::size_t>(t)] = u.moment(100); });
    for (std::thread& w : workers) w.join();
    for (const Rational& r : results) CHECK(r == Rational(5051));
}
