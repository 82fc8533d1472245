#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "goodman/local_model.hpp"

#include <cmath>

using namespace goodman;

namespace {

LocalHyperbolicModel model2(const Rational& top) {
    LocalHyperbolicModel m;
    m.lambda = Rational(2);
    m.transversal_top = top;
    return m;
}

}  // namespace

TEST_CASE("slope zero first return contracts toward the orbit trace") {
    const auto m = model2(Rational(4));
    for (double s : {0.1, 0.5, 1.0, 2.0, 3.9}) {
        const double r = localFirstReturn(m, 0.0, s);
        CHECK(r == doctest::Approx(s / 2.0));
        CHECK(r < s);
    }
    CHECK(localFirstReturn(m, 0.0, 0.0) == 0.0);
}

TEST_CASE("steep negative slopes push the return away from the trace") {
    const auto m = model2(Rational(64));
    for (double s : {0.5, 1.0, 2.0}) {
        CHECK(localFirstReturn(m, -10.0, s) > s);
        CHECK(localFirstReturn(m, -40.0, s) > localFirstReturn(m, -10.0, s));
    }
}

TEST_CASE("first return is monotone decreasing in the slope") {
    const auto m = model2(Rational(32));
    for (double s : {0.25, 1.0, 3.0, 7.5}) {
        double prev = localFirstReturn(m, -20.0, s);
        for (double slope : {-10.0, -5.0, -1.0, -0.5, 0.0}) {
            const double cur = localFirstReturn(m, slope, s);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("trajectories leaving the model domain are rejected") {
    const auto m = model2(Rational(4));
    CHECK_THROWS_AS(localFirstReturn(m, 5.0, 1.0), EscapedQuadrant);
    CHECK_THROWS_AS(localFirstReturn(m, -8.0, 1.0), EscapedQuadrant);
    CHECK_THROWS_AS(localFirstReturn(m, 0.0, 5.0), EscapedQuadrant);
    CHECK_THROWS_AS(localFirstReturn(m, 0.0, -0.25), EscapedQuadrant);
    CHECK_NOTHROW(localFirstReturn(m, -1.0, 1.0));
}

TEST_CASE("bisection finds the slope fixing the transversal midpoint") {
    const auto m = model2(Rational(4));
    auto family = [&](double slope, double s) { return localFirstReturn(m, slope, s); };
    auto target = [](double s) { return s; };

    SUBCASE("default tolerance") {
        const auto r = findInvariantSlope(family, target, -2.0, 0.0, 2.0);
        CHECK(r.residual < 1e-9);
        CHECK(r.x == 2.0);
        CHECK(r.m == doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(localFirstReturn(m, r.m, 2.0) == doctest::Approx(2.0));
    }

    SUBCASE("60 plain bisection steps") {
        const auto r = findInvariantSlope(family, target, -2.0, 0.0, 2.0, 0.0, 60);
        CHECK(r.iterations == 60);
        CHECK(r.residual < 1e-12);
        CHECK(r.m == doctest::Approx(-1.0).epsilon(1e-13));
    }
}

TEST_CASE("intermediate value bracket: contraction at 0, expansion far left") {
    const auto m = model2(Rational(64));
    auto family = [&](double slope, double s) { return localFirstReturn(m, slope, s); };
    auto target = [](double s) { return s; };
    for (double x : {0.5, 1.0, 4.0, 9.0}) {
        const auto r = findInvariantSlope(family, target, -30.0, 0.0, x);
        CHECK(r.residual < 1e-9);
        CHECK(r.m > -30.0);
        CHECK(r.m < 0.0);
        // f_m has its fixed point at s = -2m for lambda = 2.
        CHECK(r.m == doctest::Approx(-x / 2.0).epsilon(1e-7));
    }
}

TEST_CASE("degenerate constant family returns an endpoint with zero residual") {
    auto family = [](double, double s) { return s; };
    auto target = [](double s) { return s; };
    const auto r = findInvariantSlope(family, target, -3.0, 5.0, 1.25);
    CHECK(r.m == -3.0);
    CHECK(r.residual == 0.0);
    CHECK(r.iterations == 0);
}

TEST_CASE("missing sign change is reported, not silently bisected") {
    const auto m = model2(Rational(16));
    auto family = [&](double slope, double s) { return localFirstReturn(m, slope, s); };
    auto far = [](double) { return 100.0; };
    CHECK_THROWS_AS(findInvariantSlope(family, far, -2.0, 0.0, 1.0), NoSignChange);
}

TEST_CASE("model validation") {
    LocalHyperbolicModel bad;
    bad.lambda = Rational(1);
    CHECK_THROWS_AS(bad.validate(), Error);
    bad.lambda = Rational(2);
    bad.quadrant_s = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad.quadrant_s = -1;
    CHECK_NOTHROW(bad.validate());
}
