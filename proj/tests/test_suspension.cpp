#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "goodman/suspension.hpp"

#include <random>

using namespace goodman;

namespace {

const Mat2Z kCat{2, 1, 1, 1};

QuadExt surd5(long long pn, long long pd, long long qn, long long qd) {
    return QuadExt(Rational(pn, pd), Rational(qn, qd), 5);
}

}  // namespace

TEST_CASE("cat map eigen data") {
    SuspensionFlow flow(kCat);
    CHECK(flow.discriminant() == 5);
    CHECK(flow.lambda() == surd5(3, 2, 1, 2));  // (3+sqrt5)/2
    // u = ((1+sqrt5)/2, 1), s = ((1-sqrt5)/2, 1)
    CHECK(flow.unstableDir().x == surd5(1, 2, 1, 2));
    CHECK(flow.stableDir().x == surd5(1, 2, -1, 2));

    // A u = lambda u and A s = lambda^{-1} s, checked componentwise.
    const auto& A = flow.monodromy();
    const QuadExt a{Rational(A.a)}, b{Rational(A.b)}, c{Rational(A.c)}, d{Rational(A.d)};
    const QuadExt ux = flow.unstableDir().x;
    CHECK(a * ux + b == flow.lambda() * ux);
    CHECK(c * ux + d == flow.lambda());
    const QuadExt sx = flow.stableDir().x;
    CHECK(a * sx + b == flow.lambda().inverse() * sx);
    CHECK(c * sx + d == flow.lambda().inverse());
}

TEST_CASE("frame slope on the cat map") {
    SuspensionFlow flow(kCat);
    CHECK(flow.frameSlope({Rational(1), Rational(0)}) ==
          ExtendedSlope::finite(QuadExt(Rational(-1))));
    // Class (0,1) direction has slope lambda.
    CHECK(flow.frameSlope({Rational(0), Rational(1)}) ==
          ExtendedSlope::finite(flow.lambda()));
    CHECK_THROWS_AS(flow.frameSlope({Rational(0), Rational(0)}), ZeroDirection);
    CHECK_THROWS_AS(flow.frameSlope({Rational(1), Rational(0)}, Rational(1, 3)),
                    UnsupportedTime);
}

TEST_CASE("pure eigen directions") {
    // Stable/unstable rational proxies do not exist; use a flow whose frame
    // decomposition we exercise through exact identities instead. Any rational
    // direction decomposes with both coefficients nonzero unless the direction
    // is an eigendirection, which is irrational for hyperbolic SL(2,Z); so we
    // check the Infinite/zero branches via the decomposition directly.
    SuspensionFlow flow(kCat);
    auto [a, c] = flow.frameDecompose({Rational(1), Rational(0)});
    CHECK(a.sign() != 0);
    CHECK(c.sign() != 0);
    // Reconstruct: a*s + c*u = v.
    CHECK(a * flow.stableDir().x + c * flow.unstableDir().x == QuadExt(Rational(1)));
    CHECK(a + c == QuadExt(Rational(0)));
}

TEST_CASE("slope transport is the exact lambda^{-2k} rule") {
    SuspensionFlow flow(kCat);
    auto one = ExtendedSlope::finite(QuadExt(Rational(1)));
    CHECK(flow.slopeTransport(one, 0) == one);
    CHECK(flow.slopeTransport(one, 1) ==
          ExtendedSlope::finite(surd5(7, 2, -3, 2)));  // lambda^{-2} = (7-3sqrt5)/2
    CHECK(flow.slopeTransport(ExtendedSlope::infinite(), 4) == ExtendedSlope::infinite());

    // Multiplicativity: transport by k1 then k2 equals transport by k1+k2.
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> ks(0, 12);
    std::uniform_int_distribution<long long> ns(-20, 20);
    for (int i = 0; i < 100; ++i) {
        const long long k1 = ks(rng), k2 = ks(rng);
        auto m = ExtendedSlope::finite(QuadExt(Rational(ns(rng), 7)));
        CHECK(flow.slopeTransport(flow.slopeTransport(m, k1), k2) ==
              flow.slopeTransport(m, k1 + k2));
    }
}

TEST_CASE("frame slope is constant along monodromy transport") {
    // frame_slope(A v, t+1) = frame_slope(v, t), exactly.
    for (const Mat2Z& m : {kCat, Mat2Z{3, 1, 2, 1}, Mat2Z{5, 2, 2, 1}, Mat2Z{-2, -1, -1, -1}}) {
        SuspensionFlow flow(m);
        std::mt19937 rng(11);
        std::uniform_int_distribution<long long> ns(-9, 9);
        for (int i = 0; i < 50; ++i) {
            Vec2Q v{Rational(ns(rng)), Rational(ns(rng))};
            if (v.isZero()) continue;
            Vec2Q av{Rational(m.a) * v.x + Rational(m.b) * v.y,
                     Rational(m.c) * v.x + Rational(m.d) * v.y};
            for (long long t = -2; t <= 2; ++t) {
                CHECK(flow.frameSlope(av, Rational(t + 1)) == flow.frameSlope(v, Rational(t)));
            }
        }
    }
}

TEST_CASE("constructor rejects non-hyperbolic input") {
    CHECK_THROWS(SuspensionFlow(Mat2Z{1, 1, 0, 1}));
    CHECK_THROWS(SuspensionFlow(Mat2Z{0, -1, 1, 0}));
    CHECK_THROWS(SuspensionFlow(Mat2Z{2, 1, 1, 2}));  // det 3
}

TEST_CASE("negative trace monodromy") {
    SuspensionFlow flow(Mat2Z{-2, -1, -1, -1});
    CHECK(flow.eigenSign() == -1);
    CHECK(flow.lambda() > QuadExt(Rational(1)));
    CHECK(flow.discriminant() == 5);
}
