#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "goodman/metric.hpp"

#include <cmath>

using namespace goodman;

namespace {

SuspensionFlow catFlow() {
    return SuspensionFlow(Mat2Z{2, 1, 1, 1});
}

}  // namespace

TEST_CASE("flat seed on the cat map has orthogonal eigendirections") {
    const auto flow = catFlow();
    const auto g = MetricSample::flatSeed(flow, 8, 4);
    CHECK(std::abs(g.at(3, 5, 2)[1]) < 1e-12);
    CHECK_NOTHROW(g.requirePositiveDefinite());
    // Already a verified contraction/expansion at rate lambda before averaging.
    const double lam = flow.lambda().toDouble();
    CHECK(verifiedMargin(flow, g) == doctest::Approx(lam).epsilon(1e-12));
}

TEST_CASE("instantaneous sample evaluates to the lambda-power profile") {
    const auto flow = catFlow();
    const double lam = flow.lambda().toDouble();
    const auto g = MetricSample::instantaneous(flow, 8, 64);
    for (double t : {0.0, 0.3, 0.77, 0.999}) {
        const auto v = g.evaluate(flow, 0.13, 0.58, t);
        CHECK(v[0] == doctest::Approx(std::pow(lam, -2.0 * t)).epsilon(2e-4));
        CHECK(v[1] == 0.0);
        CHECK(v[2] == doctest::Approx(std::pow(lam, 2.0 * t)).epsilon(2e-4));
    }
    // Gluing continuity: t -> 1 matches the rescaled slice at t = 0.
    const auto top = g.evaluate(flow, 0.25, 0.5, 1.0);
    CHECK(top[0] == doctest::Approx(1.0 / (lam * lam)).epsilon(1e-12));
    CHECK(top[2] == doctest::Approx(lam * lam).epsilon(1e-12));
}

TEST_CASE("averaging the flat seed keeps the full lambda margin") {
    const auto flow = catFlow();
    const double lam = flow.lambda().toDouble();
    const auto g0 = MetricSample::flatSeed(flow, 16, 4);
    const auto avg = averageMetric(flow, g0, 2.0, 64);
    CHECK_NOTHROW(avg.sample.requirePositiveDefinite());
    CHECK(avg.lambda_bar == doctest::Approx(lam).epsilon(1e-9));
    CHECK(avg.margin == doctest::Approx(lam - 1.0).epsilon(1e-8));
}

TEST_CASE("margin is nondecreasing in the averaging time on the flat seed") {
    const auto flow = catFlow();
    const auto g0 = MetricSample::flatSeed(flow, 8, 4);
    double prev = 0.0;
    for (double T : {2.0, 4.0, 8.0, 16.0}) {
        const auto avg = averageMetric(flow, g0, T, 64);
        CHECK(avg.lambda_bar >= prev - 1e-9);
        prev = avg.lambda_bar;
    }
}

TEST_CASE("instantaneous seed keeps at least its own margin after averaging") {
    const auto flow = catFlow();
    const auto g0 = MetricSample::instantaneous(flow, 8, 16);
    const double before = verifiedMargin(flow, g0);
    const auto avg = averageMetric(flow, g0, 4.0, 64);
    CHECK(avg.lambda_bar >= before - 1e-6);
}

TEST_CASE("a spiked seed needs a long averaging time") {
    const auto flow = catFlow();
    MetricSample g0 = MetricSample::flatSeed(flow, 8, 2);
    for (std::size_t k = 0; k < g0.nT(); ++k) {
        auto& v = g0.at(1, 0, k);
        v[0] *= 1000.0;
        v[2] *= 1000.0;
    }
    CHECK_NOTHROW(g0.requirePositiveDefinite());
    CHECK_THROWS_AS(averageMetric(flow, g0, 1.0, 64), TTooSmall);
    const auto avg = averageMetric(flow, g0, 16.0, 64);
    CHECK(avg.margin > 0.0);
}

TEST_CASE("degenerate inputs are rejected") {
    const auto flow = catFlow();
    MetricSample bad = MetricSample::flatSeed(flow, 4, 2);
    bad.at(2, 1, 0)[0] = -1.0;
    CHECK_THROWS_AS(averageMetric(flow, bad, 2.0, 64), NotPositiveDefinite);
    const auto g0 = MetricSample::flatSeed(flow, 4, 2);
    CHECK_THROWS_AS(averageMetric(flow, g0, 0.0, 64), TTooSmall);
    CHECK_THROWS_AS(MetricSample(0, 2, 1, 0, 1), Error);
}
