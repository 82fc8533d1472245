#include "goodman/metric.hpp"

#include "goodman/errors.hpp"
#include "goodman/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

namespace goodman {

namespace {

long long asLL(const Int& v) { return v.convert_to<long long>(); }

// Monodromy action on grid indices, exact mod n.
std::pair<long long, long long> applyGrid(const Mat2Z& A, long long i, long long j,
                                          long long n) {
    long long x = (asLL(A.a) % n * i + asLL(A.b) % n * j) % n;
    long long y = (asLL(A.c) % n * i + asLL(A.d) % n * j) % n;
    if (x < 0) x += n;
    if (y < 0) y += n;
    return {x, y};
}

double frac01(double v) {
    double f = v - std::floor(v);
    if (f >= 1.0) f = 0.0;
    return f;
}

}  // namespace

MetricSample::MetricSample(std::size_t n_xy, std::size_t n_t, double gss, double gsu,
                           double guu)
    : n_xy_(n_xy), n_t_(n_t), data_(n_xy * n_xy * n_t, {gss, gsu, guu}) {
    if (n_xy == 0 || n_t == 0) throw Error("MetricSample: empty grid");
}

void MetricSample::requirePositiveDefinite() const {
    for (std::size_t k = 0; k < n_t_; ++k)
        for (std::size_t j = 0; j < n_xy_; ++j)
            for (std::size_t i = 0; i < n_xy_; ++i) {
                const auto& g = at(i, j, k);
                const double det = g[0] * g[2] - g[1] * g[1];
                if (!(g[0] > 0) || !(det > 0)) {
                    throw NotPositiveDefinite(
                        "metric sample not positive-definite at grid (" +
                        std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + ")");
                }
            }
}

std::array<double, 3> MetricSample::evaluate(const SuspensionFlow& flow, double x,
                                             double y, double t) const {
    const double n = static_cast<double>(n_xy_);
    x = frac01(x);
    y = frac01(y);
    if (t < 0 || t > 1) t = frac01(t);

    auto bilin = [&](std::size_t k, double px, double py) -> std::array<double, 3> {
        const double sx = px * n, sy = py * n;
        const std::size_t i0 = std::min<std::size_t>(n_xy_ - 1, static_cast<std::size_t>(sx));
        const std::size_t j0 = std::min<std::size_t>(n_xy_ - 1, static_cast<std::size_t>(sy));
        const double wx = sx - static_cast<double>(i0);
        const double wy = sy - static_cast<double>(j0);
        const std::size_t i1 = (i0 + 1) % n_xy_, j1 = (j0 + 1) % n_xy_;
        const auto &g00 = at(i0, j0, k), &g10 = at(i1, j0, k);
        const auto &g01 = at(i0, j1, k), &g11 = at(i1, j1, k);
        std::array<double, 3> out;
        for (int e = 0; e < 3; ++e) {
            out[e] = (1 - wx) * (1 - wy) * g00[e] + wx * (1 - wy) * g10[e] +
                     (1 - wx) * wy * g01[e] + wx * wy * g11[e];
        }
        return out;
    };

    const double st = t * static_cast<double>(n_t_);
    const std::size_t k0 = std::min<std::size_t>(n_t_ - 1, static_cast<std::size_t>(st));
    const double wt = st - static_cast<double>(k0);

    const auto lo = bilin(k0, x, y);
    std::array<double, 3> hi;
    if (k0 + 1 < n_t_) {
        hi = bilin(k0 + 1, x, y);
    } else {
        // Top slice wraps through the gluing (x, 1) ~ (A x, 0); in the
        // eigenbasis the identification rescales by diag(1/lambda, lambda).
        const Mat2Z& A = flow.monodromy();
        const double ax = frac01(asLL(A.a) * x + asLL(A.b) * y);
        const double ay = frac01(asLL(A.c) * x + asLL(A.d) * y);
        hi = bilin(0, ax, ay);
        const double lam2 = std::pow(flow.lambda().toDouble(), 2.0);
        hi[0] /= lam2;
        hi[2] *= lam2;
    }
    return {(1 - wt) * lo[0] + wt * hi[0], (1 - wt) * lo[1] + wt * hi[1],
            (1 - wt) * lo[2] + wt * hi[2]};
}

MetricSample MetricSample::flatSeed(const SuspensionFlow& flow, std::size_t n_xy,
                                    std::size_t n_t) {
    const double sx = flow.stableDir().x.toDouble();
    const double ux = flow.unstableDir().x.toDouble();
    return MetricSample(n_xy, n_t, sx * sx + 1, sx * ux + 1, ux * ux + 1);
}

MetricSample MetricSample::instantaneous(const SuspensionFlow& flow, std::size_t n_xy,
                                         std::size_t n_t) {
    MetricSample g(n_xy, n_t, 1, 0, 1);
    const double lam = flow.lambda().toDouble();
    for (std::size_t k = 0; k < n_t; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n_t);
        const double gss = std::pow(lam, -2.0 * t);
        for (std::size_t j = 0; j < n_xy; ++j)
            for (std::size_t i = 0; i < n_xy; ++i) g.at(i, j, k) = {gss, 0, 1.0 / gss};
    }
    return g;
}

double verifiedMargin(const SuspensionFlow& flow, const MetricSample& g) {
    const long long n = static_cast<long long>(g.nXY());
    const double lam = flow.lambda().toDouble();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < g.nT(); ++k)
        for (long long j = 0; j < n; ++j)
            for (long long i = 0; i < n; ++i) {
                const auto [ai, aj] = applyGrid(flow.monodromy(), i, j, n);
                const auto& here = g.at(static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(j), k);
                const auto& there = g.at(static_cast<std::size_t>(ai),
                                         static_cast<std::size_t>(aj), k);
                // One period: stable vectors scale by 1/lambda, unstable by
                // lambda, landing at the monodromy image point.
                const double contraction = lam * std::sqrt(here[0] / there[0]);
                const double expansion = lam * std::sqrt(there[2] / here[2]);
                best = std::min(best, std::min(contraction, expansion));
            }
    return best;
}

AveragedMetric averageMetric(const SuspensionFlow& flow, const MetricSample& g0,
                             double T, std::size_t nodes_per_unit) {
    if (!(T > 0)) throw TTooSmall("averageMetric: T must be positive");
    g0.requirePositiveDefinite();

    const std::size_t n_xy = g0.nXY(), n_t = g0.nT();
    const double lam = flow.lambda().toDouble();
    const long long n = static_cast<long long>(n_xy);
    MetricSample out(n_xy, n_t, 1, 0, 1);

    parallelFor(n_xy * n_xy * n_t, [&](std::size_t idx) {
        const std::size_t i = idx % n_xy;
        const std::size_t j = (idx / n_xy) % n_xy;
        const std::size_t k = idx / (n_xy * n_xy);
        const double t = static_cast<double>(k) / static_cast<double>(n_t);

        std::array<double, 3> acc{0, 0, 0};
        long long pi = static_cast<long long>(i), pj = static_cast<long long>(j);
        long long slab = 0;
        double tau0 = 0.0;
        double slab_factor = 1.0;  // lambda^{-2*slab}
        // Integrate slab by slab between the gluing times t + tau in Z, so
        // Simpson only ever sees a single smooth piece.
        while (tau0 < T) {
            const double tau1 = std::min(T, static_cast<double>(slab + 1) - t);
            if (tau1 > tau0) {
                const double len = tau1 - tau0;
                std::size_t segs = static_cast<std::size_t>(
                    std::ceil(len * static_cast<double>(nodes_per_unit)));
                segs += segs % 2;
                if (segs < 2) segs = 2;
                const double h = len / static_cast<double>(segs);
                const double px = static_cast<double>(pi) / static_cast<double>(n);
                const double py = static_cast<double>(pj) / static_cast<double>(n);
                std::array<double, 3> sum{0, 0, 0};
                for (std::size_t s = 0; s <= segs; ++s) {
                    const double tau = tau0 + h * static_cast<double>(s);
                    const double f = std::min(1.0, std::max(0.0, t + tau - static_cast<double>(slab)));
                    const auto gv = g0.evaluate(flow, px, py, f);
                    const double w = (s == 0 || s == segs) ? 1.0 : (s % 2 ? 4.0 : 2.0);
                    sum[0] += w * gv[0];
                    sum[1] += w * gv[1];
                    sum[2] += w * gv[2];
                }
                const double scale = h / 3.0;
                acc[0] += slab_factor * slab_factor * scale * sum[0];
                acc[1] += scale * sum[1];
                acc[2] += scale * sum[2] / (slab_factor * slab_factor);
            }
            tau0 = tau1;
            ++slab;
            slab_factor /= lam;
            std::tie(pi, pj) = applyGrid(flow.monodromy(), pi, pj, n);
        }
        out.at(i, j, k) = {acc[0] / T, acc[1] / T, acc[2] / T};
    });

    out.requirePositiveDefinite();
    AveragedMetric result{std::move(out)};
    result.lambda_bar = verifiedMargin(flow, result.sample);
    result.margin = result.lambda_bar - 1.0;
    if (!(result.margin > 0)) {
        throw TTooSmall("averageMetric: verified margin nonpositive at T = " +
                        std::to_string(T));
    }
    return result;
}

}  // namespace goodman
