#pragma once

#include "goodman/suspension.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace goodman {

// A sampled fiberwise metric on the E^s + E^u plane bundle of a suspension.
// Values are 2x2 symmetric positive matrices expressed in the (stable-dir,
// unstable-dir) eigenbasis, on an n x n x nt grid over the unit-period
// suspension ((x, y) in [0,1)^2, t in [0,1)). The fiber spatial resolution is
// square so the monodromy maps grid points to grid points.
class MetricSample {
public:
    MetricSample(std::size_t n_xy, std::size_t n_t, double gss, double gsu, double guu);

    std::size_t nXY() const { return n_xy_; }
    std::size_t nT() const { return n_t_; }
    std::size_t size() const { return data_.size(); }

    // Entry (gss, gsu, guu) at grid indices.
    std::array<double, 3>& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(k * n_xy_ + j) * n_xy_ + i];
    }
    const std::array<double, 3>& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(k * n_xy_ + j) * n_xy_ + i];
    }

    // Throws NotPositiveDefinite naming the first offending sample.
    void requirePositiveDefinite() const;

    // Metric value at fiber point (x, y) in [0,1)^2 and height t in [0, 1),
    // trilinear, wrapping in x and y, and wrapping in t through the monodromy
    // identification (x, 1) ~ (A x, 0) with the eigenframe rescaling.
    std::array<double, 3> evaluate(const SuspensionFlow& flow, double x, double y,
                                   double t) const;

    // Flat Euclidean fiber metric expressed in the eigenbasis of `flow`.
    static MetricSample flatSeed(const SuspensionFlow& flow, std::size_t n_xy,
                                 std::size_t n_t);

    // Exact instantaneous metric diag(lambda^{-2t}, lambda^{2t}).
    static MetricSample instantaneous(const SuspensionFlow& flow, std::size_t n_xy,
                                      std::size_t n_t);

private:
    std::size_t n_xy_, n_t_;
    std::vector<std::array<double, 3>> data_;
};

struct AveragedMetric {
    MetricSample sample;
    // Verified per-period bounds on the grid: stable vectors contract by at
    // least lambda_bar^{-1}, unstable vectors expand by at least lambda_bar.
    double lambda_bar = 0;
    double margin = 0;  // lambda_bar - 1
};

// Orbit average (1/T) int_0^T (phi^tau)^* g dtau by composite Simpson
// quadrature, split at the monodromy return times so each smooth piece is
// integrated separately. Throws NotPositiveDefinite / TTooSmall.
AveragedMetric averageMetric(const SuspensionFlow& flow, const MetricSample& g0,
                             double T, std::size_t nodes_per_unit = 256);

// The verification half of averageMetric, usable on any sample: smallest
// verified one-period contraction/expansion factor over the grid.
double verifiedMargin(const SuspensionFlow& flow, const MetricSample& g);

}  // namespace goodman
