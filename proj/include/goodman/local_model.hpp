#pragma once

#include "goodman/errors.hpp"
#include "goodman/rational.hpp"

#include <functional>

namespace goodman {

// Linear hyperbolic local model near a closed orbit: the quadrant
// {u > 0, s > 0} with the return map (u, s) -> (lambda u, lambda^{-1} s),
// quotiented to the fundamental domain u in [1, lambda). The transversal is
// the edge {u = 1, 0 <= s <= sTop}, parametrized by s; s = 0 is the trace of
// the closed orbit.
struct LocalHyperbolicModel {
    Rational lambda;          // > 1
    int quadrant_u = 1;       // sign pair; the analysis is quadrant-symmetric
    int quadrant_s = 1;
    Rational transversal_top = Rational(1);  // sTop

    void validate() const {
        if (!(lambda > 1)) throw Error("LocalHyperbolicModel: lambda must be > 1");
        if (!(transversal_top > 0)) throw Error("LocalHyperbolicModel: empty transversal");
        if ((quadrant_u != 1 && quadrant_u != -1) || (quadrant_s != 1 && quadrant_s != -1))
            throw Error("LocalHyperbolicModel: quadrant signs must be +/-1");
    }
};

// First return to the transversal of the constant-slope-m line field, followed
// in the flow direction. Closed form in the fundamental domain:
//   f_m(s) = lambda^{-1} s - m (lambda - 1).
// Monotone decreasing in m; contraction at m = 0, expansion as m -> -inf.
// Throws EscapedQuadrant if the traversal leaves {0 <= s <= sTop}.
double localFirstReturn(const LocalHyperbolicModel& model, double m, double s);

struct InvariantSlopeResult {
    double m = 0;
    double x = 0;
    double residual = 0;
    int iterations = 0;
};

// Bisection on m for a family of return maps monotone in m, solving
// f_m(x) = target(x) on [mLo, mHi]. Throws NoSignChange when the interval
// endpoints do not bracket a sign change of f_m(x) - target(x).
InvariantSlopeResult findInvariantSlope(
    const std::function<double(double m, double x)>& family,
    const std::function<double(double x)>& target, double m_lo, double m_hi,
    double x, double tolerance = 1e-9, int max_iterations = 200);

}  // namespace goodman
