#pragma once

#include "goodman/plcurve.hpp"
#include "goodman/suspension.hpp"

#include <vector>

namespace goodman {

// A time-k crossing of c2 over the monodromy-transported c1: the point at
// (y_seg, y_t) on c2 equals A^k applied to the point at (x_seg, x_t) on c1,
// mod Z^2. k = 0 marks a crossing carried by the curve itself (braid tube).
struct Crossing {
    long long k = 0;
    std::size_t x_seg = 0;
    Rational x_t;
    std::size_t y_seg = 0;
    Rational y_t;
    Vec2Q point;  // representative of the crossing point on c2, in [0,1)^2
    // One-sided slopes of the strands at the crossing (two entries at turns),
    // both measured at height 0 before any transport.
    std::vector<ExtendedSlope> under_slopes, over_slopes;
};

// One-sided frame slopes of a curve at a segment parameter (the segment's
// slope, or both adjacent slopes when the parameter sits on a turn).
std::vector<ExtendedSlope> oneSidedSlopes(const SuspensionFlow& flow, const PLCurve& curve,
                                          std::size_t seg, const Rational& t);

// All crossings with 1 <= k <= K, by exact segment-vs-segment intersection of
// A^k(c1) against c2 over every integer translate meeting the bounding boxes.
// Sorted by (k, x_seg, x_t, y_seg, y_t). Throws NonTransverseOverlap when an
// image segment lies along a c2 segment with positive overlap.
std::vector<Crossing> enumerateCrossings(const SuspensionFlow& flow, const PLCurve& c1,
                                         const PLCurve& c2, long long K);

}  // namespace goodman
