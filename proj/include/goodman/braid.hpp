#pragma once

#include "goodman/plcurve.hpp"
#include "goodman/suspension.hpp"

#include <vector>

namespace goodman {

// Dyadic width below 1/64 of the curve's minimal self-distance.
Rational defaultTubeWidth(const PLCurve& curve);

// Inserts a closed braid into the normal tube of `curve` in the fiber.
// Letters are +/-i for the generator on strand positions (i-1, i); the strand
// count is one more than the largest index. Strands are offset copies of the
// curve; each braid letter becomes one transverse self-intersection, marked
// with over/under slopes so that positive letters put the lower-slope strand
// on top. The braid closure must be a single cycle. Throws TubeTooWide when
// the tube of the given width cannot embed.
PLCurve insertBraid(const SuspensionFlow& flow, const PLCurve& curve,
                    const std::vector<int>& braid_word, const Rational& width);

}  // namespace goodman
