#pragma once

#include "goodman/plcurve.hpp"
#include "goodman/slope.hpp"
#include "goodman/suspension.hpp"

namespace goodman {

// The frame decomposition of the annulus coordinate directions against the
// instantaneous eigenbasis, normalized so both unstable coefficients are 1:
//   along-leaf direction   = a e^s + b e^u
//   transverse direction   = c e^s - d e^u
// with a, b, c, d all positive (signs of e^s, e^u are flipped as needed).
struct AnnulusFrame {
    QuadExt a, b, c, d;
    QuadExt adPlusBc() const { return a * d + b * c; }
};

// An embedded annulus in the fiber torus: a constant-slope steady base curve
// thickened to the given transverse width, foliated by parallel translates of
// the base (the along-leaf foliation) and by short arcs of a fixed
// opposite-sign slope (the transverse foliation).
class SurgeryAnnulus {
public:
    SurgeryAnnulus(PLCurve base, Rational width, ExtendedSlope leaf_slope,
                   ExtendedSlope transverse_slope, int sign, long long first_return,
                   AnnulusFrame frame)
        : base_(std::move(base)),
          width_(std::move(width)),
          leaf_slope_(std::move(leaf_slope)),
          transverse_slope_(std::move(transverse_slope)),
          sign_(sign),
          first_return_(first_return),
          frame_(std::move(frame)) {}

    const PLCurve& base() const { return base_; }
    const Rational& width() const { return width_; }
    const ExtendedSlope& leafSlope() const { return leaf_slope_; }
    const ExtendedSlope& transverseSlope() const { return transverse_slope_; }
    // +1 when the leaves have positive frame slope, -1 when negative.
    int sign() const { return sign_; }
    // Least k >= 1 at which the monodromy image of the annulus meets it.
    long long firstReturn() const { return first_return_; }
    const AnnulusFrame& frame() const { return frame_; }

private:
    PLCurve base_;
    Rational width_;
    ExtendedSlope leaf_slope_;
    ExtendedSlope transverse_slope_;
    int sign_;
    long long first_return_;
    AnnulusFrame frame_;
};

// Thickens a constant-slope steady curve into a surgery annulus. The width
// must stay below half the curve's minimal self-distance and the transverse
// slope must be finite with sign opposite to the leaf slope. Throws
// LeafUnsteady or NotEmbedded.
SurgeryAnnulus buildAnnulus(const SuspensionFlow& flow, const PLCurve& curve,
                            const Rational& width, const ExtendedSlope& transverse_slope);

}  // namespace goodman
