#pragma once

#include "goodman/crossings.hpp"
#include "goodman/plcurve.hpp"
#include "goodman/suspension.hpp"

#include <optional>
#include <vector>

namespace goodman {

enum class CurveSign { Positive, Negative, Mixed };

// Sign of the frame slope on every segment. Throws TangentToFoliation when a
// segment runs along the stable or unstable direction.
CurveSign classifySign(const SuspensionFlow& flow, const PLCurve& curve);

enum class Verdict { Steady, Unsteady };

struct SteadinessReport {
    Verdict verdict = Verdict::Steady;
    int sign = 1;  // +1 positive curve, -1 negative
    long long cutoff_K = 1;
    QuadExt h, H;  // min / max absolute one-sided slope
    std::size_t crossings_checked = 0;
    std::vector<Crossing> violations;
    // Vertex perturbation radius (inf-norm) inside which the verdict is
    // expected to persist, derived from the minimum comparison slack with a
    // linearized slope sensitivity and a safety factor. Validated by the
    // perturbation battery, not proven.
    double delta_star = 0;
};

// Decision procedure for steadiness: exact h, H and cutoff K with
// lambda^{-2K} H < h, then every crossing comparison up to K in exact field
// arithmetic (both one-sided slopes at turns). Marked tube crossings are
// checked in the t -> 0+ limit. Throws MixedSign.
SteadinessReport checkSteadiness(const SuspensionFlow& flow, const PLCurve& curve);

struct GenericWitness {
    enum class Kind { ClosedOrbit, SlopeInterval };
    Kind kind = Kind::ClosedOrbit;
    std::size_t turn_a = 0, turn_b = 0;  // vertex indices
    long long k = 0;                     // return count realizing the relation
};

struct GenericReport {
    bool generic = true;
    std::optional<GenericWitness> witness;
};

// Genericity of a piecewise curve: no two turns on a common closed orbit of
// period <= bound, and the strict slope-interval inequality whenever two
// turns sit on the same (bound-truncated) infinite orbit.
GenericReport checkGeneric(const SuspensionFlow& flow, const PLCurve& curve,
                           long long period_bound);

}  // namespace goodman
