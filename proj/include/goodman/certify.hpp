#pragma once

#include "goodman/annulus.hpp"
#include "goodman/profile.hpp"
#include "goodman/suspension.hpp"

#include <cstddef>
#include <vector>

namespace goodman {

// Derivative of the regluing map across the annulus in the frame
// (flow direction, e^s, e^u):
//   [ 1  S  U ]
//   [ 0  m  n ]
//   [ 0  p  q ]
// For an in-fiber annulus the regluing preserves the section, so S = U = 0
// and the 2x2 block is an exact affine function of the profile slope.
struct SurgeryDifferential {
    QuadExt S, U, m, n, p, q;
    QuadExt blockDet() const { return m * q - n * p; }
};

// The 2x2 block at annulus parameter k, exact in the frame field. Throws
// DegenerateFrame and rejects a profile whose coefficient sign contradicts
// the annulus sign.
SurgeryDifferential differential(const SurgeryAnnulus& annulus,
                                 const SurgeryProfile& profile, const Rational& k);

struct ThinnessCertificate {
    Rational epsilon;
    Rational delta;
    Rational slope_bound;
    QuadExt q_min;
    // Largest per-return cone-width factor: regluing action at the worst
    // profile piece composed with one flow return.
    double width_L_factor_max = 0;
    // Worst regluing-only width factor (<= 1 once certified).
    double surgery_factor_max = 0;
    // Flow transport factor lambda^{-2 T0} for one return.
    double flow_factor = 0;
    // Bound on the cu-slope translation sup|cS+U| and the resulting invariant
    // slope bound m_bar = M_T (1 - lambda^{-T0/2}/(1-eps))^{-1}.
    double cu_translation_bound = 0;
    double m_bar = 0;
    // Width scale settled by the doubling search, and the pieces examined.
    Rational L;
    std::size_t pieces_checked = 0;
    bool certified = false;
};

// Certifies that the regluing is thin enough for cone-field contraction:
// the q entry clears 1 - epsilon on every profile piece, the plateau clears
// the slope-bound criterion, and the width_L of the leaf/transverse cone
// contracts per return once L is large enough (found by doubling from the
// given start). Throws EpsilonInfeasible, QTooSmall, WidthNotContracting.
ThinnessCertificate certifyThinness(const SuspensionFlow& flow,
                                    const SurgeryAnnulus& annulus,
                                    const SurgeryProfile& profile,
                                    const Rational& epsilon,
                                    const Rational& initial_L = Rational(2));

// Cone-width trajectory under alternating flow transport and regluing,
// starting from the given width: entry i is the width after i full returns.
// Requires a certified certificate.
std::vector<double> coneIterate(const SurgeryAnnulus& annulus,
                                const ThinnessCertificate& certificate,
                                double initial_width, int steps);

// First-return map of the surgered suspension on a section below the
// annulus: the monodromy composed with the n-th twist about the class.
Mat2Z composeReturnMap(const SuspensionFlow& flow, const HomologyClass& c, long long n);

// Twist direction predicted to preserve hyperbolicity of the return map:
// the sign of n that moves |trace| away from 2, or 0 when the trace does not
// depend on n.
int predictedTwistSign(const Mat2Z& monodromy, const HomologyClass& c);

}  // namespace goodman
