#pragma once

#include "goodman/errors.hpp"
#include "goodman/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace goodman {

// A breakpoint of the regluing profile: parameter position in [0,1] and the
// shift value there.
struct ProfileBreakpoint {
    Rational k;
    Rational value;
};

// A piecewise-linear regluing profile rho on the unit interval. The shift is
// integer-valued and constant near both endpoints, monotone throughout, and
// carries the bulk of its drop on a plateau of extreme slope R0. Away from
// the plateau each component of the complement moves the shift by at most
// delta. The magnitude bound R satisfies |R0| > R when the profile is not
// the identity.
class SurgeryProfile {
public:
    SurgeryProfile(std::vector<ProfileBreakpoint> breakpoints, Rational delta,
                   Rational slope_bound);

    const std::vector<ProfileBreakpoint>& breakpoints() const { return breakpoints_; }
    const Rational& delta() const { return delta_; }
    const Rational& slopeBound() const { return slope_bound_; }

    // Extreme piece slope R0; zero for the identity profile.
    const Rational& plateauSlope() const { return plateau_slope_; }
    // rho(0) - rho(1), an integer.
    const Int& coefficient() const { return coefficient_; }
    // Sign of the coefficient: +1, -1, or 0 for the identity profile.
    int sign() const;
    bool isIdentity() const { return coefficient_ == 0; }

    std::size_t pieceCount() const { return breakpoints_.size() - 1; }
    Rational pieceSlope(std::size_t i) const;
    bool pieceOnPlateau(std::size_t i) const;

    // Value of rho at k in [0,1].
    Rational rho(const Rational& k) const;
    // Slope at k: right-hand slope, left-hand at k = 1.
    Rational slopeAt(const Rational& k) const;

private:
    std::vector<ProfileBreakpoint> breakpoints_;
    Rational delta_;
    Rational slope_bound_;
    Rational plateau_slope_;
    Int coefficient_;
};

// The five-piece profile realizing a given integer coefficient: constant
// shelves at both ends, entry and exit ramps of slope sign * R each moving
// the shift by delta, and a plateau of slope sign * 2R carrying the rest.
// A zero coefficient yields the identity profile.
SurgeryProfile standardProfile(long long coefficient, const Rational& delta,
                               const Rational& slope_bound);

}  // namespace goodman
