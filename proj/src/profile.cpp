#include "goodman/profile.hpp"

#include <algorithm>

namespace goodman {

SurgeryProfile::SurgeryProfile(std::vector<ProfileBreakpoint> breakpoints,
                               Rational delta, Rational slope_bound)
    : breakpoints_(std::move(breakpoints)),
      delta_(std::move(delta)),
      slope_bound_(std::move(slope_bound)) {
    if (breakpoints_.size() < 2) throw Error("SurgeryProfile: need at least two breakpoints");
    if (breakpoints_.front().k != 0 || breakpoints_.back().k != 1)
        throw Error("SurgeryProfile: parameter domain must be [0,1]");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i].k < breakpoints_[i + 1].k))
            throw Error("SurgeryProfile: breakpoints must be strictly increasing");
    }
    if (delta_ < 0) throw Error("SurgeryProfile: delta must be nonnegative");
    if (slope_bound_ <= 0) throw Error("SurgeryProfile: slope bound must be positive");

    const Rational& v0 = breakpoints_.front().value;
    const Rational& v1 = breakpoints_.back().value;
    if (denominator(v0) != 1 || denominator(v1) != 1)
        throw Error("SurgeryProfile: endpoint values must be integers");
    coefficient_ = numerator(v0) - numerator(v1);
    const int s = coefficient_ == 0 ? 0 : (coefficient_ > 0 ? 1 : -1);

    // Monotone: every piece slope is zero or of the one admissible sign
    // (non-increasing for a positive coefficient, non-decreasing negative).
    plateau_slope_ = 0;
    for (std::size_t i = 0; i < pieceCount(); ++i) {
        const Rational sl = pieceSlope(i);
        if (s == 0 && sl != 0)
            throw Error("SurgeryProfile: identity profile must be constant");
        if (s > 0 && sl > 0)
            throw Error("SurgeryProfile: positive coefficient needs a non-increasing profile");
        if (s < 0 && sl < 0)
            throw Error("SurgeryProfile: negative coefficient needs a non-decreasing profile");
        if (abs(sl) > abs(plateau_slope_)) plateau_slope_ = sl;
    }

    if (s != 0) {
        if (abs(plateau_slope_) <= slope_bound_)
            throw Error("SurgeryProfile: plateau slope magnitude must exceed the bound R");
        if (pieceSlope(0) != 0 || pieceSlope(pieceCount() - 1) != 0)
            throw Error("SurgeryProfile: profile must be constant near the endpoints");
        // Each maximal run of non-plateau pieces moves the shift by at most
        // delta.
        Rational run = 0;
        for (std::size_t i = 0; i <= pieceCount(); ++i) {
            const bool plateau = i < pieceCount() && pieceOnPlateau(i);
            if (i == pieceCount() || plateau) {
                if (run > delta_)
                    throw Error("SurgeryProfile: off-plateau component exceeds delta");
                run = 0;
            } else {
                run += abs(breakpoints_[i + 1].value - breakpoints_[i].value);
            }
        }
    }
}

int SurgeryProfile::sign() const {
    if (coefficient_ == 0) return 0;
    return coefficient_ > 0 ? 1 : -1;
}

Rational SurgeryProfile::pieceSlope(std::size_t i) const {
    const Rational dv = breakpoints_[i + 1].value - breakpoints_[i].value;
    const Rational dk = breakpoints_[i + 1].k - breakpoints_[i].k;
    return dv / dk;
}

bool SurgeryProfile::pieceOnPlateau(std::size_t i) const {
    return plateau_slope_ != 0 && pieceSlope(i) == plateau_slope_;
}

Rational SurgeryProfile::rho(const Rational& k) const {
    if (k < 0 || k > 1) throw Error("SurgeryProfile: parameter outside [0,1]");
    for (std::size_t i = 0; i < pieceCount(); ++i) {
        if (k <= breakpoints_[i + 1].k) {
            return breakpoints_[i].value + pieceSlope(i) * (k - breakpoints_[i].k);
        }
    }
    return breakpoints_.back().value;
}

Rational SurgeryProfile::slopeAt(const Rational& k) const {
    if (k < 0 || k > 1) throw Error("SurgeryProfile: parameter outside [0,1]");
    for (std::size_t i = 0; i < pieceCount(); ++i) {
        if (k < breakpoints_[i + 1].k) return pieceSlope(i);
    }
    return pieceSlope(pieceCount() - 1);
}

SurgeryProfile standardProfile(long long coefficient, const Rational& delta,
                               const Rational& slope_bound) {
    if (slope_bound <= 0) throw Error("standardProfile: slope bound must be positive");
    if (coefficient == 0) {
        return SurgeryProfile({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}},
                              delta, slope_bound);
    }
    const int s = coefficient > 0 ? 1 : -1;
    const Rational drop = abs(Rational(coefficient));
    if (!(2 * delta < drop))
        throw Error("standardProfile: delta must be below half the coefficient magnitude");
    const Rational ramp_len = delta / slope_bound;
    const Rational plateau_len = (drop - 2 * delta) / (2 * slope_bound);
    const Rational k1(1, 8);
    const Rational k2 = k1 + ramp_len;
    const Rational k3 = k2 + plateau_len;
    const Rational k4 = k3 + ramp_len;
    if (!(k4 <= Rational(7, 8)))
        throw Error("standardProfile: coefficient too large for the slope bound");
    // Positive coefficient descends from |n| to 0; negative rises from 0.
    auto level = [&](const Rational& v) { return s > 0 ? drop - v : v; };
    std::vector<ProfileBreakpoint> pts{
        {Rational(0), level(Rational(0))}, {k1, level(Rational(0))},
        {k2, level(delta)},                {k3, level(drop - delta)},
        {k4, level(drop)},                 {Rational(1), level(drop)}};
    return SurgeryProfile(std::move(pts), delta, slope_bound);
}

}  // namespace goodman
