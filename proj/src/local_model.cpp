#include "goodman/local_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace goodman {

double localFirstReturn(const LocalHyperbolicModel& model, double m, double s) {
    model.validate();
    const double lam = static_cast<double>(model.lambda);
    const double s_top = static_cast<double>(model.transversal_top);
    if (s < 0 || s > s_top) {
        throw EscapedQuadrant("localFirstReturn: start point off the transversal");
    }
    // Start at (lambda, lambda^{-1} s) -- the identified copy of (1, s) -- and
    // follow the slope-m line down to u = 1.
    const double s_start = s / lam;
    const double s_end = s_start - m * (lam - 1.0);
    const double lo = std::min(s_start, s_end);
    const double hi = std::max(s_start, s_end);
    if (lo < 0.0 || hi > s_top) {
        throw EscapedQuadrant("localFirstReturn: trajectory left the model domain");
    }
    return s_end;
}

InvariantSlopeResult findInvariantSlope(
    const std::function<double(double, double)>& family,
    const std::function<double(double)>& target, double m_lo, double m_hi,
    double x, double tolerance, int max_iterations) {
    auto displacement = [&](double m) { return family(m, x) - target(x); };

    double f_lo = displacement(m_lo);
    double f_hi = displacement(m_hi);
    if (f_lo == 0.0) return {m_lo, x, 0.0, 0};
    if (f_hi == 0.0) return {m_hi, x, 0.0, 0};
    if ((f_lo > 0) == (f_hi > 0)) {
        throw NoSignChange("findInvariantSlope: no sign change on [" +
                           std::to_string(m_lo) + ", " + std::to_string(m_hi) + "]");
    }

    double lo = m_lo, hi = m_hi;
    double mid = 0.5 * (lo + hi);
    int it = 0;
    for (; it < max_iterations; ++it) {
        mid = 0.5 * (lo + hi);
        const double f_mid = displacement(mid);
        if (std::abs(f_mid) < tolerance || hi - lo < tolerance * 1e-3) break;
        if ((f_mid > 0) == (f_lo > 0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return {mid, x, std::abs(displacement(mid)), it};
}

}  // namespace goodman
