#include "goodman/steadiness.hpp"

#include "goodman/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace goodman {

namespace {

ExtendedSlope signAdjusted(const ExtendedSlope& s, int sign) {
    return sign >= 0 ? s : -s;
}

// Per-segment finite frame slopes; throws on foliation tangency.
std::vector<QuadExt> segmentSlopes(const SuspensionFlow& flow, const PLCurve& curve) {
    std::vector<QuadExt> out;
    out.reserve(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto [a, c] = flow.frameDecompose(curve.direction(i));
        if (c.sign() == 0)
            throw TangentToFoliation("segment " + std::to_string(i) +
                                     " runs along the stable direction");
        if (a.sign() == 0)
            throw TangentToFoliation("segment " + std::to_string(i) +
                                     " runs along the unstable direction");
        out.push_back(a / c);
    }
    return out;
}

// First-order bound on |d slope| per unit inf-norm move of one segment
// endpoint: the frame coefficients are linear in the direction, and the
// basis coefficient norms cover a simultaneous move of both coordinates.
double slopeSensitivity(const SuspensionFlow& flow, const Vec2Q& dir) {
    const auto [a1, c1] = flow.frameDecompose(Vec2Q{Rational(1), Rational(0)});
    const auto [a2, c2] = flow.frameDecompose(Vec2Q{Rational(0), Rational(1)});
    const auto [a, c] = flow.frameDecompose(dir);
    const double alpha = std::abs(a1.toDouble()) + std::abs(a2.toDouble());
    const double gamma = std::abs(c1.toDouble()) + std::abs(c2.toDouble());
    const double ad = std::abs(a.toDouble()), cd = std::abs(c.toDouble());
    return (alpha * cd + gamma * ad) / (cd * cd);
}

// Segment indices matching the order of oneSidedSlopes.
std::vector<std::size_t> oneSidedSegments(const PLCurve& curve, std::size_t seg,
                                          const Rational& t) {
    if (t == 0 && curve.isTurn(seg))
        return {(seg + curve.size() - 1) % curve.size(), seg};
    return {seg};
}

}  // namespace

CurveSign classifySign(const SuspensionFlow& flow, const PLCurve& curve) {
    int seen_pos = 0, seen_neg = 0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto [a, c] = flow.frameDecompose(curve.direction(i));
        if (c.sign() == 0 || a.sign() == 0)
            throw TangentToFoliation("segment " + std::to_string(i) +
                                     " is tangent to a foliation direction");
        (a.sign() * c.sign() > 0 ? seen_pos : seen_neg) = 1;
    }
    if (seen_pos && seen_neg) return CurveSign::Mixed;
    return seen_pos ? CurveSign::Positive : CurveSign::Negative;
}

SteadinessReport checkSteadiness(const SuspensionFlow& flow, const PLCurve& curve) {
    const CurveSign cs = classifySign(flow, curve);
    if (cs == CurveSign::Mixed)
        throw MixedSign("checkSteadiness: curve has segments of both slope signs");
    const int sign = cs == CurveSign::Positive ? 1 : -1;

    SteadinessReport report;
    report.sign = sign;

    const auto slopes = segmentSlopes(flow, curve);
    QuadExt h = sign >= 0 ? slopes[0] : -slopes[0];
    QuadExt H = h;
    for (const auto& m : slopes) {
        const QuadExt am = sign >= 0 ? m : -m;
        if (am < h) h = am;
        if (am > H) H = am;
    }
    report.h = h;
    report.H = H;

    long long K = 1;
    while (!((flow.lambdaPow(-2 * K) * H) < h)) {
        ++K;
        if (K > 10000) throw Error("checkSteadiness: cutoff search diverged");
    }
    report.cutoff_K = K;

    std::vector<Crossing> crossings = enumerateCrossings(flow, curve, curve, K);
    for (const auto& m : curve.marked()) {
        Crossing c;
        c.k = 0;
        c.point = mod1(m.point);
        c.under_slopes = {m.under_slope};
        c.over_slopes = {m.over_slope};
        crossings.push_back(c);
    }
    report.crossings_checked = crossings.size();

    double min_ratio = std::numeric_limits<double>::infinity();
    std::vector<double> seg_sens(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i)
        seg_sens[i] = slopeSensitivity(flow, curve.direction(i));
    const double max_sens = *std::max_element(seg_sens.begin(), seg_sens.end());

    for (const auto& c : crossings) {
        const QuadExt factor = c.k >= 1 ? flow.lambdaPow(-2 * c.k) : QuadExt(1);
        const auto under_segs = c.k >= 1 ? oneSidedSegments(curve, c.x_seg, c.x_t)
                                         : std::vector<std::size_t>{};
        const auto over_segs = c.k >= 1 ? oneSidedSegments(curve, c.y_seg, c.y_t)
                                        : std::vector<std::size_t>{};
        bool violated = false;
        for (std::size_t iu = 0; iu < c.under_slopes.size(); ++iu)
            for (std::size_t io = 0; io < c.over_slopes.size(); ++io) {
                const ExtendedSlope lhs = signAdjusted(c.over_slopes[io], sign);
                const ExtendedSlope rhs =
                    signAdjusted(c.under_slopes[iu], sign).scaled(factor);
                const Ordering ord = compareSlopes(lhs, rhs);
                // k >= 1 needs a strict gap; the t -> 0+ tube crossings only
                // fail when the over strand is strictly below.
                if (c.k >= 1 ? ord != Ordering::Greater : ord == Ordering::Less)
                    violated = true;
                if (lhs.isFinite() && rhs.isFinite()) {
                    const double slack =
                        std::abs((lhs.value() - rhs.value()).toDouble());
                    const double su = c.k >= 1 ? seg_sens[under_segs[iu]] : max_sens;
                    const double so = c.k >= 1 ? seg_sens[over_segs[io]] : max_sens;
                    // A vertex move shifts each compared slope through its own
                    // segment's linearized sensitivity.
                    if (slack > 0) min_ratio = std::min(min_ratio, slack / (su + so));
                }
            }
        if (violated) report.violations.push_back(c);
    }
    report.verdict = report.violations.empty() ? Verdict::Steady : Verdict::Unsteady;

    double cap = std::sqrt(curve.minSelfDistanceSquared().convert_to<double>()) / 16.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const Vec2Q d = curve.direction(i);
        cap = std::min(cap, (goodman::abs(d.x) + goodman::abs(d.y)).convert_to<double>() / 16.0);
    }
    report.delta_star = std::min(cap, min_ratio);
    return report;
}

GenericReport checkGeneric(const SuspensionFlow& flow, const PLCurve& curve,
                           long long period_bound) {
    GenericReport report;
    // Every vertex is a joint of smooth paths, so every vertex participates,
    // whether or not the tangent lines actually differ there.
    std::vector<std::size_t> turn_idx(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) turn_idx[i] = i;
    if (turn_idx.size() < 2) return report;
    const CurveSign cs = classifySign(flow, curve);
    if (cs == CurveSign::Mixed)
        throw MixedSign("checkGeneric: curve has segments of both slope signs");
    const int sign = cs == CurveSign::Positive ? 1 : -1;

    std::vector<Vec2Q> pts;
    for (auto i : turn_idx) pts.push_back(mod1(curve.vertex(i)));

    auto isPeriodic = [&](const Vec2Q& p) {
        Vec2Q q = p;
        for (long long m = 1; m <= period_bound; ++m) {
            q = mod1(applyMat(flow.monodromy(), q));
            if (q == p) return true;
        }
        return false;
    };

    auto slopeIntervalOk = [&](std::size_t x_turn, std::size_t y_turn, long long k) {
        const auto under = oneSidedSlopes(flow, curve, turn_idx[x_turn], Rational(0));
        const auto over = oneSidedSlopes(flow, curve, turn_idx[y_turn], Rational(0));
        const QuadExt factor = flow.lambdaPow(-2 * k);
        for (const auto& u : under)
            for (const auto& o : over) {
                if (compareSlopes(signAdjusted(o, sign),
                                  signAdjusted(u, sign).scaled(factor)) !=
                    Ordering::Greater)
                    return false;
            }
        return true;
    };

    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            Vec2Q fa = pts[a], fb = pts[b];
            for (long long k = 1; k <= period_bound; ++k) {
                fa = mod1(applyMat(flow.monodromy(), fa));
                fb = mod1(applyMat(flow.monodromy(), fb));
                std::optional<std::pair<std::size_t, std::size_t>> rel;
                if (fa == pts[b]) rel = {a, b};
                else if (fb == pts[a]) rel = {b, a};
                if (!rel) continue;
                GenericWitness w;
                w.turn_a = turn_idx[a];
                w.turn_b = turn_idx[b];
                w.k = k;
                if (isPeriodic(pts[a])) {
                    w.kind = GenericWitness::Kind::ClosedOrbit;
                    report.generic = false;
                    report.witness = w;
                    return report;
                }
                if (!slopeIntervalOk(rel->first, rel->second, k)) {
                    w.kind = GenericWitness::Kind::SlopeInterval;
                    report.generic = false;
                    report.witness = w;
                    return report;
                }
            }
        }
    return report;
}

}  // namespace goodman
