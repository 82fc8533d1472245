#include "goodman/annulus.hpp"

#include "goodman/crossings.hpp"
#include "goodman/steadiness.hpp"

namespace goodman {

namespace {

// Least k >= 1 at which the monodromy image of the curve meets it. A nonzero
// intersection pairing forces a crossing; the exact enumeration settles the
// homologically invisible case.
long long firstReturnTime(const SuspensionFlow& flow, const PLCurve& curve) {
    constexpr long long kCap = 64;
    for (long long k = 1; k <= kCap; ++k) {
        const HomologyClass image = flow.monodromy().pow(k).apply(curve.homologyClass());
        if (intersectionNumber(image, curve.homologyClass()) != 0) return k;
        std::vector<Crossing> found = enumerateCrossings(flow, curve, curve, k);
        for (const auto& c : found) {
            if (c.k == k) return k;
        }
    }
    throw Error("buildAnnulus: no return within " + std::to_string(kCap) + " periods");
}

}  // namespace

SurgeryAnnulus buildAnnulus(const SuspensionFlow& flow, const PLCurve& curve,
                            const Rational& width, const ExtendedSlope& transverse_slope) {
    if (width <= 0) throw Error("buildAnnulus: width must be positive");
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (cross(curve.direction(i), curve.direction(0)) != 0)
            throw Error("buildAnnulus: base curve must have constant slope");
    }

    const SteadinessReport base_report = checkSteadiness(flow, curve);
    if (base_report.verdict != Verdict::Steady)
        throw LeafUnsteady("buildAnnulus: base leaf is not steady");

    const ExtendedSlope leaf_slope = flow.frameSlope(curve.direction(0));
    if (!leaf_slope.isFinite() || !transverse_slope.isFinite())
        throw DegenerateFrame("buildAnnulus: foliation slopes must be finite");
    const int leaf_sign = leaf_slope.value().sign();
    const int transverse_sign = transverse_slope.value().sign();
    if (leaf_sign == 0 || transverse_sign == 0 || leaf_sign == transverse_sign)
        throw Error("buildAnnulus: transverse slope must have the opposite sign");

    // Embedding: parallel leaves stay disjoint when the full thickness fits
    // inside the curve's clearance.
    const Rational clearance = curve.minSelfDistanceSquared();
    if (!(4 * width * width < clearance))
        throw NotEmbedded("buildAnnulus: width reaches the curve's self-distance");

    // A far-edge leaf is a translate of the base; its steadiness is checked
    // through the same decision procedure.
    const Vec2Q d0 = curve.direction(0);
    const Rational norm = abs(d0.x) + abs(d0.y);
    const Vec2Q offset{-(width / 2) * d0.y / norm, (width / 2) * d0.x / norm};
    std::vector<Vec2Q> shifted;
    for (std::size_t i = 0; i < curve.size(); ++i) shifted.push_back(curve.vertex(i) + offset);
    const PLCurve edge_leaf(shifted, curve.homologyClass());
    if (checkSteadiness(flow, edge_leaf).verdict != Verdict::Steady)
        throw LeafUnsteady("buildAnnulus: edge leaf is not steady");

    AnnulusFrame frame;
    frame.a = leaf_slope.value().abs();
    frame.b = QuadExt(Rational(1));
    frame.c = transverse_slope.value().abs();
    frame.d = QuadExt(Rational(1));
    if (frame.adPlusBc().sign() == 0)
        throw DegenerateFrame("buildAnnulus: frame determinant vanished");

    const long long t0 = firstReturnTime(flow, curve);
    return SurgeryAnnulus(curve, width, leaf_slope, transverse_slope,
                          leaf_sign, t0, frame);
}

}  // namespace goodman
