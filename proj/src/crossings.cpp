#include "goodman/crossings.hpp"

#include "goodman/errors.hpp"
#include "goodman/parallel.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <string>
#include <tuple>

namespace goodman {

namespace {

struct Canon {
    std::size_t seg;
    Rational t;
};

Canon canonicalize(const PLCurve& c, std::size_t seg, Rational t) {
    if (t == 1) return {(seg + 1) % c.size(), Rational(0)};
    return {seg, t};
}

std::vector<Crossing> crossingsAt(const SuspensionFlow& flow, const PLCurve& c1,
                                  const PLCurve& c2, long long k) {
    const Mat2Z B = flow.monodromy().pow(k);
    using Key = std::tuple<std::size_t, Rational, std::size_t, Rational>;
    std::set<Key> seen;
    std::vector<Crossing> out;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        const Vec2Q P = applyMat(B, c1.segStart(i)), Q = applyMat(B, c1.segEnd(i));
        const Rational pxlo = std::min(P.x, Q.x), pxhi = std::max(P.x, Q.x);
        const Rational pylo = std::min(P.y, Q.y), pyhi = std::max(P.y, Q.y);
        for (std::size_t j = 0; j < c2.size(); ++j) {
            const Vec2Q R = c2.segStart(j), S = c2.segEnd(j);
            const Rational rxlo = std::min(R.x, S.x), rxhi = std::max(R.x, S.x);
            const Rational rylo = std::min(R.y, S.y), ryhi = std::max(R.y, S.y);
            const long long ux_lo = ceilQ(pxlo - rxhi).convert_to<long long>();
            const long long ux_hi = floorQ(pxhi - rxlo).convert_to<long long>();
            const long long uy_lo = ceilQ(pylo - ryhi).convert_to<long long>();
            const long long uy_hi = floorQ(pyhi - rylo).convert_to<long long>();
            for (long long ux = ux_lo; ux <= ux_hi; ++ux)
                for (long long uy = uy_lo; uy <= uy_hi; ++uy) {
                    const Vec2Q u{Rational(ux), Rational(uy)};
                    const SegHit hit = intersectSegments(P, Q, R + u, S + u);
                    if (hit.collinear_overlap) {
                        throw NonTransverseOverlap(
                            "enumerateCrossings: image of segment " + std::to_string(i) +
                            " lies along segment " + std::to_string(j) + " at k = " +
                            std::to_string(k));
                    }
                    if (!hit.hit) continue;
                    const Canon cx = canonicalize(c1, i, hit.t);
                    const Canon cy = canonicalize(c2, j, hit.s);
                    if (!seen.insert({cx.seg, cx.t, cy.seg, cy.t}).second) continue;
                    Crossing cr;
                    cr.k = k;
                    cr.x_seg = cx.seg;
                    cr.x_t = cx.t;
                    cr.y_seg = cy.seg;
                    cr.y_t = cy.t;
                    cr.point = mod1(hit.point);
                    cr.under_slopes = oneSidedSlopes(flow, c1, cx.seg, cx.t);
                    cr.over_slopes = oneSidedSlopes(flow, c2, cy.seg, cy.t);
                    out.push_back(std::move(cr));
                }
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
        return std::tie(a.x_seg, a.x_t, a.y_seg, a.y_t) <
               std::tie(b.x_seg, b.x_t, b.y_seg, b.y_t);
    });
    return out;
}

}  // namespace

std::vector<ExtendedSlope> oneSidedSlopes(const SuspensionFlow& flow, const PLCurve& curve,
                                          std::size_t seg, const Rational& t) {
    if (t == 0 && curve.isTurn(seg)) {
        const std::size_t prev = (seg + curve.size() - 1) % curve.size();
        return {flow.frameSlope(curve.direction(prev)), flow.frameSlope(curve.direction(seg))};
    }
    return {flow.frameSlope(curve.direction(seg))};
}

std::vector<Crossing> enumerateCrossings(const SuspensionFlow& flow, const PLCurve& c1,
                                         const PLCurve& c2, long long K) {
    if (K < 1) throw Error("enumerateCrossings: K must be >= 1");
    std::vector<std::vector<Crossing>> per_k(static_cast<std::size_t>(K));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(K));
    parallelFor(static_cast<std::size_t>(K), [&](std::size_t idx) {
        try {
            per_k[idx] = crossingsAt(flow, c1, c2, static_cast<long long>(idx) + 1);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    });
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<Crossing> out;
    for (auto& v : per_k)
        for (auto& c : v) out.push_back(std::move(c));
    return out;
}

}  // namespace goodman
