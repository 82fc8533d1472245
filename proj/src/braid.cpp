#include "goodman/braid.hpp"

#include "goodman/errors.hpp"
#include "goodman/steadiness.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace goodman {

namespace {

Vec2Q rot90(const Vec2Q& d) { return {-d.y, d.x}; }

// Left normal scaled to unit L1 length, so parallel segments agree exactly.
Vec2Q levelNormal(const Vec2Q& d) {
    const Rational len = goodman::abs(d.x) + goodman::abs(d.y);
    const Vec2Q n = rot90(d);
    return {n.x / len, n.y / len};
}

// Intersection of two lines given by point + direction.
Vec2Q lineIntersect(const Vec2Q& p1, const Vec2Q& d1, const Vec2Q& p2, const Vec2Q& d2) {
    const Rational denom = cross(d1, d2);
    const Rational t = cross(p2 - p1, d2) / denom;
    return p1 + t * d1;
}

}  // namespace

Rational defaultTubeWidth(const PLCurve& curve) {
    const Rational d2 = curve.minSelfDistanceSquared();
    Int denom = 2;
    while (Rational(1) / Rational(denom * denom) * Rational(4096) >= d2) denom *= 2;
    return Rational(1) / Rational(denom);
}

PLCurve insertBraid(const SuspensionFlow& flow, const PLCurve& curve,
                    const std::vector<int>& braid_word, const Rational& width) {
    int strands = 1;
    for (int v : braid_word) {
        if (v == 0) throw Error("insertBraid: zero braid letter");
        strands = std::max(strands, std::abs(v) + 1);
    }
    const std::size_t S = static_cast<std::size_t>(strands);
    const std::size_t W = braid_word.size();

    if (width <= 0) throw TubeTooWide("insertBraid: width must be positive");
    if (Rational(4) * width * width >= curve.minSelfDistanceSquared() ||
        width >= Rational(1, 4)) {
        throw TubeTooWide("insertBraid: width " + to_string(width) +
                          " exceeds the embedding bound");
    }

    // Closure permutation (entry position -> exit position); must be a single
    // cycle so the result is a knot.
    std::vector<std::size_t> exit_of(S);
    {
        std::vector<std::size_t> pos(S);
        std::iota(pos.begin(), pos.end(), 0);  // pos[r] = current position of strand r
        for (int v : braid_word) {
            const std::size_t i = static_cast<std::size_t>(std::abs(v)) - 1;
            for (std::size_t r = 0; r < S; ++r) {
                if (pos[r] == i) pos[r] = i + 1;
                else if (pos[r] == i + 1) pos[r] = i;
            }
        }
        for (std::size_t r = 0; r < S; ++r) exit_of[r] = pos[r];
    }
    {
        std::size_t seen = 0, at = 0;
        do {
            at = exit_of[at];
            ++seen;
        } while (at != 0 && seen <= S);
        if (seen != S) throw Error("insertBraid: braid closure is not a single cycle");
    }

    const std::size_t n = curve.size();
    const Rational eta = width / Rational(strands);
    const Vec2Q h{Rational(curve.homologyClass().x), Rational(curve.homologyClass().y)};
    const Vec2Q d0 = curve.direction(0);
    const Vec2Q n0 = levelNormal(d0);

    auto boundaryParam = [&](std::size_t j) {
        if (W == 0) return Rational(1, 4);
        return Rational(1, 4) + Rational(j) / Rational(2 * W);
    };
    auto boxPoint = [&](std::size_t j, const Rational& level) {
        return curve.segStart(0) + boundaryParam(j) * d0 + (level * eta) * n0;
    };
    auto miter = [&](std::size_t i, const Rational& level) {
        const std::size_t prev = (i + n - 1) % n;
        const Vec2Q dp = curve.direction(prev), dc = curve.direction(i);
        const Vec2Q np = levelNormal(dp), nc = levelNormal(dc);
        const Vec2Q v = curve.vertex(i);
        if (cross(dp, dc) == 0) return v + (level * eta) * nc;
        return lineIntersect(v + (level * eta) * np, dp, v + (level * eta) * nc, dc);
    };

    // Walk the strand cycle, one full pass around the curve per strand.
    std::vector<Vec2Q> vertices;
    std::vector<MarkedCrossing> marked;
    Vec2Q translate{Rational(0), Rational(0)};
    std::size_t level = 0;
    for (std::size_t pass = 0; pass < S; ++pass) {
        std::size_t p = level;
        vertices.push_back(boxPoint(0, Rational(p)) + translate);
        for (std::size_t j = 0; j < W; ++j) {
            const std::size_t i = static_cast<std::size_t>(std::abs(braid_word[j])) - 1;
            if (p == i) p = i + 1;
            else if (p == i + 1) p = i;
            vertices.push_back(boxPoint(j + 1, Rational(p)) + translate);
        }
        for (std::size_t i = 1; i < n; ++i)
            vertices.push_back(miter(i, Rational(p)) + translate);
        vertices.push_back(miter(0, Rational(p)) + translate + h);
        translate = translate + h;
        level = p;
    }

    const int sign = classifySign(flow, curve) == CurveSign::Negative ? -1 : 1;
    for (std::size_t j = 0; j < W; ++j) {
        const int v = braid_word[j];
        const std::size_t i = static_cast<std::size_t>(std::abs(v)) - 1;
        const Rational mid = (boundaryParam(j) + boundaryParam(j + 1)) / 2;
        const Rational midlevel = (Rational(i) + Rational(i + 1)) / 2;
        const Vec2Q point = curve.segStart(0) + mid * d0 + (midlevel * eta) * n0;
        const Rational dpar = Rational(1) / Rational(2 * W);
        const ExtendedSlope up = flow.frameSlope(dpar * d0 + eta * n0);
        const ExtendedSlope down = flow.frameSlope(dpar * d0 + Rational(-1) * eta * n0);
        const bool up_lower = compareSlopes(sign >= 0 ? up : -up,
                                            sign >= 0 ? down : -down) == Ordering::Less;
        const ExtendedSlope lower = up_lower ? up : down;
        const ExtendedSlope higher = up_lower ? down : up;
        MarkedCrossing m;
        m.point = mod1(point);
        // Positive letters put the lower strand over, which breaks
        // steadiness; negative letters keep the higher strand on top.
        m.over_slope = v > 0 ? lower : higher;
        m.under_slope = v > 0 ? higher : lower;
        marked.push_back(m);
    }

    HomologyClass cls{Int(strands) * curve.homologyClass().x,
                      Int(strands) * curve.homologyClass().y};
    return PLCurve(std::move(vertices), cls, std::move(marked));
}

}  // namespace goodman
