#include "goodman/plcurve.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace goodman {

SegHit intersectSegments(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c, const Vec2Q& d) {
    SegHit out;
    const Vec2Q d1 = b - a, d2 = d - c, w = c - a;
    const Rational denom = cross(d1, d2);
    if (denom != 0) {
        const Rational t = cross(w, d2) / denom;
        const Rational s = cross(w, d1) / denom;
        if (t >= 0 && t <= 1 && s >= 0 && s <= 1) {
            out.hit = true;
            out.t = t;
            out.s = s;
            out.point = a + t * d1;
        }
        return out;
    }
    if (cross(d1, w) != 0) return out;  // parallel, distinct lines
    const Rational len2 = dot(d1, d1);
    Rational pc = dot(c - a, d1) / len2;
    Rational pd = dot(d - a, d1) / len2;
    bool flipped = false;
    if (pc > pd) {
        std::swap(pc, pd);
        flipped = true;
    }
    const Rational lo = std::max(pc, Rational(0));
    const Rational hi = std::min(pd, Rational(1));
    if (lo > hi) return out;
    if (lo < hi) {
        out.collinear_overlap = true;
        return out;
    }
    out.hit = true;
    out.t = lo;
    out.point = a + lo * d1;
    // Parameter on [c,d]: lo corresponds to pc or pd depending on orientation.
    out.s = (lo == pc) == !flipped ? Rational(0) : Rational(1);
    if (pc == pd) out.s = 0;
    return out;
}

namespace {

struct BBox {
    Rational xlo, xhi, ylo, yhi;
};

BBox bbox(const Vec2Q& a, const Vec2Q& b) {
    return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

}  // namespace

Int floorQ(const Rational& r) {
    const Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (q * d > n) --q;
    return q;
}

Int ceilQ(const Rational& r) { return -floorQ(-r); }

Vec2Q mod1(const Vec2Q& v) {
    return {v.x - Rational(floorQ(v.x)), v.y - Rational(floorQ(v.y))};
}

Vec2Q applyMat(const Mat2Z& m, const Vec2Q& v) {
    return {Rational(m.a) * v.x + Rational(m.b) * v.y,
            Rational(m.c) * v.x + Rational(m.d) * v.y};
}

Rational pointSegmentDistanceSquared(const Vec2Q& p, const Vec2Q& a, const Vec2Q& b) {
    const Vec2Q d = b - a;
    Rational t = dot(p - a, d) / dot(d, d);
    t = std::min(std::max(t, Rational(0)), Rational(1));
    const Vec2Q r = p - (a + t * d);
    return dot(r, r);
}

PLCurve::PLCurve(std::vector<Vec2Q> vertices, HomologyClass cls,
                 std::vector<MarkedCrossing> marked)
    : vertices_(std::move(vertices)), class_(cls), marked_(std::move(marked)) {
    if (vertices_.empty()) throw Error("PLCurve: no vertices");
    for (std::size_t i = 0; i < size(); ++i) {
        if (direction(i).isZero())
            throw Error("PLCurve: degenerate segment at vertex " + std::to_string(i));
    }
    checkEmbedded();
}

Vec2Q PLCurve::segEnd(std::size_t i) const {
    if (i + 1 < size()) return vertices_[i + 1];
    return vertices_[0] + Vec2Q{Rational(class_.x), Rational(class_.y)};
}

bool PLCurve::isTurn(std::size_t i) const {
    const Vec2Q prev = direction((i + size() - 1) % size());
    const Vec2Q cur = direction(i);
    return cross(prev, cur) != 0 || dot(prev, cur) <= 0;
}

std::vector<std::size_t> PLCurve::turns() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (isTurn(i)) out.push_back(i);
    return out;
}

void PLCurve::checkEmbedded() const {
    const std::size_t n = size();
    const Vec2Q h{Rational(class_.x), Rational(class_.y)};
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2Q a = segStart(i), b = segEnd(i);
        const BBox bi = bbox(a, b);
        for (std::size_t j = i; j < n; ++j) {
            const Vec2Q c0 = segStart(j), d0 = segEnd(j);
            const BBox bj = bbox(c0, d0);
            const long long ux_lo = ceilQ(bi.xlo - bj.xhi).convert_to<long long>();
            const long long ux_hi = floorQ(bi.xhi - bj.xlo).convert_to<long long>();
            const long long uy_lo = ceilQ(bi.ylo - bj.yhi).convert_to<long long>();
            const long long uy_hi = floorQ(bi.yhi - bj.ylo).convert_to<long long>();
            for (long long ux = ux_lo; ux <= ux_hi; ++ux)
                for (long long uy = uy_lo; uy <= uy_hi; ++uy) {
                    const Vec2Q u{Rational(ux), Rational(uy)};
                    if (i == j && u.isZero()) continue;
                    const Vec2Q c = c0 + u, d = d0 + u;
                    const SegHit hit = intersectSegments(a, b, c, d);
                    if (hit.collinear_overlap) {
                        throw NotEmbedded("PLCurve: segments " + std::to_string(i) +
                                          " and " + std::to_string(j) + " overlap");
                    }
                    if (!hit.hit) continue;
                    // Consecutive segments may share exactly their common
                    // vertex (the closing segment wraps through the class).
                    bool allowed = false;
                    const Vec2Q zero{Rational(0), Rational(0)};
                    if (j == i + 1 && u.isZero() && hit.point == vertices_[j]) allowed = true;
                    // The closing segment wraps: seg_{n-1} - class touches
                    // seg_0 at v_0.
                    if (i == 0 && j == n - 1 && n > 1 && u + h == zero && hit.point == vertices_[0])
                        allowed = true;
                    // A one-segment curve meets its own class-translates at
                    // the shared endpoints.
                    if (i == j && n == 1) {
                        if ((u == h && hit.point == segEnd(0)) ||
                            (u + h == zero && hit.point == vertices_[0]))
                            allowed = true;
                    }
                    if (!allowed) {
                        const Vec2Q p = mod1(hit.point);
                        for (const auto& m : marked_)
                            if (mod1(m.point) == p) {
                                allowed = true;
                                break;
                            }
                    }
                    if (!allowed) {
                        throw NotEmbedded("PLCurve: segments " + std::to_string(i) +
                                          " and " + std::to_string(j) +
                                          " intersect off the allowed set");
                    }
                }
        }
    }
}

Rational PLCurve::minSelfDistanceSquared() const {
    const std::size_t n = size();
    Rational best(2);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2Q a = segStart(i), b = segEnd(i);
        const BBox bi = bbox(a, b);
        for (std::size_t j = i; j < n; ++j) {
            const Vec2Q c0 = segStart(j), d0 = segEnd(j);
            const BBox bj = bbox(c0, d0);
            const long long ux_lo = ceilQ(bi.xlo - bj.xhi).convert_to<long long>() - 2;
            const long long ux_hi = floorQ(bi.xhi - bj.xlo).convert_to<long long>() + 2;
            const long long uy_lo = ceilQ(bi.ylo - bj.yhi).convert_to<long long>() - 2;
            const long long uy_hi = floorQ(bi.yhi - bj.ylo).convert_to<long long>() + 2;
            for (long long ux = ux_lo; ux <= ux_hi; ++ux)
                for (long long uy = uy_lo; uy <= uy_hi; ++uy) {
                    const Vec2Q u{Rational(ux), Rational(uy)};
                    if (i == j && u.isZero()) continue;
                    const Vec2Q c = c0 + u, d = d0 + u;
                    for (const Rational& v :
                         {pointSegmentDistanceSquared(a, c, d),
                          pointSegmentDistanceSquared(b, c, d),
                          pointSegmentDistanceSquared(c, a, b),
                          pointSegmentDistanceSquared(d, a, b)}) {
                        if (v > 0 && v < best) best = v;
                    }
                }
        }
    }
    return best;
}

}  // namespace goodman
