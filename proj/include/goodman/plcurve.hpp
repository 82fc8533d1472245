#pragma once

#include "goodman/errors.hpp"
#include "goodman/slope.hpp"
#include "goodman/suspension.hpp"

#include <cstddef>
#include <vector>

namespace goodman {

inline Rational dot(const Vec2Q& a, const Vec2Q& b) { return a.x * b.x + a.y * b.y; }

// Integer floor/ceil of a rational.
Int floorQ(const Rational& r);
Int ceilQ(const Rational& r);

// Representative in [0,1)^2.
Vec2Q mod1(const Vec2Q& v);

// Matrix action on rational fiber vectors.
Vec2Q applyMat(const Mat2Z& m, const Vec2Q& v);

// A transverse self-intersection deliberately carried by a curve: the two
// strands are understood as resolved in the flow direction just off the fiber,
// with the declared over/under slopes.
struct MarkedCrossing {
    Vec2Q point;  // representative in [0,1)^2
    ExtendedSlope over_slope;
    ExtendedSlope under_slope;
};

// A closed piecewise-linear curve on the fiber torus, stored as lifted
// rational vertices v_0 .. v_{n-1}; the closing segment runs from v_{n-1} to
// v_0 + class. Embeddedness is checked exactly on construction; intersections
// are tolerated only at the listed marked crossings.
class PLCurve {
public:
    explicit PLCurve(std::vector<Vec2Q> vertices, HomologyClass cls,
                     std::vector<MarkedCrossing> marked = {});

    std::size_t size() const { return vertices_.size(); }
    const Vec2Q& vertex(std::size_t i) const { return vertices_[i]; }
    const HomologyClass& homologyClass() const { return class_; }
    const std::vector<MarkedCrossing>& marked() const { return marked_; }

    Vec2Q segStart(std::size_t i) const { return vertices_[i]; }
    Vec2Q segEnd(std::size_t i) const;
    Vec2Q direction(std::size_t i) const { return segEnd(i) - segStart(i); }

    // A vertex is a turn when the incoming and outgoing directions are not
    // positively parallel.
    bool isTurn(std::size_t i) const;
    std::vector<std::size_t> turns() const;

    // Squared minimal distance between distinct strands on the torus
    // (allowed touches at shared vertices and marked points excluded). Exact.
    Rational minSelfDistanceSquared() const;

private:
    void checkEmbedded() const;

    std::vector<Vec2Q> vertices_;
    HomologyClass class_;
    std::vector<MarkedCrossing> marked_;
};

// Exact squared distance from a point to a segment.
Rational pointSegmentDistanceSquared(const Vec2Q& p, const Vec2Q& a, const Vec2Q& b);

struct SegHit {
    bool hit = false;
    bool collinear_overlap = false;
    Rational t, s;  // parameters on the first / second segment
    Vec2Q point;
};

// Exact intersection of [a,b] with [c,d]; a positive-length collinear overlap
// is reported as such rather than parametrized.
SegHit intersectSegments(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c, const Vec2Q& d);

}  // namespace goodman
