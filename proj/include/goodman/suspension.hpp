#pragma once

#include "goodman/algebra.hpp"
#include "goodman/quadext.hpp"
#include "goodman/slope.hpp"

#include <array>
#include <cstdint>

namespace goodman {

// A rational vector in the fiber torus (or its universal cover).
struct Vec2Q {
    Rational x, y;
    friend Vec2Q operator+(const Vec2Q& a, const Vec2Q& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2Q operator-(const Vec2Q& a, const Vec2Q& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2Q operator*(const Rational& s, const Vec2Q& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2Q&, const Vec2Q&) = default;
    bool isZero() const { return x == 0 && y == 0; }
};

inline Rational cross(const Vec2Q& a, const Vec2Q& b) { return a.x * b.y - a.y * b.x; }

// A direction vector with coordinates in Q(sqrt(D)).
struct Vec2E {
    QuadExt x, y;
};

// Largest square-free divisor computation for the field discriminant.
std::int64_t squareFreePart(std::int64_t n);

// The suspension flow of a hyperbolic torus map, carrying its eigen data and
// the instantaneous suspension metric frame. The fiber sits at height 0; the
// flow advances the height coordinate, with the monodromy identification at
// integer times.
class SuspensionFlow {
public:
    explicit SuspensionFlow(const Mat2Z& monodromy);

    const Mat2Z& monodromy() const { return monodromy_; }
    std::int64_t discriminant() const { return d_; }
    // Expansion factor, always > 1. The expanding eigenvalue of the monodromy
    // is eigenSign() * lambda().
    const QuadExt& lambda() const { return lambda_; }
    int eigenSign() const { return eigen_sign_; }
    const Vec2E& stableDir() const { return stable_; }
    const Vec2E& unstableDir() const { return unstable_; }

    // Slope of a fiber direction in the (e^s, e^u) frame of the instantaneous
    // metric: decompose v = a*s + c*u and return a/c, referenced to height 0
    // by the lambda^{2t} scaling. Infinite when the direction is stable.
    // Only times with 2t integral are representable in the field.
    ExtendedSlope frameSlope(const Vec2Q& direction, const Rational& t = Rational(0)) const;

    // Stable/unstable coefficients (a, c) of a fiber direction.
    std::pair<QuadExt, QuadExt> frameDecompose(const Vec2Q& direction) const;

    // Slope of the image of a slope-m line under k forward returns:
    // multiplication by lambda^{-2k}, exact in Q(sqrt(D)).
    ExtendedSlope slopeTransport(const ExtendedSlope& slope, long long k) const;

    // lambda^n as an exact field element.
    QuadExt lambdaPow(long long n) const { return lambda_.pow(n); }

private:
    Mat2Z monodromy_;
    std::int64_t d_;
    int eigen_sign_;
    QuadExt lambda_;
    Vec2E stable_, unstable_;
    QuadExt frame_det_;  // det [s u], nonzero
};

}  // namespace goodman
