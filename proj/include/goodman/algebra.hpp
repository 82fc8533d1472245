#pragma once

#include "goodman/errors.hpp"
#include "goodman/rational.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

namespace goodman {

// Integer homology class on the fiber torus, written in the standard basis.
struct HomologyClass {
    Int x = 0;
    Int y = 0;

    bool isPrimitive() const {
        Int g = gcd(x < 0 ? Int(-x) : x, y < 0 ? Int(-y) : y);
        return g == 1;
    }
    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

// The intersection pairing <u, v> = det [u v] (antisymmetric).
inline Int intersectionNumber(const HomologyClass& u, const HomologyClass& v) {
    return u.x * v.y - u.y * v.x;
}

// 2x2 integer matrix. Used for mapping classes, Dehn twists, gluing matrices
// and the vertices of the surgery graph; those carriers require det = +1,
// which callers assert through requireDet.
struct Mat2Z {
    Int a = 1, b = 0, c = 0, d = 1;

    static Mat2Z identity() { return Mat2Z{}; }

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    void requireDet(int expected) const {
        if (det() != expected) {
            throw Error("Mat2Z: determinant " + det().str() + ", expected " +
                        std::to_string(expected));
        }
    }

    friend Mat2Z operator*(const Mat2Z& m, const Mat2Z& n) {
        return Mat2Z{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                     m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }

    HomologyClass apply(const HomologyClass& v) const {
        return HomologyClass{a * v.x + b * v.y, c * v.x + d * v.y};
    }

    Mat2Z inverseUnimodular() const {
        const Int dt = det();
        if (dt == 1) return Mat2Z{d, -b, -c, a};
        if (dt == -1) return Mat2Z{-d, b, c, -a};
        throw Error("Mat2Z: inverse requires det = +/-1");
    }

    Mat2Z pow(long long n) const {
        Mat2Z base = *this;
        if (n < 0) {
            base = base.inverseUnimodular();
            n = -n;
        }
        Mat2Z acc = identity();
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool isHyperbolic() const {
        const Int t = trace();
        return (t > 2) || (t < -2);
    }

    friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
    std::string str() const {
        return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
    }
};

// n-th power of the positive Dehn twist about the primitive class (x0, y0):
//   u |-> u + <u, c> c,   matrix [[1+x0*y0, -x0^2], [y0^2, 1-x0*y0]].
// Negative n gives the inverse power.
inline Mat2Z twistMatrix(const HomologyClass& c, long long n) {
    if (!c.isPrimitive()) {
        throw NonPrimitiveClass("twistMatrix: class " + c.str() + " is not primitive");
    }
    const Int& x0 = c.x;
    const Int& y0 = c.y;
    // The displayed single-twist matrix is unipotent minus identity nilpotent,
    // so the n-th power is linear in n.
    Mat2Z t{1 + Int(n) * x0 * y0, -Int(n) * x0 * x0,
            Int(n) * y0 * y0, 1 - Int(n) * x0 * y0};
    t.requireDet(1);
    return t;
}

}  // namespace goodman
