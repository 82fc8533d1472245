#pragma once

#include "goodman/errors.hpp"
#include "goodman/rational.hpp"

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace goodman {

// An element p + q*sqrt(D) of the real quadratic field Q(sqrt(D)).
// D is a positive square-free integer. Every operation is exact; the order
// is decided by rational sign analysis, never by floating point.
//
// Rational values are represented with D = 1 (sqrt(1) folded into p) so that
// plain rationals mix freely with any field.
class QuadExt {
public:
    QuadExt() : p_(0), q_(0), d_(1) {}
    QuadExt(Rational p) : p_(std::move(p)), q_(0), d_(1) {}
    QuadExt(long long p) : p_(p), q_(0), d_(1) {}
    QuadExt(Rational p, Rational q, std::int64_t d)
        : p_(std::move(p)), q_(std::move(q)), d_(d) {
        if (d_ <= 0) throw Error("QuadExt: discriminant must be positive");
        if (d_ == 1) {
            p_ += q_;
            q_ = 0;
        } else if (q_ == 0) {
            d_ = 1;
        }
    }

    const Rational& rationalPart() const { return p_; }
    const Rational& surdPart() const { return q_; }
    std::int64_t discriminant() const { return d_; }
    bool isRational() const { return q_ == 0; }

    // Exact sign of p + q*sqrt(D).
    int sign() const {
        const int sp = p_.sign();
        const int sq = q_.sign();
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        // Opposite signs: compare p^2 against q^2 * D.
        const Rational lhs = p_ * p_;
        const Rational rhs = q_ * q_ * Rational(d_);
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? sp : sq;
    }

    QuadExt operator-() const { return QuadExt(-p_, -q_, d_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        std::int64_t d = mergedField(a, b);
        return QuadExt(a.p_ + b.p_, a.q_ + b.q_, d);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        return a + (-b);
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        std::int64_t d = mergedField(a, b);
        return QuadExt(a.p_ * b.p_ + a.q_ * b.q_ * Rational(d),
                       a.p_ * b.q_ + a.q_ * b.p_, d);
    }

    QuadExt inverse() const {
        // 1 / (p + q sqrt(D)) = (p - q sqrt(D)) / (p^2 - q^2 D).
        const Rational norm = p_ * p_ - q_ * q_ * Rational(d_);
        if (norm == 0) throw Error("QuadExt: division by zero");
        return QuadExt(p_ / norm, -q_ / norm, d_);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        return a * b.inverse();
    }

    QuadExt pow(long long n) const {
        QuadExt base = *this;
        if (n < 0) {
            base = base.inverse();
            n = -n;
        }
        QuadExt acc(Rational(1));
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return (a - b).sign() == 0;
    }
    friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
        const int s = (a - b).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    double toDouble() const {
        return static_cast<double>(p_) +
               static_cast<double>(q_) * std::sqrt(static_cast<double>(d_));
    }

    std::string str() const {
        if (q_ == 0) return to_string(p_);
        std::string s = to_string(p_);
        s += (q_.sign() >= 0 ? "+" : "-");
        s += to_string(goodman::abs(q_)) + "*sqrt(" + std::to_string(d_) + ")";
        return s;
    }

private:
    static std::int64_t mergedField(const QuadExt& a, const QuadExt& b) {
        if (a.d_ == b.d_) return a.d_;
        if (a.q_ == 0) return b.d_;
        if (b.q_ == 0) return a.d_;
        throw FieldMismatch("QuadExt: mixing sqrt(" + std::to_string(a.d_) +
                            ") with sqrt(" + std::to_string(b.d_) + ")");
    }

    Rational p_, q_;
    std::int64_t d_;
};

}  // namespace goodman
