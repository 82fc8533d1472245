#pragma once

#include "goodman/quadext.hpp"

#include <compare>
#include <string>

namespace goodman {

// A slope value in Q(sqrt(D)) extended by a single point at infinity
// (the stable direction). Infinite compares greater than every finite slope.
class ExtendedSlope {
public:
    ExtendedSlope() : finite_(true), value_(Rational(0)) {}
    static ExtendedSlope finite(QuadExt v) {
        ExtendedSlope s;
        s.finite_ = true;
        s.value_ = std::move(v);
        return s;
    }
    static ExtendedSlope infinite() {
        ExtendedSlope s;
        s.finite_ = false;
        return s;
    }

    bool isFinite() const { return finite_; }
    const QuadExt& value() const {
        if (!finite_) throw Error("ExtendedSlope: value() on infinite slope");
        return value_;
    }

    ExtendedSlope operator-() const {
        // -infinity is identified with infinity (slopes are projective in the
        // stable direction); negation only flips finite values.
        if (!finite_) return *this;
        return finite(-value_);
    }

    // Scaling by a positive factor, e.g. the lambda^{-2k} transport rule.
    ExtendedSlope scaled(const QuadExt& factor) const {
        if (factor.sign() <= 0) throw Error("ExtendedSlope: scale factor must be positive");
        if (!finite_) return *this;
        return finite(value_ * factor);
    }

    friend bool operator==(const ExtendedSlope& a, const ExtendedSlope& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtendedSlope& a,
                                            const ExtendedSlope& b) {
        if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
        if (!a.finite_) return std::strong_ordering::greater;
        if (!b.finite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string str() const { return finite_ ? value_.str() : "inf"; }

private:
    bool finite_;
    QuadExt value_;
};

enum class Ordering { Less, Equal, Greater };

// Exact total-order kernel for slope comparisons.
inline Ordering compareSlopes(const ExtendedSlope& a, const ExtendedSlope& b) {
    if (a.isFinite() && b.isFinite()) {
        const auto& x = a.value();
        const auto& y = b.value();
        if (!x.isRational() && !y.isRational() &&
            x.discriminant() != y.discriminant()) {
            throw FieldMismatch("compareSlopes: slopes live in different fields");
        }
    }
    const auto c = a <=> b;
    if (c < 0) return Ordering::Less;
    if (c > 0) return Ordering::Greater;
    return Ordering::Equal;
}

}  // namespace goodman
