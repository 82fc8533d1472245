#include "goodman/suspension.hpp"

#include "goodman/errors.hpp"

namespace goodman {

std::int64_t squareFreePart(std::int64_t n) {
    if (n <= 0) throw Error("squareFreePart: argument must be positive");
    std::int64_t out = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2 == 1) out *= p;
    }
    return out * n;
}

SuspensionFlow::SuspensionFlow(const Mat2Z& monodromy) : monodromy_(monodromy) {
    const Int dt = monodromy.det();
    if (dt != 1) {
        throw Error("SuspensionFlow: monodromy must lie in SL(2,Z), det = " + dt.str());
    }
    if (!monodromy.isHyperbolic()) {
        throw Error("SuspensionFlow: monodromy must be hyperbolic, trace = " +
                    monodromy.trace().str());
    }
    if (monodromy.c == 0) {
        throw Error("SuspensionFlow: hyperbolic SL(2,Z) matrix cannot have c = 0");
    }

    const std::int64_t tr = static_cast<std::int64_t>(monodromy.trace());
    eigen_sign_ = tr > 0 ? 1 : -1;
    const std::int64_t disc = tr * tr - 4;  // = s^2 * D
    d_ = squareFreePart(disc);
    std::int64_t s = 1;
    {
        std::int64_t rem = disc / d_;
        while (s * s < rem) ++s;
        if (s * s != rem) throw Error("SuspensionFlow: square part extraction failed");
    }

    // Expanding eigenvalue mu = (tr + sign(tr) * s*sqrt(D)) / 2; lambda = |mu|.
    const QuadExt sqrtD(Rational(0), Rational(1), d_);
    const QuadExt mu_exp = (QuadExt(Rational(tr)) + QuadExt(Rational(eigen_sign_ * s)) * sqrtD) /
                           QuadExt(Rational(2));
    const QuadExt mu_con = (QuadExt(Rational(tr)) - QuadExt(Rational(eigen_sign_ * s)) * sqrtD) /
                           QuadExt(Rational(2));
    lambda_ = eigen_sign_ > 0 ? mu_exp : -mu_exp;
    if (!(lambda_ > QuadExt(Rational(1)))) {
        throw Error("SuspensionFlow: expansion factor not > 1");
    }

    // Eigenvectors normalized to second coordinate 1: v = ((mu - d)/c, 1).
    const QuadExt c_q{Rational(monodromy.c)};
    const QuadExt d_q{Rational(monodromy.d)};
    unstable_ = Vec2E{(mu_exp - d_q) / c_q, QuadExt(Rational(1))};
    stable_ = Vec2E{(mu_con - d_q) / c_q, QuadExt(Rational(1))};
    frame_det_ = stable_.x - unstable_.x;
    if (frame_det_.sign() == 0) throw Error("SuspensionFlow: degenerate eigenframe");
}

std::pair<QuadExt, QuadExt> SuspensionFlow::frameDecompose(const Vec2Q& v) const {
    if (v.isZero()) throw ZeroDirection("frameDecompose: zero direction");
    const QuadExt vx{v.x};
    const QuadExt vy{v.y};
    // Cramer on [s u] (a c)^T = v with s_y = u_y = 1.
    const QuadExt a = (vx - unstable_.x * vy) / frame_det_;
    const QuadExt c = (stable_.x * vy - vx) / frame_det_;
    return {a, c};
}

ExtendedSlope SuspensionFlow::frameSlope(const Vec2Q& direction, const Rational& t) const {
    auto [a, c] = frameDecompose(direction);
    if (c.sign() == 0) return ExtendedSlope::infinite();
    const Rational two_t = 2 * t;
    if (denominator(two_t) != 1) {
        throw UnsupportedTime("frameSlope: lambda^{2t} lies outside Q(sqrt(D)) for t = " +
                              to_string(t));
    }
    const long long n = static_cast<long long>(numerator(two_t));
    return ExtendedSlope::finite((a / c) * lambda_.pow(n));
}

ExtendedSlope SuspensionFlow::slopeTransport(const ExtendedSlope& slope, long long k) const {
    if (k < 0) throw Error("slopeTransport: return count must be >= 0");
    return slope.scaled(lambda_.pow(-2 * k));
}

}  // namespace goodman
