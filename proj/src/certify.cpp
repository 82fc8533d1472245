#include "goodman/certify.hpp"

#include "goodman/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace goodman {

namespace {

// The 2x2 block for a given profile slope: with both coordinate directions
// written against the eigenframe, the product
//   [a, a r + c; b, b r - d] * adj([a, c; b, -d]) / (ad + bc)
// collapses to exact affine functions of the slope r.
SurgeryDifferential blockFor(const AnnulusFrame& f, const Rational& r) {
    const QuadExt denom = f.adPlusBc();
    if (denom.sign() == 0) throw DegenerateFrame("differential: ad + bc vanished");
    const QuadExt rr{Rational(r)};
    const QuadExt x = f.a * f.b * rr / denom;
    SurgeryDifferential d;
    d.S = QuadExt(Rational(0));
    d.U = QuadExt(Rational(0));
    d.m = QuadExt(Rational(1)) + x;
    d.n = -(f.a * f.a * rr) / denom;
    d.p = (f.b * f.b * rr) / denom;
    d.q = QuadExt(Rational(1)) - x;
    return d;
}

void requireCompatible(const SurgeryAnnulus& annulus, const SurgeryProfile& profile) {
    const int ps = profile.sign();
    if (ps != 0 && ps != annulus.sign())
        throw Error("surgery: profile coefficient sign contradicts the annulus sign");
}

}  // namespace

SurgeryDifferential differential(const SurgeryAnnulus& annulus,
                                 const SurgeryProfile& profile, const Rational& k) {
    requireCompatible(annulus, profile);
    return blockFor(annulus.frame(), profile.slopeAt(k));
}

ThinnessCertificate certifyThinness(const SuspensionFlow& flow,
                                    const SurgeryAnnulus& annulus,
                                    const SurgeryProfile& profile,
                                    const Rational& epsilon,
                                    const Rational& initial_L) {
    requireCompatible(annulus, profile);
    if (epsilon <= 0 || epsilon >= 1)
        throw Error("certifyThinness: epsilon must lie in (0,1)");
    if (initial_L <= 0) throw Error("certifyThinness: L must be positive");

    const long long t0 = annulus.firstReturn();
    const Rational one_minus_eps = 1 - epsilon;
    // Feasibility of the contraction budget: lambda^{-T0/2}/(1-eps) < 1,
    // squared to stay inside the field.
    if (!(flow.lambdaPow(t0) * QuadExt(one_minus_eps * one_minus_eps) >
          QuadExt(Rational(1))))
        throw EpsilonInfeasible("certifyThinness: epsilon too large for the return time");

    const AnnulusFrame& frame = annulus.frame();
    const std::size_t pieces = profile.pieceCount();

    std::vector<SurgeryDifferential> blocks(pieces);
    parallelFor(pieces, [&](std::size_t i) {
        blocks[i] = blockFor(frame, profile.pieceSlope(i));
    });

    const QuadExt one{Rational(1)};
    QuadExt q_min = blocks[0].q;
    for (std::size_t i = 0; i < pieces; ++i) {
        const QuadExt& q = blocks[i].q;
        if (q < q_min) q_min = q;
        if (!(q > QuadExt(one_minus_eps)))
            throw QTooSmall("certifyThinness: q entry at or below 1 - epsilon");
        if (profile.pieceOnPlateau(i)) {
            // Plateau criterion: R ab / (ad + bc) > 1.
            const QuadExt bound =
                QuadExt(profile.slopeBound()) * frame.a * frame.b / frame.adPlusBc();
            if (!(bound > one))
                throw QTooSmall("certifyThinness: plateau slope bound too small");
        }
    }

    // Cone bounded by the leaf and transverse slopes.
    const QuadExt s_hi = std::max(annulus.leafSlope().value(),
                                  annulus.transverseSlope().value());
    const QuadExt s_lo = std::min(annulus.leafSlope().value(),
                                  annulus.transverseSlope().value());

    // Doubling search for a width scale L at which the regluing never widens
    // the cone, strictly narrowing it wherever the profile moves.
    Rational L = initial_L;
    std::vector<QuadExt> products(pieces);
    bool settled = false;
    for (int attempt = 0; attempt < 64 && !settled; ++attempt) {
        parallelFor(pieces, [&](std::size_t i) {
            const SurgeryDifferential& d = blocks[i];
            const QuadExt big = (d.p * QuadExt(L) * s_hi + d.q).abs();
            const QuadExt small = (d.p * QuadExt(L) * s_lo + d.q).abs();
            products[i] = big * small;
        });
        settled = true;
        for (std::size_t i = 0; i < pieces; ++i) {
            const bool moving = profile.pieceSlope(i) != 0;
            if (products[i] < one || (moving && !(products[i] > one))) {
                settled = false;
                break;
            }
        }
        if (!settled) L *= 2;
    }
    if (!settled)
        throw WidthNotContracting("certifyThinness: no width scale found by doubling");

    ThinnessCertificate cert;
    cert.epsilon = epsilon;
    cert.delta = profile.delta();
    cert.slope_bound = profile.slopeBound();
    cert.q_min = q_min;
    cert.flow_factor = flow.lambdaPow(-2 * t0).toDouble();
    double surgery_max = 0;
    for (std::size_t i = 0; i < pieces; ++i) {
        // Block determinant is exactly 1, so the regluing width factor is the
        // reciprocal of the product of the denominators.
        surgery_max = std::max(surgery_max, 1.0 / products[i].toDouble());
    }
    cert.surgery_factor_max = surgery_max;
    cert.width_L_factor_max = surgery_max * cert.flow_factor;
    // In-fiber regluings fix the section, so the slope translation vanishes.
    cert.cu_translation_bound = 0;
    const double lam = flow.lambda().toDouble();
    const double slack =
        1.0 - std::pow(lam, -0.5 * static_cast<double>(t0)) /
                  (1.0 - static_cast<double>(epsilon));
    cert.m_bar = cert.cu_translation_bound / slack;
    cert.L = L;
    cert.pieces_checked = pieces;
    cert.certified = cert.width_L_factor_max < 1.0;
    if (!cert.certified)
        throw WidthNotContracting("certifyThinness: per-return factor not below 1");
    return cert;
}

std::vector<double> coneIterate(const SurgeryAnnulus& annulus,
                                const ThinnessCertificate& certificate,
                                double initial_width, int steps) {
    (void)annulus;
    if (!certificate.certified)
        throw Error("coneIterate: certificate is not certified");
    if (steps < 0) throw Error("coneIterate: steps must be nonnegative");
    std::vector<double> trajectory;
    trajectory.reserve(static_cast<std::size_t>(steps) + 1);
    double w = initial_width;
    trajectory.push_back(w);
    for (int i = 0; i < steps; ++i) {
        w *= certificate.flow_factor;          // transport to the next return
        w *= certificate.surgery_factor_max;   // worst-case regluing action
        trajectory.push_back(w);
    }
    return trajectory;
}

Mat2Z composeReturnMap(const SuspensionFlow& flow, const HomologyClass& c, long long n) {
    return flow.monodromy() * twistMatrix(c, n);
}

int predictedTwistSign(const Mat2Z& monodromy, const HomologyClass& c) {
    if (!c.isPrimitive())
        throw NonPrimitiveClass("predictedTwistSign: class " + c.str() + " is not primitive");
    // trace(M twist(c,n)) = trace(M) + n * tau with
    // tau = (a - d) x0 y0 + b y0^2 - c x0^2.
    const Int tau = (monodromy.a - monodromy.d) * c.x * c.y + monodromy.b * c.y * c.y -
                    monodromy.c * c.x * c.x;
    if (tau == 0) return 0;
    const Int t = monodromy.trace();
    const int st = t > 0 ? 1 : (t < 0 ? -1 : 1);
    return st * (tau > 0 ? 1 : -1);
}

}  // namespace goodman
