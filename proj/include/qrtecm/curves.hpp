#pragma once

#include <gmpxx.h>

#include <utility>
#include <variant>

#include "qrtecm/arith.hpp"

namespace qrtecm {

enum class Family { somos4, somos5, lyness };

const char* family_name(Family f);
Family family_from_name(std::string_view name);

/// Smallest multiple of the shift point P with both coordinates finite:
/// 2P for Somos-4, 3P for Somos-5, 4P for Lyness.
unsigned family_base(Family f);

/// Pencil member x^2 y^2 + alpha (x+y) + beta - J xy = 0.
struct Somos4Curve {
    Residue alpha, beta, j;
};

/// Pencil member xy(x+y) + alpha (x+y) + beta - J xy = 0.
struct Somos5Curve {
    Residue alpha, beta, j;
};

/// Pencil member xy(x+y) + a(x+y)^2 + (a^2+b)(x+y) + ab - K xy = 0.
/// b == a^2 makes the shift 5-torsion on every member (the Lyness 5-cycle);
/// the flag records it, construction does not reject it.
struct LynessCurve {
    Residue a, b, k;
    bool five_torsion;

    LynessCurve(Residue a_, Residue b_, Residue k_)
        : a(std::move(a_)), b(std::move(b_)), k(std::move(k_)),
          five_torsion(b == sqr(a)) {}
};

using CurveParams = std::variant<Somos4Curve, Somos5Curve, LynessCurve>;

Family family_of(const CurveParams& c);
const Modulus& curve_modulus(const CurveParams& c);

/// Orbit point (x, y) = (u_n, u_{n+1}), i.e. the multiple nP. The index is
/// bookkeeping only; no formula consumes it.
struct IndexedPoint {
    mpz_class n;
    Residue x, y;
};

// ---- Somos-4 ----------------------------------------------------------
// Addition step (x, y) -> (y, (alpha y + beta) / (x y^2)), index n+1.
IndexedPoint s4_step(const Somos4Curve& c, const IndexedPoint& p, OpCounter* ops = nullptr);
// Doubling map, index 2n:
//   ( alpha (x-y) y (alpha x + beta - x^3 y) / (alpha x + beta - x^2 y^2)^2,
//    -(alpha x + beta - x^2 y^2)(alpha y + beta - x^2 y^2) / (alpha x y (x-y)^2) )
IndexedPoint s4_double(const Somos4Curve& c, const IndexedPoint& p, OpCounter* ops = nullptr);
// 2P = (-beta/alpha, -alpha (alpha^2 + beta J) / beta^2), index 2.
IndexedPoint s4_init(const Somos4Curve& c, OpCounter* ops = nullptr);
// Conserved quantity (x^2 y^2 + alpha (x+y) + beta) / (xy); equals c.j on-curve.
Residue s4_invariant(const Somos4Curve& c, const Residue& x, const Residue& y,
                     OpCounter* ops = nullptr);
// Elliptic involution nP -> -nP: (x, y) -> (x, (alpha x + beta) / (x^2 y)).
IndexedPoint s4_involution(const Somos4Curve& c, const IndexedPoint& p, OpCounter* ops = nullptr);

// ---- Somos-5 ----------------------------------------------------------
// Addition step (x, y) -> (y, (alpha y + beta) / (x y)), index n+1.
IndexedPoint s5_step(const Somos5Curve& c, const IndexedPoint& p, OpCounter* ops = nullptr);
IndexedPoint s5_double(const Somos5Curve& c, const IndexedPoint& p, OpCounter* ops = nullptr);
// 3P = (-beta/alpha, J + alpha^2/beta + beta/alpha), index 3.
IndexedPoint s5_init(const Somos5Curve& c, OpCounter* ops = nullptr);
Residue s5_invariant(const Somos5Curve& c, const Residue& x, const Residue& y,
                     OpCounter* ops = nullptr);
// Elliptic involution is the coordinate swap.
IndexedPoint s5_involution(const IndexedPoint& p);

// ---- Lyness -----------------------------------------------------------
// Addition step (x, y) -> (y, (a y + b) / x), index n+1.
IndexedPoint lyness_step(const LynessCurve& c, const IndexedPoint& p, OpCounter* ops = nullptr);
// One component of the doubling map; psi(x, y) = (R(x, y), R(y, x)) with
//   R(x, y) = (xy - ay - b)(x^2 y - a^2 x - by - ab) / (x (x-y)(y^2 - ax - b)).
// R is singular at 2P = (-a, 0) in its second-component use; over Z/NZ that
// surfaces as the factor event the ECM is looking for.
Residue lyness_r(const LynessCurve& c, const Residue& x, const Residue& y,
                 OpCounter* ops = nullptr);
IndexedPoint lyness_double(const LynessCurve& c, const IndexedPoint& p, OpCounter* ops = nullptr);
// 4P = (-b/a, -a - b(Ka + b) / (a (a^2 - b))), index 4.
IndexedPoint lyness_init(const LynessCurve& c, OpCounter* ops = nullptr);
Residue lyness_invariant(const LynessCurve& c, const Residue& x, const Residue& y,
                         OpCounter* ops = nullptr);
IndexedPoint lyness_involution(const IndexedPoint& p);

/// Rescales (a, b, K) -> (1, b/a^2, K/a); orbit coordinates shrink by a.
/// The inversion of a is itself a factor-detection opportunity.
LynessCurve lyness_normalized(const LynessCurve& c, OpCounter* ops = nullptr);

// ---- Edwards toy step --------------------------------------------------
// The symmetric QRT map of the Edwards pencil, (x, y) -> (y, -x); its fourth
// iterate is the identity.
std::pair<Residue, Residue> edwards_step(const Residue& x, const Residue& y);

// ---- Family dispatch ---------------------------------------------------
IndexedPoint curve_init(const CurveParams& c, OpCounter* ops = nullptr);
IndexedPoint curve_step(const CurveParams& c, const IndexedPoint& p, OpCounter* ops = nullptr);
IndexedPoint curve_double(const CurveParams& c, const IndexedPoint& p, OpCounter* ops = nullptr);
Residue curve_invariant(const CurveParams& c, const Residue& x, const Residue& y,
                        OpCounter* ops = nullptr);

}  // namespace qrtecm
