#pragma once

#include <utility>
#include <variant>

#include "qrtecm/arith.hpp"
#include "qrtecm/curves.hpp"

namespace qrtecm {

/// Point ((X:W), (Y:Z)) in P^1 x P^1. A pair that is (0:0) mod N marks a
/// degenerate trial; callers check with collapsed().
struct ProjPoint {
    Residue x, w, y, z;
};

ProjPoint lift(const Residue& x, const Residue& y);
ProjPoint lift(const IndexedPoint& p);

bool collapsed(const ProjPoint& p);

/// Cross-multiplication equality: X1 W2 == X2 W1 and Y1 Z2 == Y2 Z1.
bool proj_eq(const ProjPoint& p, const ProjPoint& q);

/// Inversion-free Lyness addition step, requires c.a == 1:
///   ((X:W), (Y:Z)) -> ((Y:Z), ((Y + bZ) W : XZ))
/// Costs exactly 2M + 1B.
ProjPoint proj_add(const LynessCurve& c, const ProjPoint& p, OpCounter& ops);

/// Inversion-free Lyness doubling, requires c.a == 1. Implements the
/// intermediate scheme
///   E=XZ, F=YW, G=XY, H=WZ, H'=bH, S=E+F, T=E-F,
///   A- = T, A+ = 2G - S - 2H',
///   B+ = S(G - H - H') - 2HH', B- = T(G - H + H'),
///   A1 = A+ + A-, A2 = A+ - A-, B1 = B+ + B-, B2 = B+ - B-,
///   C1 = 2XT, C2 = -2YT, D1 = Z A2 + C2, D2 = W A1 + C1,
///   out = ((A1 B1 : C1 D1), (A2 B2 : C2 D2)),
/// with every multiplication by 2 done as an addition. Costs exactly 15M + 1B.
ProjPoint proj_double(const LynessCurve& c, const ProjPoint& p, OpCounter& ops);

enum class InfiniteComponent { first, second };

struct AtInfinity {
    InfiniteComponent component;
};

using NormalizeResult = std::variant<std::pair<Residue, Residue>, NonInvertible, AtInfinity>;

/// (X/W, Y/Z) when both divisions succeed; AtInfinity when W or Z is zero
/// mod N; NonInvertible(g) with 1 < g < N otherwise. This is the projective
/// pipeline's single factor-extraction gcd.
NormalizeResult normalize(const ProjPoint& p);

}  // namespace qrtecm
