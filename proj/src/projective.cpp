#include "qrtecm/projective.hpp"

#include <stdexcept>

namespace qrtecm {

namespace {

// Multiplication by the curve parameter b ticks the B tally, not M.
Residue mul_b(const Residue& u, const Residue& param_b, OpCounter& ops) {
    ++ops.b;
    return mul(u, param_b);
}

void require_unit_a(const LynessCurve& c) {
    if (!(c.a == Residue(1, c.a.modulus())))
        throw std::logic_error("projective Lyness arithmetic requires a == 1");
}

}  // namespace

ProjPoint lift(const Residue& x, const Residue& y) {
    Residue one(1, x.modulus());
    return {x, one, y, one};
}

ProjPoint lift(const IndexedPoint& p) { return lift(p.x, p.y); }

bool collapsed(const ProjPoint& p) {
    return (p.x.is_zero() && p.w.is_zero()) || (p.y.is_zero() && p.z.is_zero());
}

bool proj_eq(const ProjPoint& p, const ProjPoint& q) {
    return mul(p.x, q.w) == mul(q.x, p.w) && mul(p.y, q.z) == mul(q.y, p.z);
}

ProjPoint proj_add(const LynessCurve& c, const ProjPoint& p, OpCounter& ops) {
    require_unit_a(c);
    Residue num = add(p.y, mul_b(p.z, c.b, ops), &ops);  // Y + bZ
    return {p.y, p.z, mul(num, p.w, &ops), mul(p.x, p.z, &ops)};
}

ProjPoint proj_double(const LynessCurve& c, const ProjPoint& p, OpCounter& ops) {
    require_unit_a(c);
    auto dbl = [&](const Residue& u) { return add(u, u, &ops); };

    Residue e = mul(p.x, p.z, &ops);
    Residue f = mul(p.y, p.w, &ops);
    Residue g = mul(p.x, p.y, &ops);
    Residue h = mul(p.w, p.z, &ops);
    Residue hp = mul_b(h, c.b, ops);
    Residue s = add(e, f, &ops);
    Residue t = sub(e, f, &ops);

    const Residue& a_minus = t;                                // a == 1
    Residue a_plus = sub(sub(dbl(g), s, &ops), dbl(hp), &ops);
    Residue b_plus = sub(mul(s, sub(sub(g, h, &ops), hp, &ops), &ops),
                         dbl(mul(h, hp, &ops)), &ops);
    Residue b_minus = mul(t, add(sub(g, h, &ops), hp, &ops), &ops);

    Residue a1 = add(a_plus, a_minus, &ops);
    Residue a2 = sub(a_plus, a_minus, &ops);
    Residue b1 = add(b_plus, b_minus, &ops);
    Residue b2 = sub(b_plus, b_minus, &ops);
    Residue c1 = dbl(mul(p.x, t, &ops));
    Residue c2 = neg(dbl(mul(p.y, t, &ops)));
    Residue d1 = add(mul(p.z, a2, &ops), c2, &ops);
    Residue d2 = add(mul(p.w, a1, &ops), c1, &ops);

    return {mul(a1, b1, &ops), mul(c1, d1, &ops), mul(a2, b2, &ops), mul(c2, d2, &ops)};
}

NormalizeResult normalize(const ProjPoint& p) {
    if (p.w.is_zero()) return AtInfinity{InfiniteComponent::first};
    if (p.z.is_zero()) return AtInfinity{InfiniteComponent::second};
    const mpz_class& n = p.x.modulus().value();
    Residue wz = mul(p.w, p.z);
    mpz_class g = gcd(wz.value(), n);
    if (g == 1)
        return std::pair<Residue, Residue>{div(p.x, p.w), div(p.y, p.z)};
    if (g != n) return NonInvertible(std::move(g), n);
    // w z == 0 mod N with w, z both nonzero: one of the halves carries a
    // proper factor.
    mpz_class gw = gcd(p.w.value(), n);
    return NonInvertible(std::move(gw), n);
}

}  // namespace qrtecm
