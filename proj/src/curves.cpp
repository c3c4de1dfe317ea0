#include "qrtecm/curves.hpp"

#include <stdexcept>

namespace qrtecm {

const char* family_name(Family f) {
    switch (f) {
        case Family::somos4: return "somos4";
        case Family::somos5: return "somos5";
        case Family::lyness: return "lyness";
    }
    return "?";
}

Family family_from_name(std::string_view name) {
    if (name == "somos4") return Family::somos4;
    if (name == "somos5") return Family::somos5;
    if (name == "lyness") return Family::lyness;
    throw std::invalid_argument("unknown curve family: " + std::string(name));
}

unsigned family_base(Family f) {
    switch (f) {
        case Family::somos4: return 2;
        case Family::somos5: return 3;
        case Family::lyness: return 4;
    }
    return 0;
}

Family family_of(const CurveParams& c) {
    return static_cast<Family>(c.index());
}

const Modulus& curve_modulus(const CurveParams& c) {
    return std::visit(
        [](const auto& v) -> const Modulus& {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LynessCurve>) return v.a.modulus();
            else return v.alpha.modulus();
        },
        c);
}

// ---- Somos-4 ----------------------------------------------------------

IndexedPoint s4_step(const Somos4Curve& c, const IndexedPoint& p, OpCounter* ops) {
    Residue num = add(mul(c.alpha, p.y, ops), c.beta, ops);
    Residue den = mul(p.x, sqr(p.y, ops), ops);
    return {p.n + 1, p.y, div(num, den, ops)};
}

IndexedPoint s4_double(const Somos4Curve& c, const IndexedPoint& p, OpCounter* ops) {
    const Residue& x = p.x;
    const Residue& y = p.y;
    Residue ax_b = add(mul(c.alpha, x, ops), c.beta, ops);  // alpha x + beta
    Residue ay_b = add(mul(c.alpha, y, ops), c.beta, ops);  // alpha y + beta
    Residue xy = mul(x, y, ops);
    Residue x2y2 = sqr(xy, ops);
    Residue x_minus_y = sub(x, y, ops);
    Residue d1 = sub(ax_b, x2y2, ops);  // alpha x + beta - x^2 y^2
    // d1 is the factor-bearing denominator; invert it first and on its own.
    Residue inv_d1 = invert(d1);
    Residue num1 = mul(mul(mul(c.alpha, x_minus_y, ops), y, ops),
                       sub(ax_b, mul(mul(sqr(x, ops), x, ops), y, ops), ops), ops);
    Residue first = mul(num1, mul(inv_d1, inv_d1, ops), ops);
    Residue den2 = mul(mul(c.alpha, xy, ops), sqr(x_minus_y, ops), ops);
    Residue num2 = neg(mul(d1, sub(ay_b, x2y2, ops), ops));
    Residue second = mul(num2, invert(den2), ops);
    return {2 * p.n, first, second};
}

IndexedPoint s4_init(const Somos4Curve& c, OpCounter* ops) {
    Residue u2 = neg(div(c.beta, c.alpha, ops));
    Residue num = neg(mul(c.alpha, add(sqr(c.alpha, ops), mul(c.beta, c.j, ops), ops), ops));
    Residue u3 = div(num, sqr(c.beta, ops), ops);
    return {2, u2, u3};
}

Residue s4_invariant(const Somos4Curve& c, const Residue& x, const Residue& y, OpCounter* ops) {
    Residue xy = mul(x, y, ops);
    Residue num = add(add(sqr(xy, ops), mul(c.alpha, add(x, y, ops), ops), ops), c.beta, ops);
    return div(num, xy, ops);
}

IndexedPoint s4_involution(const Somos4Curve& c, const IndexedPoint& p, OpCounter* ops) {
    Residue num = add(mul(c.alpha, p.x, ops), c.beta, ops);
    Residue den = mul(sqr(p.x, ops), p.y, ops);
    return {-p.n, p.x, div(num, den, ops)};
}

// ---- Somos-5 ----------------------------------------------------------

IndexedPoint s5_step(const Somos5Curve& c, const IndexedPoint& p, OpCounter* ops) {
    Residue num = add(mul(c.alpha, p.y, ops), c.beta, ops);
    Residue den = mul(p.x, p.y, ops);
    return {p.n + 1, p.y, div(num, den, ops)};
}

IndexedPoint s5_double(const Somos5Curve& c, const IndexedPoint& p, OpCounter* ops) {
    const Residue& x = p.x;
    const Residue& y = p.y;
    Residue x2y = mul(sqr(x, ops), y, ops);
    Residue xy2 = mul(x, sqr(y, ops), ops);
    Residue ax = mul(c.alpha, x, ops);
    Residue ay = mul(c.alpha, y, ops);
    Residue a1 = sub(sub(x2y, ax, ops), c.beta, ops);  // x^2 y - alpha x - beta
    Residue a2 = sub(sub(x2y, ay, ops), c.beta, ops);  // x^2 y - alpha y - beta
    Residue c1 = sub(sub(xy2, ax, ops), c.beta, ops);  // x y^2 - alpha x - beta
    Residue c2 = sub(sub(xy2, ay, ops), c.beta, ops);  // x y^2 - alpha y - beta
    Residue x_minus_y = sub(x, y, ops);
    Residue den1 = mul(mul(x, x_minus_y, ops), c1, ops);
    Residue first = mul(mul(a1, a2, ops), invert(den1), ops);
    Residue den2 = mul(mul(y, neg(x_minus_y), ops), a2, ops);
    Residue second = mul(mul(c1, c2, ops), invert(den2), ops);
    return {2 * p.n, first, second};
}

IndexedPoint s5_init(const Somos5Curve& c, OpCounter* ops) {
    Residue ba = div(c.beta, c.alpha, ops);
    Residue u3 = neg(ba);
    Residue u4 = add(add(c.j, div(sqr(c.alpha, ops), c.beta, ops), ops), ba, ops);
    return {3, u3, u4};
}

Residue s5_invariant(const Somos5Curve& c, const Residue& x, const Residue& y, OpCounter* ops) {
    Residue xy = mul(x, y, ops);
    Residue x_plus_y = add(x, y, ops);
    Residue num = add(add(mul(xy, x_plus_y, ops), mul(c.alpha, x_plus_y, ops), ops), c.beta, ops);
    return div(num, xy, ops);
}

IndexedPoint s5_involution(const IndexedPoint& p) { return {-p.n, p.y, p.x}; }

// ---- Lyness -----------------------------------------------------------

IndexedPoint lyness_step(const LynessCurve& c, const IndexedPoint& p, OpCounter* ops) {
    Residue num = add(mul(c.a, p.y, ops), c.b, ops);
    return {p.n + 1, p.y, div(num, p.x, ops)};
}

Residue lyness_r(const LynessCurve& c, const Residue& x, const Residue& y, OpCounter* ops) {
    Residue ab = mul(c.a, c.b, ops);
    Residue n1 = sub(sub(mul(x, y, ops), mul(c.a, y, ops), ops), c.b, ops);  // xy - ay - b
    // x^2 y - a^2 x - by - ab
    Residue n2 = sub(sub(sub(mul(sqr(x, ops), y, ops), mul(sqr(c.a, ops), x, ops), ops),
                         mul(c.b, y, ops), ops),
                     ab, ops);
    // x (x - y) (y^2 - ax - b)
    Residue den = mul(mul(x, sub(x, y, ops), ops),
                      sub(sub(sqr(y, ops), mul(c.a, x, ops), ops), c.b, ops), ops);
    return mul(mul(n1, n2, ops), invert(den), ops);
}

IndexedPoint lyness_double(const LynessCurve& c, const IndexedPoint& p, OpCounter* ops) {
    Residue first = lyness_r(c, p.x, p.y, ops);
    Residue second = lyness_r(c, p.y, p.x, ops);
    return {2 * p.n, first, second};
}

IndexedPoint lyness_init(const LynessCurve& c, OpCounter* ops) {
    Residue u4 = neg(div(c.b, c.a, ops));
    Residue ka_b = add(mul(c.k, c.a, ops), c.b, ops);
    Residue den = mul(c.a, sub(sqr(c.a, ops), c.b, ops), ops);  // a (a^2 - b)
    Residue u5 = neg(add(c.a, div(mul(c.b, ka_b, ops), den, ops), ops));
    return {4, u4, u5};
}

Residue lyness_invariant(const LynessCurve& c, const Residue& x, const Residue& y, OpCounter* ops) {
    Residue xy = mul(x, y, ops);
    Residue s = add(x, y, ops);
    Residue num = add(mul(xy, s, ops), mul(c.a, sqr(s, ops), ops), ops);
    num = add(num, mul(add(sqr(c.a, ops), c.b, ops), s, ops), ops);
    num = add(num, mul(c.a, c.b, ops), ops);
    return div(num, xy, ops);
}

IndexedPoint lyness_involution(const IndexedPoint& p) { return {-p.n, p.y, p.x}; }

LynessCurve lyness_normalized(const LynessCurve& c, OpCounter* ops) {
    const Modulus& m = c.a.modulus();
    Residue one(1, m);
    if (c.a == one) return c;
    Residue inv_a = invert(c.a);
    Residue b = mul(c.b, mul(inv_a, inv_a, ops), ops);
    Residue k = mul(c.k, inv_a, ops);
    return LynessCurve(one, b, k);
}

// ---- Edwards toy step --------------------------------------------------

std::pair<Residue, Residue> edwards_step(const Residue& x, const Residue& y) {
    return {y, neg(x)};
}

// ---- Family dispatch ---------------------------------------------------

IndexedPoint curve_init(const CurveParams& c, OpCounter* ops) {
    return std::visit(
        [&](const auto& v) -> IndexedPoint {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Somos4Curve>) return s4_init(v, ops);
            else if constexpr (std::is_same_v<T, Somos5Curve>) return s5_init(v, ops);
            else return lyness_init(v, ops);
        },
        c);
}

IndexedPoint curve_step(const CurveParams& c, const IndexedPoint& p, OpCounter* ops) {
    return std::visit(
        [&](const auto& v) -> IndexedPoint {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Somos4Curve>) return s4_step(v, p, ops);
            else if constexpr (std::is_same_v<T, Somos5Curve>) return s5_step(v, p, ops);
            else return lyness_step(v, p, ops);
        },
        c);
}

IndexedPoint curve_double(const CurveParams& c, const IndexedPoint& p, OpCounter* ops) {
    return std::visit(
        [&](const auto& v) -> IndexedPoint {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Somos4Curve>) return s4_double(v, p, ops);
            else if constexpr (std::is_same_v<T, Somos5Curve>) return s5_double(v, p, ops);
            else return lyness_double(v, p, ops);
        },
        c);
}

Residue curve_invariant(const CurveParams& c, const Residue& x, const Residue& y, OpCounter* ops) {
    return std::visit(
        [&](const auto& v) -> Residue {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Somos4Curve>) return s4_invariant(v, x, y, ops);
            else if constexpr (std::is_same_v<T, Somos5Curve>) return s5_invariant(v, x, y, ops);
            else return lyness_invariant(v, x, y, ops);
        },
        c);
}

}  // namespace qrtecm
