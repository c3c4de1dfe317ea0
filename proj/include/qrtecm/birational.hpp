#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>

#include "qrtecm/arith.hpp"

namespace qrtecm {

/// The coordinate maps between Weierstrass, Somos-4, Somos-5 and Lyness
/// curves are identical over exact rationals and over Z/NZ, so they are
/// written once against a small field object. Exact mode exists for oracle
/// work; ECM paths only ever use the modular field.

struct RationalField {
    using Elem = mpq_class;

    Elem from_int(long v) const { return mpq_class(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw std::domain_error("rational division by zero");
        return a / b;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

struct ModularField {
    Modulus n;
    using Elem = Residue;

    Elem from_int(long v) const { return Residue(v, n); }
    Elem add(const Elem& a, const Elem& b) const { return qrtecm::add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return qrtecm::sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return qrtecm::mul(a, b); }
    Elem neg(const Elem& a) const { return qrtecm::neg(a); }
    Elem div(const Elem& a, const Elem& b) const { return qrtecm::div(a, b); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

/// y^2 = x^3 + A x + B.
template <class F>
struct Weierstrass {
    typename F::Elem a, b;
};

/// Affine point or the point at infinity (nullopt).
template <class E>
struct WPoint {
    std::optional<std::pair<E, E>> xy;

    bool infinite() const { return !xy.has_value(); }
    const E& x() const { return xy->first; }
    const E& y() const { return xy->second; }

    static WPoint infinity() { return {std::nullopt}; }
    static WPoint at(E x, E y) { return {std::make_pair(std::move(x), std::move(y))}; }
};

template <class F>
bool w_on_curve(const F& f, const Weierstrass<F>& c, const WPoint<typename F::Elem>& p) {
    if (p.infinite()) return true;
    auto rhs = f.add(f.add(f.mul(f.mul(p.x(), p.x()), p.x()), f.mul(c.a, p.x())), c.b);
    return f.eq(f.mul(p.y(), p.y()), rhs);
}

/// Chord-tangent group law; the identity is the point at infinity.
template <class F>
WPoint<typename F::Elem> w_add(const F& f, const Weierstrass<F>& c,
                               const WPoint<typename F::Elem>& p,
                               const WPoint<typename F::Elem>& q) {
    using P = WPoint<typename F::Elem>;
    if (p.infinite()) return q;
    if (q.infinite()) return p;
    typename F::Elem lambda = f.from_int(0);
    if (f.eq(p.x(), q.x())) {
        if (f.eq(p.y(), f.neg(q.y()))) return P::infinity();  // covers y = 0 tangents
        auto num = f.add(f.mul(f.from_int(3), f.mul(p.x(), p.x())), c.a);
        lambda = f.div(num, f.mul(f.from_int(2), p.y()));
    } else {
        lambda = f.div(f.sub(q.y(), p.y()), f.sub(q.x(), p.x()));
    }
    auto x3 = f.sub(f.sub(f.mul(lambda, lambda), p.x()), q.x());
    auto y3 = f.sub(f.mul(lambda, f.sub(p.x(), x3)), p.y());
    return P::at(std::move(x3), std::move(y3));
}

template <class F>
WPoint<typename F::Elem> w_neg(const F& f, const WPoint<typename F::Elem>& p) {
    if (p.infinite()) return p;
    return WPoint<typename F::Elem>::at(p.x(), f.neg(p.y()));
}

/// k-fold multiple via double-and-add over w_add; k may be negative or zero.
template <class F>
WPoint<typename F::Elem> w_scalar_mul(const F& f, const Weierstrass<F>& c,
                                      const WPoint<typename F::Elem>& p, mpz_class k) {
    using P = WPoint<typename F::Elem>;
    if (k < 0) return w_scalar_mul(f, c, w_neg(f, p), mpz_class(-k));
    P acc = P::infinity();
    if (k == 0 || p.infinite()) return acc;
    long bits = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        acc = w_add(f, c, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = w_add(f, c, acc, p);
    }
    return acc;
}

/// Parameter bundle of the birational equivalence: the chosen Weierstrass
/// point P = (nu, xi) determines
///   alpha = 4 xi^2, J = 6 nu^2 + 2A, beta = J^2/4 - 12 nu xi^2,
///   a = -alpha^2 - beta J, b = 2a^2 + a beta J - beta^3, K = -2a - beta J,
///   alpha5 = -beta, beta5 = alpha^2 + beta J, J5 = J.
/// Degenerate bundles are flagged, not rejected; tests probe them.
template <class E>
struct BirationalParams {
    E nu, xi;
    E alpha, beta, j;     // Somos-4
    E a, b, k;            // Lyness
    E alpha5, beta5, j5;  // Somos-5
    bool degenerate_alpha = false;  // xi = 0 (2-torsion source point)
    bool degenerate_beta = false;
    bool lyness_b_zero = false;
    bool lyness_five_torsion = false;  // b = a^2
};

template <class F>
BirationalParams<typename F::Elem> birational_params(const F& f, const typename F::Elem& A,
                                                 const typename F::Elem& nu,
                                                 const typename F::Elem& xi) {
    using E = typename F::Elem;
    E xi2 = f.mul(xi, xi);
    E alpha = f.mul(f.from_int(4), xi2);
    E j = f.add(f.mul(f.from_int(6), f.mul(nu, nu)), f.mul(f.from_int(2), A));
    E beta = f.sub(f.div(f.mul(j, j), f.from_int(4)), f.mul(f.from_int(12), f.mul(nu, xi2)));
    E beta_j = f.mul(beta, j);
    E a = f.neg(f.add(f.mul(alpha, alpha), beta_j));
    E b = f.sub(f.add(f.mul(f.from_int(2), f.mul(a, a)), f.mul(a, beta_j)),
                f.mul(f.mul(beta, beta), beta));
    E k = f.sub(f.neg(f.add(a, a)), beta_j);
    BirationalParams<E> out{nu,
                          xi,
                          alpha,
                          beta,
                          j,
                          a,
                          b,
                          k,
                          f.neg(beta),
                          f.add(f.mul(alpha, alpha), beta_j),
                          j};
    out.degenerate_alpha = f.is_zero(out.alpha);
    out.degenerate_beta = f.is_zero(out.beta);
    out.lyness_b_zero = f.is_zero(out.b);
    out.lyness_five_torsion = f.eq(out.b, f.mul(out.a, out.a));
    // Redundant identities of the bundle, re-checked as stated.
    if (!f.eq(out.k, f.sub(f.neg(f.add(out.a, out.a)), f.mul(out.beta, out.j))) ||
        !f.eq(out.beta5, f.add(f.mul(out.alpha, out.alpha), f.mul(out.beta, out.j))) ||
        !f.eq(out.j5, out.j))
        throw std::logic_error("birational parameter identities violated");
    return out;
}

/// (u, v) = (nu - x', (4 xi y' + J u - alpha) / (2 u^2)) on the Somos-4 curve.
/// Degenerate when the point is at infinity or x' = nu (the source point P).
template <class F>
std::pair<typename F::Elem, typename F::Elem> weierstrass_to_somos4(
    const F& f, const BirationalParams<typename F::Elem>& t,
    const WPoint<typename F::Elem>& p) {
    if (p.infinite()) throw std::domain_error("cannot transport the point at infinity");
    auto u = f.sub(t.nu, p.x());
    if (f.is_zero(u)) throw std::domain_error("transport degenerate: x' = nu");
    auto num = f.sub(f.add(f.mul(f.mul(f.from_int(4), t.xi), p.y()), f.mul(t.j, u)), t.alpha);
    auto v = f.div(num, f.mul(f.from_int(2), f.mul(u, u)));
    return {std::move(u), std::move(v)};
}

/// x = -beta (alpha u + beta) / (uv) - a,  y = -beta uv - a.
template <class F>
std::pair<typename F::Elem, typename F::Elem> somos4_to_lyness(
    const F& f, const BirationalParams<typename F::Elem>& t, const typename F::Elem& u,
    const typename F::Elem& v) {
    auto uv = f.mul(u, v);
    auto x = f.sub(f.neg(f.div(f.mul(t.beta, f.add(f.mul(t.alpha, u), t.beta)), uv)), t.a);
    auto y = f.sub(f.neg(f.mul(t.beta, uv)), t.a);
    return {std::move(x), std::move(y)};
}

/// (-(x+a)/beta, -(y+a)/beta) lies on the Somos-5 curve of the bundle.
template <class F>
std::pair<typename F::Elem, typename F::Elem> lyness_to_somos5(
    const F& f, const BirationalParams<typename F::Elem>& t, const typename F::Elem& x,
    const typename F::Elem& y) {
    return {f.neg(f.div(f.add(x, t.a), t.beta)), f.neg(f.div(f.add(y, t.a), t.beta))};
}

/// Pencil membership evaluators (the conserved quantity solved from each
/// pencil equation), generic over the field.
template <class F>
typename F::Elem somos4_invariant_of(const F& f, const typename F::Elem& alpha,
                                     const typename F::Elem& beta, const typename F::Elem& x,
                                     const typename F::Elem& y) {
    auto xy = f.mul(x, y);
    return f.div(f.add(f.add(f.mul(xy, xy), f.mul(alpha, f.add(x, y))), beta), xy);
}

template <class F>
typename F::Elem somos5_invariant_of(const F& f, const typename F::Elem& alpha,
                                     const typename F::Elem& beta, const typename F::Elem& x,
                                     const typename F::Elem& y) {
    auto xy = f.mul(x, y);
    auto s = f.add(x, y);
    return f.div(f.add(f.add(f.mul(xy, s), f.mul(alpha, s)), beta), xy);
}

template <class F>
typename F::Elem lyness_invariant_of(const F& f, const typename F::Elem& a,
                                     const typename F::Elem& b, const typename F::Elem& x,
                                     const typename F::Elem& y) {
    auto xy = f.mul(x, y);
    auto s = f.add(x, y);
    auto num = f.add(f.mul(xy, s), f.mul(a, f.mul(s, s)));
    num = f.add(num, f.mul(f.add(f.mul(a, a), b), s));
    num = f.add(num, f.mul(a, b));
    return f.div(num, xy);
}

/// The twist carrying the Lyness curve back to a Weierstrass model:
///   Abar = alpha^2 beta^4 A, Bbar = alpha^3 beta^6 B,
///   (nubar, xibar) = ((beta J)^2 / 12 - beta^3 / 3, alpha^2 beta^3 / 2).
template <class E>
struct TwistCheck {
    E a_bar, b_bar, nu_bar, xi_bar;
    bool on_curve = false;
};

template <class F>
TwistCheck<typename F::Elem> twist_check(const F& f, const BirationalParams<typename F::Elem>& t,
                                         const typename F::Elem& A, const typename F::Elem& B) {
    using E = typename F::Elem;
    if (f.is_zero(t.beta)) throw std::domain_error("twist degenerate: beta = 0");
    E beta2 = f.mul(t.beta, t.beta);
    E beta3 = f.mul(beta2, t.beta);
    E alpha2 = f.mul(t.alpha, t.alpha);
    E a_bar = f.mul(f.mul(alpha2, f.mul(beta2, beta2)), A);
    E b_bar = f.mul(f.mul(f.mul(alpha2, t.alpha), f.mul(beta3, beta3)), B);
    E bj = f.mul(t.beta, t.j);
    E nu_bar = f.sub(f.div(f.mul(bj, bj), f.from_int(12)), f.div(beta3, f.from_int(3)));
    E xi_bar = f.div(f.mul(alpha2, beta3), f.from_int(2));
    Weierstrass<F> twisted{a_bar, b_bar};
    auto p = WPoint<E>::at(nu_bar, xi_bar);
    TwistCheck<E> out{std::move(a_bar), std::move(b_bar), nu_bar, xi_bar, false};
    out.on_curve = w_on_curve(f, twisted, p);
    return out;
}

}  // namespace qrtecm
