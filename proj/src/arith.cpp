#include "qrtecm/arith.hpp"

#include <ostream>
#include <stdexcept>

namespace qrtecm {

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
    if (!(a.modulus() == b.modulus()))
        throw std::logic_error("residue operands have different moduli");
}

mpz_class canonical(const mpz_class& v, const mpz_class& n) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

Modulus::Modulus(mpz_class n) : n_(std::make_shared<const mpz_class>(std::move(n))) {
    if (*n_ < 2) throw std::invalid_argument("modulus must be >= 2");
}

Residue::Residue(mpz_class v, Modulus m)
    : value_(canonical(v, m.value())), modulus_(std::move(m)) {}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Residue add(const Residue& a, const Residue& b, OpCounter* ops) {
    require_same_modulus(a, b);
    if (ops) ++ops->add;
    mpz_class v = a.value() + b.value();
    if (v >= a.modulus().value()) v -= a.modulus().value();
    return Residue(std::move(v), a.modulus());
}

Residue sub(const Residue& a, const Residue& b, OpCounter* ops) {
    require_same_modulus(a, b);
    if (ops) ++ops->add;
    mpz_class v = a.value() - b.value();
    if (v < 0) v += a.modulus().value();
    return Residue(std::move(v), a.modulus());
}

Residue mul(const Residue& a, const Residue& b, OpCounter* ops) {
    require_same_modulus(a, b);
    if (ops) ++ops->m;
    return Residue(a.value() * b.value(), a.modulus());
}

Residue sqr(const Residue& a, OpCounter* ops) {
    if (ops) ++ops->s;
    return Residue(a.value() * a.value(), a.modulus());
}

Residue neg(const Residue& a) {
    if (a.is_zero()) return a;
    return Residue(a.modulus().value() - a.value(), a.modulus());
}

std::variant<Residue, NonInvertible> try_invert(const Residue& x) {
    const mpz_class& n = x.modulus().value();
    mpz_class g, s;
    // Extended Euclid: the gcd falls out of the same computation that
    // produces the inverse, which is exactly the ECM signal path.
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, x.value().get_mpz_t(),
               n.get_mpz_t());
    if (x.is_zero() || g != 1)
        return NonInvertible(x.is_zero() ? n : g, n);
    return Residue(std::move(s), x.modulus());
}

Residue invert(const Residue& x) {
    auto r = try_invert(x);
    if (auto* bad = std::get_if<NonInvertible>(&r)) throw *bad;
    return std::get<Residue>(std::move(r));
}

Residue div(const Residue& a, const Residue& b, OpCounter* ops) {
    return mul(a, invert(b), ops);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

Rng Rng::fork(std::uint64_t stream) const {
    return Rng(splitmix64(splitmix64(state_ ^ (0xA0761D6478BD642FULL * (stream + 1)))));
}

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

mpz_class Rng::below(const mpz_class& bound) {
    if (bound < 1) throw std::invalid_argument("Rng::below requires bound >= 1");
    // 64 surplus bits keep the modular bias under 2^-64.
    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 64;
    std::size_t words = (bits + 63) / 64;
    mpz_class acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        acc <<= 64;
        std::uint64_t w = next_u64();
        mpz_class chunk;
        mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        acc += chunk;
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), bound.get_mpz_t());
    return r;
}

Residue Rng::residue(const Modulus& m) { return Residue(below(m.value()), m); }

mpz_class parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    mpz_class v;
    std::size_t at = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    int base = 10;
    if (s.size() >= at + 2 && s[at] == '0' && (s[at + 1] == 'x' || s[at + 1] == 'X')) {
        base = 16;
        s.erase(at, 2);
    }
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), base) != 0)
        throw std::invalid_argument("malformed integer literal: " + std::string(text));
    return v;
}

std::string to_string(const Residue& r) { return r.value().get_str(); }

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value().get_str() << " (mod " << r.modulus().value().get_str() << ")";
}

}  // namespace qrtecm
