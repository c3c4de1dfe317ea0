#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <exception>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace qrtecm {

/// Cost tallies for ring operations: general multiplications (m), squarings
/// (s), multiplications by the curve parameter b (b), and additions (add).
/// Counters are confined to one trial and merged by summation afterwards.
struct OpCounter {
    std::uint64_t m = 0;
    std::uint64_t s = 0;
    std::uint64_t b = 0;
    std::uint64_t add = 0;

    void reset() { m = s = b = add = 0; }

    OpCounter& operator+=(const OpCounter& o) {
        m += o.m;
        s += o.s;
        b += o.b;
        add += o.add;
        return *this;
    }

    OpCounter operator-(const OpCounter& o) const {
        return OpCounter{m - o.m, s - o.s, b - o.b, add - o.add};
    }

    bool operator==(const OpCounter& o) const = default;
};

/// The ring modulus N >= 2. Cheap to copy; residues hold one by value.
class Modulus {
public:
    explicit Modulus(mpz_class n);

    const mpz_class& value() const { return *n_; }
    std::size_t bits() const { return mpz_sizeinbase(n_->get_mpz_t(), 2); }

    bool operator==(const Modulus& o) const {
        return n_ == o.n_ || *n_ == *o.n_;
    }

private:
    std::shared_ptr<const mpz_class> n_;
};

/// Signal raised when a modular division hits a non-unit. Carries
/// g = gcd(divisor, n) with 1 < g <= n. For the ECM this is the success
/// path, not a fault: 1 < g < n is a factor of n, g == n is a collapse.
class NonInvertible : public std::exception {
public:
    NonInvertible(mpz_class g, mpz_class modulus)
        : gcd_(std::move(g)), modulus_(std::move(modulus)) {}

    const mpz_class& gcd() const noexcept { return gcd_; }
    const mpz_class& modulus() const noexcept { return modulus_; }
    bool total() const noexcept { return gcd_ == modulus_; }

    const char* what() const noexcept override {
        return "non-invertible residue (gcd with modulus is > 1)";
    }

private:
    mpz_class gcd_;
    mpz_class modulus_;
};

/// Canonical representative of x mod n, always in [0, n).
class Residue {
public:
    Residue(mpz_class v, Modulus m);
    Residue(long v, Modulus m) : Residue(mpz_class(v), std::move(m)) {}

    const mpz_class& value() const { return value_; }
    const Modulus& modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    bool operator==(const Residue& o) const {
        return modulus_ == o.modulus_ && value_ == o.value_;
    }

private:
    mpz_class value_;
    Modulus modulus_;
};

mpz_class gcd(const mpz_class& a, const mpz_class& b);

/// Ring operations. The optional counter receives one tick per operation
/// (mul -> m, sqr -> s, add/sub -> add); it is passed in context so that
/// concurrent trials never share tallies.
Residue add(const Residue& a, const Residue& b, OpCounter* ops = nullptr);
Residue sub(const Residue& a, const Residue& b, OpCounter* ops = nullptr);
Residue mul(const Residue& a, const Residue& b, OpCounter* ops = nullptr);
Residue sqr(const Residue& a, OpCounter* ops = nullptr);
Residue neg(const Residue& a);

inline Residue operator+(const Residue& a, const Residue& b) { return add(a, b); }
inline Residue operator-(const Residue& a, const Residue& b) { return sub(a, b); }
inline Residue operator*(const Residue& a, const Residue& b) { return mul(a, b); }
inline Residue operator-(const Residue& a) { return neg(a); }

/// Attempts to invert x in Z/nZ. Returns the inverse when gcd(x, n) = 1,
/// otherwise the NonInvertible payload with g = gcd(x, n) (x = 0 gives g = n).
/// Never throws; the throwing form below is what the map formulas use.
std::variant<Residue, NonInvertible> try_invert(const Residue& x);

/// Inverse of x, or throws NonInvertible.
Residue invert(const Residue& x);

/// a / b = a * invert(b); counts one multiplication. Throws NonInvertible.
Residue div(const Residue& a, const Residue& b, OpCounter* ops = nullptr);

/// Deterministic stream generator (splitmix64). Same seed, same stream;
/// fork(k) derives an independent child stream for trial k.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    Rng fork(std::uint64_t stream) const;

    std::uint64_t next_u64();

    /// Uniform-ish value in [0, bound); bias below 2^-64. Requires bound >= 1.
    mpz_class below(const mpz_class& bound);

    Residue residue(const Modulus& m);

private:
    std::uint64_t state_;
};

inline Residue random_residue(Rng& rng, const Modulus& m) { return rng.residue(m); }

/// Parses a decimal or "0x"-prefixed hex integer, with optional sign.
mpz_class parse_integer(std::string_view text);

std::string to_string(const Residue& r);
std::ostream& operator<<(std::ostream& os, const Residue& r);

}  // namespace qrtecm
