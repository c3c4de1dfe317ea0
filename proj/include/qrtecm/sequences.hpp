#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qrtecm/arith.hpp"

namespace qrtecm {

enum class SomosKind { somos4, somos5, somos7 };

unsigned somos_order(SomosKind kind);

namespace detail {

inline mpq_class seq_div(const mpq_class& a, const mpq_class& b) {
    if (b == 0) throw std::domain_error("division by zero in exact sequence");
    return a / b;
}

inline Residue seq_div(const Residue& a, const Residue& b) { return div(a, b); }

}  // namespace detail

/// Somos-4/5/7 tau-sequence engine over exact rationals or residues.
///   somos4: t[n+4] t[n] = A t[n+3] t[n+1] + B t[n+2]^2
///   somos5: t[n+5] t[n] = A t[n+4] t[n+1] + B t[n+3] t[n+2]
///   somos7: t[n+7] t[n] = A t[n+6] t[n+1] + B t[n+4] t[n+3]   (special form)
/// Terms are indexed from first_index; u(n) is the QRT substitution image:
///   somos4: u_n = t[n-1] t[n+1] / t[n]^2
///   somos5: u_n = t[n-2] t[n+1] / (t[n-1] t[n])
///   somos7: u_n = t[n-3] t[n+2] / (t[n-1] t[n])
template <class Elem>
class SomosSequence {
public:
    SomosSequence(SomosKind kind, Elem coeff_a, Elem coeff_b, std::vector<Elem> initial,
                  long first_index = 0)
        : kind_(kind), a_(std::move(coeff_a)), b_(std::move(coeff_b)),
          terms_(std::move(initial)), first_(first_index) {
        if (terms_.size() != somos_order(kind_))
            throw std::invalid_argument("somos sequence needs exactly `order` initial terms");
    }

    SomosKind kind() const { return kind_; }
    long first_index() const { return first_; }
    long last_index() const { return first_ + static_cast<long>(terms_.size()) - 1; }

    const Elem& term(long n) const {
        if (n < first_ || n > last_index())
            throw std::out_of_range("somos term not computed");
        return terms_[static_cast<std::size_t>(n - first_)];
    }

    void extend_to(long n) {
        while (last_index() < n) {
            std::size_t len = terms_.size();
            unsigned k = somos_order(kind_);
            const Elem& t_n = terms_[len - k];
            Elem lhs = [&]() -> Elem {  // force evaluation of gmp expression templates
                switch (kind_) {
                    case SomosKind::somos4:
                        return a_ * terms_[len - 1] * terms_[len - 3] +
                               b_ * terms_[len - 2] * terms_[len - 2];
                    case SomosKind::somos5:
                        return a_ * terms_[len - 1] * terms_[len - 4] +
                               b_ * terms_[len - 2] * terms_[len - 3];
                    case SomosKind::somos7:
                        return a_ * terms_[len - 1] * terms_[len - 6] +
                               b_ * terms_[len - 3] * terms_[len - 4];
                }
                throw std::logic_error("unreachable somos kind");
            }();
            terms_.push_back(detail::seq_div(lhs, t_n));
        }
    }

    Elem u(long n) {
        switch (kind_) {
            case SomosKind::somos4:
                extend_to(n + 1);
                return detail::seq_div(term(n - 1) * term(n + 1), term(n) * term(n));
            case SomosKind::somos5:
                extend_to(n + 1);
                return detail::seq_div(term(n - 2) * term(n + 1), term(n - 1) * term(n));
            case SomosKind::somos7:
                extend_to(n + 2);
                return detail::seq_div(term(n - 3) * term(n + 2), term(n - 1) * term(n));
        }
        throw std::logic_error("unreachable somos kind");
    }

private:
    SomosKind kind_;
    Elem a_, b_;
    std::vector<Elem> terms_;
    long first_;
};

/// Elliptic divisibility sequence: t0 = 0, t1 = 1, seeded by (t2, t3, t4)
/// with t2 | t4. Extension uses the m = 2 relation
///   t[n+2] t[n-2] = t2^2 t[n+1] t[n-1] - t3 t[n]^2,
/// a Somos-4 special case with A = t2^2, B = -t3. Degenerate sequences
/// (division by a zero term, or a non-exact division) are rejected.
class EdsSequence {
public:
    EdsSequence(mpz_class t2, mpz_class t3, mpz_class t4);

    void extend_to(long n);
    const mpz_class& term(long n) const;
    long computed() const { return static_cast<long>(terms_.size()) - 1; }

    /// t[n+m] t[n-m] == t[m]^2 t[n+1] t[n-1] - t[m+1] t[m-1] t[n]^2
    bool relation_a(long m, long n);
    /// t2 t[n+m+1] t[n-m] == t[m+1] t[m] t[n+2] t[n-1] - t[m+2] t[m-1] t[n+1] t[n]
    bool relation_b(long m, long n);

    /// Checks both relations for all 2 <= m < n <= n_max.
    bool check_range(long n_max);

private:
    std::vector<mpz_class> terms_;  // terms_[n] = t[n], n >= 0
};

/// State machine for the q-difference Painleve recurrence
///   u[n+2] u[n] = u[n+1] + b[n mod period] q^n.
/// next() emits u[n+2]; a non-invertible u[n] throws, and stream drivers
/// reseed deterministically.
class QpGenerator {
public:
    QpGenerator(Residue q, std::vector<Residue> b_table, Residue u0, Residue u1);

    Residue next();
    long emitted() const { return n_; }

private:
    Residue q_, q_power_, u_prev_, u_curr_;
    std::vector<Residue> b_;
    long n_ = 0;
};

struct PrngMeta {
    unsigned long reseeds = 0;
};

/// Deterministic byte stream: count outputs of 8 little-endian low-order
/// bytes of successive u values, after a 16-output warm-up. Initial values
/// come from the seed; on a non-invertible state the generator reseeds from
/// the next derived stream (counted in meta) and warms up again.
std::vector<std::uint8_t> prng_stream(const Modulus& n, const mpz_class& q,
                                      const std::vector<mpz_class>& b_table, std::uint64_t seed,
                                      std::size_t count, PrngMeta* meta = nullptr);

}  // namespace qrtecm
