#include "qrtecm/sequences.hpp"

namespace qrtecm {

unsigned somos_order(SomosKind kind) {
    switch (kind) {
        case SomosKind::somos4: return 4;
        case SomosKind::somos5: return 5;
        case SomosKind::somos7: return 7;
    }
    return 0;
}

EdsSequence::EdsSequence(mpz_class t2, mpz_class t3, mpz_class t4) {
    if (t2 == 0 || !mpz_divisible_p(t4.get_mpz_t(), t2.get_mpz_t()))
        throw std::domain_error("EDS seed requires t2 != 0 and t2 | t4");
    terms_ = {0, 1, std::move(t2), std::move(t3), std::move(t4)};
}

void EdsSequence::extend_to(long n) {
    while (computed() < n) {
        std::size_t k = terms_.size();  // computing t[k]
        const mpz_class& divisor = terms_[k - 4];
        if (divisor == 0)
            throw std::domain_error("degenerate EDS: extension divides by a zero term");
        mpz_class num = terms_[2] * terms_[2] * terms_[k - 1] * terms_[k - 3] -
                        terms_[3] * terms_[k - 2] * terms_[k - 2];
        if (!mpz_divisible_p(num.get_mpz_t(), divisor.get_mpz_t()))
            throw std::domain_error("degenerate EDS: non-exact division");
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), num.get_mpz_t(), divisor.get_mpz_t());
        terms_.push_back(std::move(t));
    }
}

const mpz_class& EdsSequence::term(long n) const {
    if (n < 0 || n > computed()) throw std::out_of_range("EDS term not computed");
    return terms_[static_cast<std::size_t>(n)];
}

bool EdsSequence::relation_a(long m, long n) {
    extend_to(n + m);
    return term(n + m) * term(n - m) ==
           term(m) * term(m) * term(n + 1) * term(n - 1) -
               term(m + 1) * term(m - 1) * term(n) * term(n);
}

bool EdsSequence::relation_b(long m, long n) {
    extend_to(n + m + 1);
    return term(2) * term(n + m + 1) * term(n - m) ==
           term(m + 1) * term(m) * term(n + 2) * term(n - 1) -
               term(m + 2) * term(m - 1) * term(n + 1) * term(n);
}

bool EdsSequence::check_range(long n_max) {
    for (long n = 3; n <= n_max; ++n)
        for (long m = 2; m < n; ++m)
            if (!relation_a(m, n) || !relation_b(m, n)) return false;
    return true;
}

QpGenerator::QpGenerator(Residue q, std::vector<Residue> b_table, Residue u0, Residue u1)
    : q_(std::move(q)), q_power_(Residue(1, q_.modulus())), u_prev_(std::move(u0)),
      u_curr_(std::move(u1)), b_(std::move(b_table)) {
    if (b_.empty()) throw std::invalid_argument("qp generator needs a nonempty b table");
}

Residue QpGenerator::next() {
    const Residue& b_n = b_[static_cast<std::size_t>(n_) % b_.size()];
    Residue num = add(u_curr_, mul(b_n, q_power_));
    Residue u_next = div(num, u_prev_);  // throws when u_prev is not a unit
    u_prev_ = u_curr_;
    u_curr_ = u_next;
    q_power_ = mul(q_power_, q_);
    ++n_;
    return u_next;
}

std::vector<std::uint8_t> prng_stream(const Modulus& n, const mpz_class& q,
                                      const std::vector<mpz_class>& b_table, std::uint64_t seed,
                                      std::size_t count, PrngMeta* meta) {
    if (count < 1) throw std::invalid_argument("prng_stream requires count >= 1");
    std::vector<Residue> b;
    b.reserve(b_table.size());
    for (const auto& v : b_table) b.emplace_back(v, n);
    Residue q_res(q, n);

    PrngMeta local;
    std::vector<std::uint8_t> out;
    out.reserve(count * 8);

    constexpr unsigned kWarmup = 16;
    unsigned long stream = 0;
    Rng root(seed);
    while (out.size() < count * 8) {
        Rng rng = root.fork(stream);
        QpGenerator gen(q_res, b, rng.residue(n), rng.residue(n));
        unsigned produced = 0;
        try {
            for (; out.size() < count * 8; ++produced) {
                Residue u = gen.next();
                if (produced < kWarmup) continue;
                mpz_class low;
                mpz_fdiv_r_2exp(low.get_mpz_t(), u.value().get_mpz_t(), 64);
                std::uint8_t bytes[8] = {0};
                std::size_t written = 0;
                mpz_export(bytes, &written, -1, 1, 0, 0, low.get_mpz_t());
                out.insert(out.end(), bytes, bytes + 8);
            }
        } catch (const NonInvertible&) {
            ++local.reseeds;
            ++stream;
            if (local.reseeds > 1'000'000)
                throw std::runtime_error("prng stream cannot make progress on this modulus");
        }
    }
    if (meta) *meta = local;
    return out;
}

}  // namespace qrtecm
