#include <doctest.h>

#include <array>
#include <vector>

#include "qrtecm/sequences.hpp"

using namespace qrtecm;

namespace {

mpq_class q(long num, long den = 1) { return mpq_class(num, den); }

// 2^64 - 59, the modulus used for byte-stream fixtures.
const mpz_class kPrng64("18446744073709551557");

}  // namespace

TEST_CASE("somos-4 all-ones sequence") {
    SomosSequence<mpq_class> seq(SomosKind::somos4, q(1), q(1), {q(1), q(1), q(1), q(1)});
    seq.extend_to(8);
    long expected[] = {1, 1, 1, 1, 2, 3, 7, 23, 59};
    for (long n = 0; n <= 8; ++n) CHECK(seq.term(n) == expected[n]);

    // stays integral for >= 30 terms (denominator-1 check in exact arithmetic)
    seq.extend_to(30);
    for (long n = 0; n <= 30; ++n) CHECK(seq.term(n).get_den() == 1);
}

TEST_CASE("somos-5 all-ones sequence") {
    SomosSequence<mpq_class> seq(SomosKind::somos5, q(1), q(1),
                                 {q(1), q(1), q(1), q(1), q(1)});
    seq.extend_to(9);
    long expected[] = {1, 1, 1, 1, 1, 2, 3, 5, 11, 37};
    for (long n = 0; n <= 9; ++n) CHECK(seq.term(n) == expected[n]);
    seq.extend_to(30);
    for (long n = 0; n <= 30; ++n) CHECK(seq.term(n).get_den() == 1);
}

TEST_CASE("tau_to_u on the all-ones somos-4") {
    SomosSequence<mpq_class> seq(SomosKind::somos4, q(1), q(1), {q(1), q(1), q(1), q(1)});
    CHECK(seq.u(2) == 1);
    CHECK(seq.u(3) == 2);
    CHECK(seq.u(4) == q(3, 4));
    // u4 u2 = (u3 + 1) / u3^2
    CHECK(seq.u(4) * seq.u(2) == (seq.u(3) + 1) / (seq.u(3) * seq.u(3)));

    // fifteen consecutive u values satisfy the quotient recurrence exactly
    for (long n = 2; n < 17; ++n)
        CHECK(seq.u(n + 2) * seq.u(n) == (seq.u(n + 1) + 1) / (seq.u(n + 1) * seq.u(n + 1)));
}

TEST_CASE("quotient recurrences for somos-5 and somos-7 images") {
    SomosSequence<mpq_class> s5(SomosKind::somos5, q(2), q(3),
                                {q(1), q(1), q(1), q(1), q(1)});
    for (long n = 2; n < 22; ++n)
        CHECK(s5.u(n + 2) * s5.u(n) == (2 * s5.u(n + 1) + 3) / s5.u(n + 1));

    SomosSequence<mpq_class> s7(SomosKind::somos7, q(1), q(2),
                                {q(1), q(1), q(1), q(1), q(1), q(1), q(1)});
    for (long n = 3; n < 23; ++n)
        CHECK(s7.u(n + 2) * s7.u(n) == s7.u(n + 1) + 2);
}

TEST_CASE("somos engines work modulo N") {
    Modulus n(mpz_class(1000003));
    auto r = [&](long v) { return Residue(v, n); };
    SomosSequence<Residue> seq(SomosKind::somos4, r(1), r(1), {r(1), r(1), r(1), r(1)});
    seq.extend_to(8);
    CHECK(seq.term(8) == r(59));
    // division by a non-unit raises the factor signal
    Modulus composite(mpz_class(35));
    auto c = [&](long v) { return Residue(v, composite); };
    SomosSequence<Residue> bad(SomosKind::somos4, c(1), c(1), {c(5), c(1), c(1), c(1)});
    CHECK_THROWS_AS(bad.extend_to(4), NonInvertible);
}

TEST_CASE("eds extension matches the direct recurrence") {
    EdsSequence eds(1, 1, -1);
    eds.extend_to(12);
    long expected[] = {0, 1, 1, 1, -1, -2, -3, -1, 7, 11, 20, -19, -87};
    for (long n = 0; n <= 12; ++n) CHECK(eds.term(n) == expected[n]);
}

TEST_CASE("eds seed (1,1,1) is degenerate: tau5 = 0 forces later zero division") {
    EdsSequence eds(1, 1, 1);
    eds.extend_to(5);
    CHECK(eds.term(5) == 0);
    CHECK_THROWS_AS(eds.extend_to(12), std::domain_error);
}

TEST_CASE("eds seeds require t2 | t4") {
    CHECK_THROWS_AS(EdsSequence(2, 1, 3), std::domain_error);
    CHECK_THROWS_AS(EdsSequence(0, 1, 0), std::domain_error);
}

TEST_CASE("eds relations hold for all 2 <= m < n <= 12 on three sequences") {
    EdsSequence a(1, 1, -1), b(1, -1, 1), c(2, 3, 8);
    CHECK(a.check_range(12));
    CHECK(b.check_range(12));
    CHECK(c.check_range(12));
}

TEST_CASE("eds relation with m = 1 is a tautology") {
    EdsSequence eds(2, 3, 8);
    for (long n = 2; n <= 10; ++n) CHECK(eds.relation_a(1, n));
}

TEST_CASE("one EDS drives all three QRT families in exact arithmetic") {
    // tau = 0, 1, 1, 1, -1, -2, -3, -1, 7, ... seeds, via the classical
    // substitutions, a Somos-4 orbit (A = t2^2, B = -t3), a Somos-5 orbit
    // (A = t3, B = -t4/t2) and a Lyness orbit (a = t4/t2, b = a^2 - t5),
    // all of which must agree with the map-side initial points and steps.
    EdsSequence eds(1, 1, -1);
    eds.extend_to(28);

    std::vector<mpq_class> tau;
    for (long n = 1; n <= 28; ++n) tau.push_back(mpq_class(eds.term(n)));

    // --- Somos-4 image ---
    {
        mpq_class alpha = 1, beta = -1;  // t2^2, -t3
        SomosSequence<mpq_class> seq(SomosKind::somos4, alpha, beta,
                                     {tau[0], tau[1], tau[2], tau[3]}, 1);
        seq.extend_to(24);
        for (long n = 1; n <= 24; ++n) CHECK(seq.term(n) == tau[n - 1]);

        mpq_class u2 = seq.u(2), u3 = seq.u(3);
        mpq_class j = (u2 * u2 * u3 * u3 + alpha * (u2 + u3) + beta) / (u2 * u3);
        CHECK(u2 == -beta / alpha);
        CHECK(u3 == -alpha * (alpha * alpha + beta * j) / (beta * beta));
        mpq_class a = u2, bq = u3;
        for (long n = 2; n <= 20; ++n) {
            mpq_class next = (alpha * bq + beta) / (a * bq * bq);
            CHECK(next == seq.u(n + 2));
            a = bq;
            bq = next;
        }
    }

    // --- Somos-5 image ---
    {
        mpq_class alpha = tau[2], beta = -tau[3] / tau[1];  // t3, -t4/t2
        SomosSequence<mpq_class> seq(SomosKind::somos5, alpha, beta,
                                     {tau[0], tau[1], tau[2], tau[3], tau[4]}, 1);
        seq.extend_to(24);
        for (long n = 1; n <= 24; ++n) CHECK(seq.term(n) == tau[n - 1]);

        mpq_class u3 = seq.u(3), u4 = seq.u(4);
        mpq_class j = (u3 * u4 * (u3 + u4) + alpha * (u3 + u4) + beta) / (u3 * u4);
        CHECK(u3 == -beta / alpha);
        CHECK(u4 == j + alpha * alpha / beta + beta / alpha);
        mpq_class x = u3, y = u4;
        for (long n = 3; n <= 20; ++n) {
            mpq_class next = (alpha * y + beta) / (x * y);
            CHECK(next == seq.u(n + 2));
            x = y;
            y = next;
        }
    }

    // --- Lyness image via the special Somos-7 ---
    {
        mpq_class a = tau[3] / tau[1];                    // t4/t2 = -1
        mpq_class b = a * a - mpq_class(eds.term(5));     // 1 - (-2) = 3
        CHECK(a == -1);
        CHECK(b == 3);
        SomosSequence<mpq_class> seq(SomosKind::somos7, a, b,
                                     {tau[0], tau[1], tau[2], tau[3], tau[4], tau[5], tau[6]},
                                     1);
        seq.extend_to(24);
        for (long n = 1; n <= 24; ++n) CHECK(seq.term(n) == tau[n - 1]);

        mpq_class u4 = seq.u(4), u5 = seq.u(5);
        CHECK(u4 == 3);
        CHECK(u5 == mpq_class(-1, 2));
        mpq_class s = u4 + u5;
        mpq_class k = (u4 * u5 * s + a * s * s + (a * a + b) * s + a * b) / (u4 * u5);
        CHECK(k == 2);
        CHECK(u4 == -b / a);
        CHECK(u5 == -a - b * (k * a + b) / (a * (a * a - b)));
        mpq_class x = u4, y = u5;
        for (long n = 4; n <= 20; ++n) {
            mpq_class next = (a * y + b) / x;
            CHECK(next == seq.u(n + 2));
            x = y;
            y = next;
        }
    }
}

TEST_CASE("qp recurrence worked example mod 101") {
    Modulus n(mpz_class(101));
    auto r = [&](long v) { return Residue(v, n); };
    QpGenerator gen(r(3), {r(1), r(2), r(3), r(4), r(5), r(6)}, r(1), r(1));
    CHECK(gen.next() == r(2));   // (1 + 1*1) / 1
    CHECK(gen.next() == r(8));   // (2 + 2*3) / 1
    CHECK(gen.next() == r(68));  // (8 + 3*9) / 2
}

TEST_CASE("qp with q = 1 and constant b reproduces the lyness recurrence") {
    Modulus n(mpz_class(10007));
    auto r = [&](long v) { return Residue(v, n); };
    // u_{n+2} u_n = u_{n+1} + b  <=>  Lyness with a = 1
    Residue b = r(42);
    QpGenerator gen(r(1), {b, b, b, b, b, b}, r(3), r(5));
    Residue x = r(3), y = r(5);
    for (int i = 0; i < 50; ++i) {
        Residue next = div(add(y, b), x);
        CHECK(gen.next() == next);
        x = y;
        y = next;
    }
}

TEST_CASE("qp generator signals non-invertible state") {
    Modulus n(mpz_class(35));
    auto r = [&](long v) { return Residue(v, n); };
    QpGenerator gen(r(2), {r(1)}, r(5), r(3));  // u_prev = 5 shares a factor with 35
    CHECK_THROWS_AS(gen.next(), NonInvertible);
}

TEST_CASE("qp determinism") {
    Modulus n(kPrng64);
    auto r = [&](long v) { return Residue(v, n); };
    QpGenerator g1(r(3), {r(1), r(2), r(3)}, r(7), r(9));
    QpGenerator g2(r(3), {r(1), r(2), r(3)}, r(7), r(9));
    for (int i = 0; i < 100; ++i) CHECK(g1.next() == g2.next());
}

TEST_CASE("prng byte stream golden fixture") {
    Modulus n(kPrng64);
    PrngMeta meta;
    auto bytes = prng_stream(n, 3, {1, 2, 3, 4, 5}, 7, 4, &meta);
    REQUIRE(bytes.size() == 32);
    static const char* kGolden =
        "c6acb2bd68d90a2fb48fb7105a0dbe92091fcbd3192eb7c50de57d9ea011d5cf";
    std::string hex;
    for (auto b : bytes) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", b);
        hex += buf;
    }
    CHECK(hex == kGolden);
    CHECK(meta.reseeds == 0);

    // identical inputs, identical stream
    CHECK(prng_stream(n, 3, {1, 2, 3, 4, 5}, 7, 4) == bytes);
}

TEST_CASE("prng q sensitivity: q = 1 and q = 3 diverge in the first block") {
    Modulus n(kPrng64);
    auto q3 = prng_stream(n, 3, {1, 2, 3, 4, 5}, 7, 4);
    auto q1 = prng_stream(n, 1, {1, 2, 3, 4, 5}, 7, 4);
    CHECK(!std::equal(q3.begin(), q3.begin() + 8, q1.begin()));
}

TEST_CASE("prng monobit sanity at unit-test scale") {
    Modulus n(kPrng64);
    auto bytes = prng_stream(n, 3, {1, 2, 3, 4, 5, 6}, 11, 4000);
    long ones = 0;
    for (auto b : bytes) ones += __builtin_popcount(b);
    double frequency = static_cast<double>(ones) / (8.0 * static_cast<double>(bytes.size()));
    CHECK(frequency > 0.485);
    CHECK(frequency < 0.515);
}

TEST_CASE("prng reseeds deterministically over a composite modulus") {
    // mod 91 roughly a fifth of all residues are non-units, so the stream
    // must reseed its way through and still deliver the full byte count
    Modulus n(mpz_class(91));
    PrngMeta meta;
    auto bytes = prng_stream(n, 2, {1, 2, 3}, 3, 4, &meta);
    CHECK(bytes.size() == 32);
    CHECK(meta.reseeds > 0);
    PrngMeta meta2;
    CHECK(prng_stream(n, 2, {1, 2, 3}, 3, 4, &meta2) == bytes);
    CHECK(meta2.reseeds == meta.reseeds);
}

TEST_CASE("period-5 table with q = 1 exposes the chaotic variant") {
    Modulus n(mpz_class(1000003));
    auto a = prng_stream(n, 1, {1, 2, 3, 4, 5}, 3, 8);
    auto b = prng_stream(n, 1, {1, 2, 3, 4, 5, 6}, 3, 8);
    CHECK(a != b);  // table period matters even at q = 1
}
