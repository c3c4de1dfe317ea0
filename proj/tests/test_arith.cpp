#include <doctest.h>

#include <map>
#include <set>

#include "qrtecm/arith.hpp"

using namespace qrtecm;

namespace {

// Independent gcd oracle: largest common element of the divisor sets.
mpz_class brute_gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class best = 0;
    for (mpz_class d = 1; d <= a && d <= b; ++d)
        if (a % d == 0 && b % d == 0) best = d;
    if (a == 0) return b;
    if (b == 0) return a;
    return best;
}

const mpz_class kRegressionN("1950153409");

}  // namespace

TEST_CASE("gcd matches the pinned instance and small oracles") {
    CHECK(gcd(mpz_class("56956778"), kRegressionN) == 16433);
    CHECK(gcd(mpz_class(0), mpz_class(7)) == 7);
    CHECK(gcd(mpz_class(2520), mpz_class(2310)) == brute_gcd(2520, 2310));
    CHECK(gcd(mpz_class(2520), mpz_class(2310)) == 210);
}

TEST_CASE("gcd properties") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        mpz_class a = rng.below(mpz_class(100000));
        mpz_class b = rng.below(mpz_class(100000));
        if (a == 0 && b == 0) continue;
        mpz_class g = gcd(a, b);
        CHECK(g == gcd(b, a));
        CHECK(g > 0);
        CHECK(a % g == 0);
        CHECK(b % g == 0);
        mpz_class c = rng.below(mpz_class(100000)) + 1;
        CHECK(gcd(gcd(a, c), b) == gcd(a, gcd(c, b)));
    }
}

TEST_CASE("canonical representatives") {
    Modulus n(kRegressionN);
    CHECK(Residue(-1, n).value() == mpz_class("1950153408"));
    Modulus seven(mpz_class(7));
    CHECK(sub(Residue(0, seven), Residue(5, seven)).value() == 2);
    CHECK(mul(Residue(mpz_class("1482116591"), n), Residue(25, n)).value() == 4);
}

TEST_CASE("try_invert returns inverses and factor signals") {
    Modulus ten(mpz_class(10));
    auto good = try_invert(Residue(3, ten));
    REQUIRE(std::holds_alternative<Residue>(good));
    CHECK(std::get<Residue>(good).value() == 7);

    auto bad = try_invert(Residue(5, ten));
    REQUIRE(std::holds_alternative<NonInvertible>(bad));
    CHECK(std::get<NonInvertible>(bad).gcd() == 5);

    Modulus n(kRegressionN);
    auto paper = try_invert(Residue(mpz_class("56956778"), n));
    REQUIRE(std::holds_alternative<NonInvertible>(paper));
    CHECK(std::get<NonInvertible>(paper).gcd() == 16433);

    auto zero = try_invert(Residue(0, ten));
    REQUIRE(std::holds_alternative<NonInvertible>(zero));
    CHECK(std::get<NonInvertible>(zero).gcd() == 10);
    CHECK(std::get<NonInvertible>(zero).total());
}

TEST_CASE("inversion round-trips and the gcd signal divides both sides") {
    mpz_class composite(30030);  // 2*3*5*7*11*13
    Modulus n(composite);
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Residue x = rng.residue(n);
        auto r = try_invert(x);
        if (auto* inv = std::get_if<Residue>(&r)) {
            CHECK(mul(x, *inv).value() == 1);
        } else {
            const auto& sig = std::get<NonInvertible>(r);
            CHECK(sig.gcd() > 1);
            CHECK(sig.gcd() <= composite);
            CHECK(composite % sig.gcd() == 0);
            if (!x.is_zero()) CHECK(x.value() % sig.gcd() == 0);
        }
    }
}

TEST_CASE("div counts one multiplication and detects factors") {
    Modulus n(kRegressionN);
    OpCounter ops;
    Residue q = div(Residue(4, n), Residue(25, n), &ops);
    CHECK(q.value() == mpz_class("1482116591"));
    CHECK(ops.m == 1);
    CHECK_THROWS_AS(div(Residue(1, n), Residue(16433, n)), NonInvertible);
}

TEST_CASE("residue ops require matching moduli") {
    Modulus a(mpz_class(11)), b(mpz_class(13));
    CHECK_THROWS_AS(add(Residue(1, a), Residue(1, b)), std::logic_error);
}

TEST_CASE("rng determinism and coverage") {
    Modulus ten(mpz_class(10));
    Rng r1(1), r2(1);
    for (int i = 0; i < 100; ++i) CHECK(r1.next_u64() == r2.next_u64());

    Rng s1(1), s2(1);
    std::set<unsigned long> seen;
    for (int i = 0; i < 10000; ++i) {
        Residue a = s1.residue(ten);
        Residue b = s2.residue(ten);
        CHECK(a == b);
        CHECK(a.value() >= 0);
        CHECK(a.value() < 10);
        seen.insert(a.value().get_ui());
    }
    CHECK(seen.size() == 10);  // every residue hit at least once

    CHECK(Rng(1).fork(3).next_u64() != Rng(1).fork(4).next_u64());
    CHECK(Rng(1).fork(3).next_u64() == Rng(1).fork(3).next_u64());
}

TEST_CASE("integer parsing accepts decimal and 0x hex") {
    CHECK(parse_integer("1950153409") == kRegressionN);
    CHECK(parse_integer("0xff") == 255);
    CHECK(parse_integer("-0x10") == -16);
    CHECK(parse_integer("-7") == -7);
    CHECK_THROWS_AS(parse_integer("12z"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
}
