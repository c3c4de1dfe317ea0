#include <doctest.h>

#include <vector>

#include "qrtecm/curves.hpp"
#include "qrtecm/ecm.hpp"

using namespace qrtecm;

namespace {

const Modulus kN(mpz_class("1950153409"));
const Modulus kP101(mpz_class(101));

Somos4Curve regression_curve() { return {Residue(1, kN), Residue(1, kN), Residue(4, kN)}; }

Residue r101(long v) { return Residue(v, kP101); }

}  // namespace

TEST_CASE("somos-4 step walks the pinned regression sequence") {
    Somos4Curve c = regression_curve();
    IndexedPoint p = s4_init(c);
    CHECK(p.n == 2);
    CHECK(p.x == Residue(-1, kN));
    CHECK(p.y == Residue(-5, kN));

    const char* expected[] = {"1482116591", "121884579", "452175879", "1062558798",
                              "154165861", "1566968710", "1329544730", "56956778"};
    for (const char* u : expected) {
        p = s4_step(c, p);
        CHECK(p.y == Residue(mpz_class(u), kN));
    }
    CHECK(p.n == 10);  // (u_10, u_11)
}

TEST_CASE("somos-4 doubling follows the pinned chain into the factor event") {
    Somos4Curve c = regression_curve();
    IndexedPoint p3 = s4_step(c, s4_init(c));
    IndexedPoint p6 = s4_double(c, p3);
    CHECK(p6.n == 6);
    CHECK(p6.x == Residue(mpz_class("452175879"), kN));
    CHECK(p6.y == Residue(mpz_class("1062558798"), kN));
    try {
        s4_double(c, p6);
        CHECK(false);
    } catch (const NonInvertible& e) {
        CHECK(e.gcd() == 16433);
        CHECK_FALSE(e.total());
    }
}

TEST_CASE("somos-4 degenerate pencil fixed point") {
    Modulus n(mpz_class(97));
    Somos4Curve c{Residue(1, n), Residue(0, n), Residue(3, n)};
    IndexedPoint p{5, Residue(1, n), Residue(1, n)};
    IndexedPoint q = s4_step(c, p);
    CHECK(q.x == Residue(1, n));
    CHECK(q.y == Residue(1, n));
    CHECK(q.n == 6);
}

TEST_CASE("somos-4 initial points") {
    Modulus p7(mpz_class(7));
    Somos4Curve c7{Residue(1, p7), Residue(1, p7), Residue(0, p7)};
    IndexedPoint p = s4_init(c7);
    CHECK(p.x == Residue(6, p7));
    CHECK(p.y == Residue(6, p7));

    // Direct modular evaluation: (-3*2^-1, -2(4+15)*3^-2) over F_101.
    Somos4Curve c{r101(2), r101(3), r101(5)};
    IndexedPoint q = s4_init(c);
    CHECK(q.x == r101(49));
    CHECK(q.y == r101(7));
    CHECK(s4_invariant(c, q.x, q.y) == r101(5));  // lands on its own pencil member
}

TEST_CASE("somos-4 invariant values") {
    Somos4Curve c = regression_curve();
    CHECK(s4_invariant(c, Residue(-1, kN), Residue(-5, kN)) == Residue(4, kN));
    CHECK(s4_invariant(c, Residue(-5, kN), Residue(mpz_class("1482116591"), kN)) ==
          Residue(4, kN));
    Modulus n(mpz_class(1009));
    Somos4Curve u{Residue(1, n), Residue(1, n), Residue(0, n)};
    CHECK(s4_invariant(u, Residue(1, n), Residue(1, n)) == Residue(4, n));
}

TEST_CASE("somos-5 step, double and init") {
    Somos5Curve c{r101(1), r101(1), r101(2)};
    IndexedPoint p3 = s5_init(c);
    CHECK(p3.n == 3);
    CHECK(p3.x == r101(100));
    CHECK(p3.y == r101(4));

    IndexedPoint p4 = s5_step(c, p3);
    CHECK(p4.x == r101(4));
    CHECK(p4.y == r101(24));  // (4+1) / (100*4) over F_101

    // psi(3P) == 6P reached by three addition steps
    IndexedPoint p6 = s5_step(c, s5_step(c, p4));
    IndexedPoint p6d = s5_double(c, p3);
    CHECK(p6d.n == 6);
    CHECK(p6d.x == p6.x);
    CHECK(p6d.y == p6.y);

    // x == y makes the (x - y) denominator collapse
    IndexedPoint diag{3, r101(5), r101(5)};
    CHECK_THROWS_AS(s5_double(c, diag), NonInvertible);

    // x = 0 is a zero divisor: gcd is the whole modulus
    IndexedPoint zero_x{3, r101(0), r101(9)};
    try {
        s5_step(c, zero_x);
        CHECK(false);
    } catch (const NonInvertible& e) {
        CHECK(e.total());
    }
}

TEST_CASE("somos-5 init special shapes") {
    Modulus n(mpz_class(1009));
    Somos5Curve c{Residue(1, n), Residue(-1, n), Residue(0, n)};
    IndexedPoint p = s5_init(c);
    CHECK(p.x == Residue(1, n));
    CHECK(p.y == Residue(-2, n));

    // alpha == beta pins the first coordinate at -1
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        Residue ab = rng.residue(n);
        if (ab.is_zero()) continue;
        Somos5Curve eq{ab, ab, rng.residue(n)};
        CHECK(s5_init(eq).x == Residue(-1, n));
    }
}

TEST_CASE("somos-5 second coordinate vanishes at y = -beta/alpha") {
    Somos5Curve c{r101(3), r101(7), r101(2)};
    Residue y = neg(div(c.beta, c.alpha));
    IndexedPoint p{3, r101(1), y};
    CHECK(s5_step(c, p).y == r101(0));
}

TEST_CASE("somos-5 invariant") {
    Somos5Curve c{r101(1), r101(1), r101(5)};
    CHECK(s5_invariant(c, r101(1), r101(1)) == r101(5));  // (2+2+1)/1

    Somos5Curve orbit{r101(1), r101(1), r101(2)};  // survives 20 steps over F_101
    IndexedPoint p = s5_init(orbit);
    CHECK(s5_invariant(orbit, p.x, p.y) == orbit.j);
    for (int i = 0; i < 20; ++i) {
        p = s5_step(orbit, p);
        CHECK(s5_invariant(orbit, p.x, p.y) == orbit.j);
    }
}

TEST_CASE("lyness step matches the small multiples") {
    LynessCurve c(r101(7), r101(13), r101(4));
    // 2P = (-a, 0) -> 3P = (0, -b/a)
    IndexedPoint p2{2, neg(c.a), r101(0)};
    IndexedPoint p3 = lyness_step(c, p2);
    CHECK(p3.x == r101(0));
    CHECK(p3.y == neg(div(c.b, c.a)));

    LynessCurve simple(r101(1), r101(3), r101(0));
    IndexedPoint p{9, r101(2), r101(5)};
    IndexedPoint q = lyness_step(simple, p);
    CHECK(q.x == r101(5));
    CHECK(q.y == r101(4));
}

TEST_CASE("lyness 5-periodicity when b = a^2") {
    Rng rng(17);
    Modulus n(mpz_class(10007));
    for (int i = 0; i < 50; ++i) {
        Residue a = rng.residue(n);
        if (a.is_zero()) continue;
        LynessCurve c(a, sqr(a), rng.residue(n));
        CHECK(c.five_torsion);
        IndexedPoint p{0, rng.residue(n), rng.residue(n)};
        if (p.x.is_zero() || p.y.is_zero()) continue;
        IndexedPoint q = p;
        bool defined = true;
        try {
            for (int k = 0; k < 5; ++k) q = lyness_step(c, q);
        } catch (const NonInvertible&) {
            defined = false;  // orbit through a pole; not a counterexample
        }
        if (defined) {
            CHECK(q.x == p.x);
            CHECK(q.y == p.y);
        }
    }
}

TEST_CASE("lyness doubling") {
    LynessCurve c(r101(1), r101(2), r101(3));
    // first coordinate of psi at 2P = (-a, 0) is -b/a by cancellation
    CHECK(lyness_r(c, neg(c.a), r101(0)) == neg(div(c.b, c.a)));
    // the full psi is singular there (second component divides by zero)
    IndexedPoint p2{2, neg(c.a), r101(0)};
    CHECK_THROWS_AS(lyness_double(c, p2), NonInvertible);

    // psi(4P) equals four addition steps past 4P
    IndexedPoint p4 = lyness_init(c);
    IndexedPoint p8 = p4;
    for (int i = 0; i < 4; ++i) p8 = lyness_step(c, p8);
    IndexedPoint p8d = lyness_double(c, p4);
    CHECK(p8d.n == 8);
    CHECK(p8d.x == p8.x);
    CHECK(p8d.y == p8.y);

    IndexedPoint diag{4, r101(6), r101(6)};
    CHECK_THROWS_AS(lyness_double(c, diag), NonInvertible);
}

TEST_CASE("lyness init") {
    LynessCurve c(r101(1), r101(2), r101(3));
    IndexedPoint p = lyness_init(c);
    CHECK(p.n == 4);
    CHECK(p.x == r101(99));
    CHECK(p.y == r101(9));

    LynessCurve b0(r101(5), r101(0), r101(9));
    IndexedPoint q = lyness_init(b0);
    CHECK(q.x == r101(0));
    CHECK(q.y == neg(b0.a));

    // two steps from 4P reach index 6 and stay on the pencil member
    IndexedPoint p6 = lyness_step(c, lyness_step(c, p));
    CHECK(p6.n == 6);
    CHECK(lyness_invariant(c, p6.x, p6.y) == c.k);
}

TEST_CASE("lyness invariant") {
    Modulus n(mpz_class(997));
    LynessCurve c(Residue(1, n), Residue(1, n), Residue(0, n));
    CHECK(lyness_invariant(c, Residue(1, n), Residue(1, n)) == Residue(11, n));

    LynessCurve c2(Residue(3, n), Residue(5, n), Residue(7, n));
    IndexedPoint p = lyness_init(c2);
    CHECK(lyness_invariant(c2, p.x, p.y) == c2.k);
}

TEST_CASE("edwards toy step is 4-periodic") {
    Modulus n(mpz_class(65537));
    CHECK(edwards_step(Residue(1, n), Residue(2, n)) ==
          std::pair<Residue, Residue>{Residue(2, n), Residue(-1, n)});

    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Residue x = rng.residue(n), y = rng.residue(n);
        auto p = std::pair<Residue, Residue>{x, y};
        for (int k = 0; k < 4; ++k) p = edwards_step(p.first, p.second);
        CHECK(p.first == x);
        CHECK(p.second == y);
    }
    auto z = std::pair<Residue, Residue>{Residue(0, n), Residue(0, n)};
    for (int k = 0; k < 4; ++k) z = edwards_step(z.first, z.second);
    CHECK(z.first.is_zero());
    CHECK(z.second.is_zero());
}

TEST_CASE("involutions") {
    // Lyness / Somos-5: plain swap
    IndexedPoint p{6, r101(2), r101(5)};
    IndexedPoint q = lyness_involution(p);
    CHECK(q.x == r101(5));
    CHECK(q.y == r101(2));
    CHECK(q.n == -6);

    // Somos-4 at the regression curve's 2P: (-1, (-1+1)/((1)(-5))) = (-1, 0)
    Somos4Curve c = regression_curve();
    IndexedPoint p2{2, Residue(-1, kN), Residue(-5, kN)};
    IndexedPoint m2 = s4_involution(c, p2);
    CHECK(m2.x == Residue(-1, kN));
    CHECK(m2.y == Residue(0, kN));

    // involution is an involution on random Somos-4 points over F_101
    Somos4Curve small{r101(3), r101(8), r101(11)};
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        IndexedPoint r{1, rng.residue(kP101), rng.residue(kP101)};
        if (r.x.is_zero() || r.y.is_zero()) continue;
        try {
            IndexedPoint rr = s4_involution(small, s4_involution(small, r));
            CHECK(rr.x == r.x);
            CHECK(rr.y == r.y);
            CHECK(rr.n == r.n);
        } catch (const NonInvertible&) {
            // iota(r) landed on the y = 0 axis; the second division
            // legitimately fails there
        }
    }
}

TEST_CASE("conservation and index commutation across families") {
    Modulus n(mpz_class(10007));
    Rng rng(41);
    int orbits = 0;
    int attempts = 0;
    while (orbits < 20 && attempts < 200) {
        Rng trial = rng.fork(static_cast<std::uint64_t>(attempts++));
        CurveParams params = sample_params(static_cast<Family>(orbits % 3), n, trial);
        try {
            IndexedPoint p = curve_init(params);
            Residue j = curve_invariant(params, p.x, p.y);
            for (int step = 0; step < 20; ++step) {
                p = (trial.next_u64() % 3 == 0) ? curve_double(params, p)
                                                : curve_step(params, p);
                CHECK(curve_invariant(params, p.x, p.y) == j);
            }
            // psi . phi == phi . phi . psi where defined
            IndexedPoint lhs = curve_double(params, curve_step(params, p));
            IndexedPoint rhs = curve_step(params, curve_step(params, curve_double(params, p)));
            CHECK(lhs.n == rhs.n);
            CHECK(lhs.x == rhs.x);
            CHECK(lhs.y == rhs.y);
            ++orbits;
        } catch (const NonInvertible&) {
            // unlucky orbit through a pole mod p; try another curve
        }
    }
    CHECK(orbits == 20);
}

TEST_CASE("initial points reproduce the quotient recurrences") {
    // u_{n+2} u_n = (alpha u_{n+1} + beta) / u_{n+1}^2   (Somos-4 form)
    Modulus n(mpz_class(100003));
    Rng rng(59);
    Somos4Curve c4{rng.residue(n), rng.residue(n), rng.residue(n)};
    IndexedPoint p = s4_init(c4);
    std::vector<Residue> u{p.x, p.y};
    for (int i = 0; i < 15; ++i) {
        p = s4_step(c4, p);
        u.push_back(p.y);
    }
    for (std::size_t i = 0; i + 2 < u.size(); ++i) {
        Residue rhs = div(add(mul(c4.alpha, u[i + 1]), c4.beta), sqr(u[i + 1]));
        CHECK(mul(u[i + 2], u[i]) == rhs);
    }

    // u_{n+2} u_n = (alpha u_{n+1} + beta) / u_{n+1}   (Somos-5 form)
    Somos5Curve c5{rng.residue(n), rng.residue(n), rng.residue(n)};
    IndexedPoint q = s5_init(c5);
    std::vector<Residue> v{q.x, q.y};
    for (int i = 0; i < 15; ++i) {
        q = s5_step(c5, q);
        v.push_back(q.y);
    }
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        Residue rhs = div(add(mul(c5.alpha, v[i + 1]), c5.beta), v[i + 1]);
        CHECK(mul(v[i + 2], v[i]) == rhs);
    }

    // u_{n+2} u_n = a u_{n+1} + b   (Lyness)
    LynessCurve cl(rng.residue(n), rng.residue(n), rng.residue(n));
    IndexedPoint w = lyness_init(cl);
    std::vector<Residue> uw{w.x, w.y};
    for (int i = 0; i < 15; ++i) {
        w = lyness_step(cl, w);
        uw.push_back(w.y);
    }
    for (std::size_t i = 0; i + 2 < uw.size(); ++i)
        CHECK(mul(uw[i + 2], uw[i]) == add(mul(cl.a, uw[i + 1]), cl.b));
}

TEST_CASE("translation conjugated by the involution") {
    // phi . iota . phi == iota wherever defined
    Somos4Curve c{r101(3), r101(8), r101(11)};
    IndexedPoint p = s4_init(c);
    for (int i = 0; i < 10; ++i) {
        try {
            IndexedPoint lhs = s4_step(c, s4_involution(c, s4_step(c, p)));
            IndexedPoint rhs = s4_involution(c, p);
            CHECK(lhs.x == rhs.x);
            CHECK(lhs.y == rhs.y);
            p = s4_step(c, p);
        } catch (const NonInvertible&) {
            break;
        }
    }
}

TEST_CASE("lyness a -> 1 normalization preserves the orbit up to scale") {
    LynessCurve c(r101(7), r101(13), r101(4));
    LynessCurve unit = lyness_normalized(c);
    CHECK(unit.a == r101(1));
    CHECK(unit.b == div(c.b, sqr(c.a)));
    CHECK(unit.k == div(c.k, c.a));

    IndexedPoint p = lyness_init(c);
    IndexedPoint q = lyness_init(unit);
    Residue inv_a = invert(c.a);
    for (int i = 0; i < 12; ++i) {
        CHECK(mul(p.x, inv_a) == q.x);
        CHECK(mul(p.y, inv_a) == q.y);
        p = lyness_step(c, p);
        q = lyness_step(unit, q);
    }
}
