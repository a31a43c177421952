#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opalg/algebras.hpp"
#include "opalg/tensors.hpp"

using namespace opalg;

TEST_CASE("shipped tables match the stated brackets") {
    auto c2 = make_algebra("conf2d");
    CHECK(c2->bracket(c2->letter("E"), c2->letter("C")) ==
          Scalar::integer(2) * c2->letter_expr("D"));

    auto c4 = make_algebra("conf4d");
    CHECK(c4->bracket(c4->letter("D"), c4->letter("C1")) == -c4->letter_expr("C1"));
    // (P_0, C_1) = -2 eta_{01} D - 2 J_{01} = -2 J_{01}
    CHECK(c4->bracket(c4->letter("P0"), c4->letter("C1")) ==
          Scalar::integer(-2) * c4->letter_expr("J01"));
    // conformal weights as exact table entries
    CHECK(c4->bracket(c4->letter("D"), c4->letter("P2")) == c4->letter_expr("P2"));
    CHECK(c4->bracket(c4->letter("D"), c4->letter("J12")).is_zero());
    CHECK(c4->bracket(c4->letter("D"), c4->letter("C3")) == -c4->letter_expr("C3"));
}

TEST_CASE("unknown algebra names are rejected") {
    CHECK_THROWS_AS(make_algebra("conf3d"), Error);
}

TEST_CASE("cross-sector brackets vanish identically") {
    auto p = make_algebra("conf2d-pair");
    for (const char* a : {"invEp", "Ep", "Dp", "Cp"})
        for (const char* b : {"invEm", "Em", "Dm", "Cm"})
            CHECK(p->bracket(p->letter(a), p->letter(b)).is_zero());
}

TEST_CASE("derived definitions") {
    auto c2 = make_algebra("conf2d");
    Expr expected_a2 = sym_product(c2->letter_expr("C"), c2->letter_expr("E")) -
                       c2->letter_expr("D") * c2->letter_expr("D") +
                       Expr::scalar(Scalar::rational(1, 4) * Scalar::hbar(2));
    CHECK(derived_definition(*c2, "alpha2") == expected_a2);

    auto pair = make_algebra("conf2d-pair");
    Expr x0 = derived_definition(*pair, "X0");
    Expr expected_x0 =
        Scalar::rational(1, 2) * (pair->letter_expr("Um") + pair->letter_expr("Up"));
    CHECK(x0 == expected_x0);

    auto c4 = make_algebra("conf4d");
    std::array<Rational, 4> e0{Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK(delta_accel(*c4, e0) == Scalar::rational(1, 2) * c4->letter_expr("C0"));
}

TEST_CASE("expansion of derived symbols") {
    auto c2 = make_algebra("conf2d");
    Expr u = expand_derived(c2->letter_expr("U"), *c2);
    Expr expected = Scalar::rational(1, 2) * (c2->letter_expr("D") * c2->letter_expr("invE") +
                                              c2->letter_expr("invE") * c2->letter_expr("D"));
    CHECK(u == expected);
    CHECK(expand_derived(c2->letter_expr("E"), *c2) == c2->letter_expr("E"));

    auto pair = make_algebra("conf2d-pair");
    Expr psq = expand_derived(pair->letter_expr("Psq"), *pair);
    CHECK(psq == Scalar::integer(4) * (pair->letter_expr("Ep") * pair->letter_expr("Em")));
}

TEST_CASE("representation-only and massless-sector symbols are rejected") {
    auto c2 = make_algebra("conf2d");
    CHECK_THROWS_AS(derived_definition(*c2, "N"), Error);
    auto poincare = make_algebra("poincare4d");
    CHECK_THROWS_AS(derived_definition(*poincare, "X0"), Error);
    CHECK_THROWS_AS(derived_definition(*poincare, "S01"), Error);
    CHECK_THROWS_AS(derived_definition(*poincare, "no.such"), Error);
}

TEST_CASE("cycle detection in expansion") {
    AlgebraSpec alg("loop", {{"A", LetterKind::Derived}, {"B", LetterKind::Derived}});
    alg.set_derived(0, Expr::letter(1));
    alg.set_derived(1, Expr::letter(0));
    CHECK_THROWS_AS(expand_derived(Expr::letter(0), alg), Error);
}

TEST_CASE("jacobi on the shipped tables and under mutation") {
    auto c2 = make_algebra("conf2d");
    CHECK(jacobi(*c2, c2->letter("E"), c2->letter("D"), c2->letter("C")).is_zero());

    auto c4 = make_algebra("conf4d");
    CHECK(jacobi(*c4, c4->letter("P0"), c4->letter("J01"), c4->letter("C1")).is_zero());

    // mutating (E,C) -> 2D + E must break the triple
    auto mut = make_algebra_mutated("conf2d", "E", "C", make_algebra("conf2d")->letter_expr("E"));
    CHECK(!jacobi(*mut, mut->letter("E"), mut->letter("D"), mut->letter("C")).is_zero());
}

TEST_CASE("constant tensors") {
    CHECK(epsilon_lower(0, 1, 2, 3) == 1);
    CHECK(epsilon_upper(0, 1, 2, 3) == -1);
    CHECK(epsilon_lower(0, 1, 2, 2) == 0);
    // antisymmetry under each adjacent transposition
    int idx[4] = {0, 1, 2, 3};
    do {
        int base = epsilon_lower(idx[0], idx[1], idx[2], idx[3]);
        CHECK(epsilon_lower(idx[1], idx[0], idx[2], idx[3]) == -base);
        CHECK(epsilon_lower(idx[0], idx[2], idx[1], idx[3]) == -base);
        CHECK(epsilon_lower(idx[0], idx[1], idx[3], idx[2]) == -base);
    } while (std::next_permutation(idx, idx + 4));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            CHECK(eta(mu, nu) == eta(nu, mu));
            if (mu != nu) CHECK(eta(mu, nu) == 0);
        }
}

TEST_CASE("transversality holds symbolically after expansion") {
    auto c4 = make_algebra("conf4d");
    Expr pw;
    for (int mu = 0; mu < 4; ++mu)
        pw = pw + P_letter(*c4, mu) * expand_derived(c4->letter_expr("W" + std::to_string(mu)), *c4);
    CHECK(normalize(pw, *c4).is_zero());
    for (int nu = 0; nu < 4; ++nu) {
        Expr ps;
        for (int mu = 0; mu < 4; ++mu) {
            if (mu == nu) continue;
            Expr s = mu < nu ? c4->letter_expr("S" + std::to_string(mu) + std::to_string(nu))
                             : -c4->letter_expr("S" + std::to_string(nu) + std::to_string(mu));
            ps = ps + P_upper(*c4, mu) * expand_derived(s, *c4);
        }
        CHECK(normalize(ps, *c4).is_zero());
    }
}
