#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opalg/parser.hpp"
#include "opalg/algebras.hpp"

#include <random>

using namespace opalg;

TEST_CASE("bracket forms evaluate against the table") {
    auto alg = make_algebra("conf2d");
    Expr e = parse_expr("comm(E, sym(D, inv(E)))", *alg);
    CHECK(normalize(e, *alg) == Expr::unit());
    CHECK(normalize(parse_expr("E*inv(E)", *alg), *alg) == Expr::unit());
}

TEST_CASE("precedence golden test") {
    auto alg = make_algebra("conf2d");
    Expr parsed = parse_expr("(1/2)*hbar^2 + C.E - D*D", *alg);
    Expr expected = Expr::scalar(Scalar::rational(1, 2) * Scalar::hbar(2)) +
                    sym_product(alg->letter_expr("C"), alg->letter_expr("E")) -
                    alg->letter_expr("D") * alg->letter_expr("D");
    CHECK(parsed == expected);
    // '^' binds tighter than '*' and '.'
    CHECK(parse_expr("E^2*D", *alg) ==
          alg->letter_expr("E") * alg->letter_expr("E") * alg->letter_expr("D"));
    CHECK(parse_expr("C.E^2", *alg) ==
          sym_product(alg->letter_expr("C"), alg->letter_expr("E") * alg->letter_expr("E")));
    // exact quarter-hbar^2 scalar
    CHECK(parse_expr("(1/4)*hbar^2", *alg) ==
          Expr::scalar(Scalar::rational(1, 4) * Scalar::hbar(2)));
}

TEST_CASE("index suffix resolution") {
    auto c4 = make_algebra("conf4d");
    CHECK(parse_expr("J10", *c4) == -c4->letter_expr("J01"));
    CHECK(parse_expr("S21", *c4) == -c4->letter_expr("S12"));
    CHECK_THROWS_AS(parse_expr("J11", *c4), ParseError);
    CHECK_THROWS_AS(parse_expr("J99", *c4), ParseError);
}

TEST_CASE("informative rejections") {
    auto alg = make_algebra("conf2d");
    CHECK_THROWS_AS(parse_expr("E + ", *alg), ParseError);
    CHECK_THROWS_AS(parse_expr("Zeta", *alg), ParseError);
    CHECK_THROWS_AS(parse_expr("inv(D)", *alg), ParseError);   // not designated invertible
    CHECK_THROWS_AS(parse_expr("N", *alg), ParseError);        // representation-only
    CHECK_THROWS_AS(parse_expr("E D", *alg), ParseError);      // trailing input
    CHECK_THROWS_AS(parse_expr("1/0", *alg), ParseError);
    try {
        parse_expr("E + Zeta", *alg);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("inverse of the composite squared mass") {
    auto c4 = make_algebra("conf4d");
    CHECK(parse_expr("inv(Psq)", *c4) == c4->letter_expr("Q"));
    CHECK(parse_expr("Q", *c4) == c4->letter_expr("Q"));
}

TEST_CASE("printer output reparses to an equal expression") {
    std::mt19937_64 rng(23);
    for (const char* name : {"conf2d", "conf2d-pair", "conf4d"}) {
        auto alg = make_algebra(name);
        std::vector<letter_t> pool = alg->generators();
        for (const auto& [inv, el] : alg->inverse_designations()) pool.push_back(inv);
        for (int it = 0; it < 60; ++it) {
            Expr e;
            int nterms = 1 + static_cast<int>(rng() % 4);
            for (int t = 0; t < nterms; ++t) {
                Word w;
                int len = static_cast<int>(rng() % 4);
                for (int j = 0; j < len; ++j) w.push_back(pool[rng() % pool.size()]);
                Scalar c = Scalar::rational(static_cast<long>(rng() % 9) - 4,
                                            1 + static_cast<long>(rng() % 4));
                if (rng() % 3 == 0) c = c * Scalar::i();
                if (rng() % 3 == 0) c = c * Scalar::hbar(1 + rng() % 2);
                e.add_term(w, c);
            }
            std::string text = print_expr(e, *alg);
            Expr back = parse_expr(text, *alg);
            CHECK(back == e);
            // canonical-printed text is a fixed point of parse/print
            CHECK(print_expr(back, *alg) == text);
        }
    }
}
