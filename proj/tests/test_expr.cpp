#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opalg/algebras.hpp"

#include <random>

using namespace opalg;

namespace {

Expr random_core_expr(const AlgebraSpec& alg, std::mt19937_64& rng, int max_degree = 3) {
    Expr e;
    auto gens = alg.generators();
    int nterms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nterms; ++t) {
        Word w;
        int len = static_cast<int>(rng() % (max_degree + 1));
        for (int j = 0; j < len; ++j) w.push_back(gens[rng() % gens.size()]);
        long num = static_cast<long>(rng() % 7) - 3;
        e.add_term(w, Scalar::rational(num, 1 + static_cast<long>(rng() % 3)));
    }
    return e;
}

}  // namespace

TEST_CASE("unit word is the ring identity") {
    auto alg = make_algebra("conf2d");
    Expr e = alg->letter_expr("E");
    CHECK(Expr::unit() * e == e);
    CHECK(e * Expr::unit() == e);
    CHECK(Expr::unit().degree() == 0);
    CHECK(e.degree() == 1);
}

TEST_CASE("zero coefficients never survive") {
    auto alg = make_algebra("conf2d");
    Expr e = alg->letter_expr("E") - alg->letter_expr("E");
    CHECK(e.is_zero());
    Expr f = alg->letter_expr("D");
    CHECK((f.scaled(Scalar()).is_zero()));
}

TEST_CASE("sym product of E with its inverse is the unit") {
    auto alg = make_algebra("conf2d");
    Expr p = sym_product(alg->letter_expr("E"), alg->letter_expr("invE"));
    CHECK(normalize(p, *alg) == Expr::unit());
}

TEST_CASE("sym product picks up the reordering correction") {
    auto alg = make_algebra("conf2d");
    // D.E = E*D - (i hbar / 2) E in normal order
    Expr p = sym_product(alg->letter_expr("D"), alg->letter_expr("E"));
    Expr expected = alg->letter_expr("E") * alg->letter_expr("D") -
                    alg->letter_expr("E").scaled(Scalar::rational(1, 2) * Scalar::i_hbar());
    CHECK(normalize(p, *alg) == normalize(expected, *alg));
}

TEST_CASE("sym product is symmetric and bilinear on random expressions") {
    auto alg = make_algebra("conf2d");
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        Expr a = random_core_expr(*alg, rng), b = random_core_expr(*alg, rng);
        CHECK(sym_product(a, b) == sym_product(b, a));
        Expr c = random_core_expr(*alg, rng);
        Expr lhs = sym_product(a + b, c);
        Expr rhs = sym_product(a, c) + sym_product(b, c);
        CHECK(normalize(lhs - rhs, *alg).is_zero());
    }
}

TEST_CASE("degenerate zero input maps to zero") {
    auto alg = make_algebra("conf2d");
    Expr zero;
    CHECK(commutator(zero, alg->letter_expr("E"), *alg).is_zero());
    CHECK(sym_product(zero, alg->letter_expr("D")).is_zero());
    CHECK(normalize(zero, *alg).is_zero());
}
