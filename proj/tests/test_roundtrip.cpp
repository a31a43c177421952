#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opalg/catalog.hpp"
#include "opalg/parser.hpp"

using namespace opalg;

TEST_CASE("algebra files round-trip byte-identically") {
    for (const char* name : {"conf2d", "conf2d-pair", "poincare4d", "conf4d"}) {
        auto alg = make_algebra(name);
        std::string text = serialize_algebra(*alg);
        auto loaded = parse_algebra_file(text);
        CHECK(serialize_algebra(*loaded) == text);
    }
}

TEST_CASE("a loaded algebra is usable by the engine") {
    auto loaded = parse_algebra_file(serialize_algebra(*make_algebra("conf2d")));
    CHECK(loaded->name() == "conf2d");
    Expr u = expand_derived(parse_expr("U", *loaded), *loaded);
    CHECK(normalize(commutator(loaded->letter_expr("E"), u, *loaded), *loaded) == Expr::unit());

    // and drives the catalog: run the conf2d records against the loaded spec
    AlgebraSet algebras = AlgebraSet::shipped();
    algebras.conf2d = loaded;
    Report rep = verify_catalog(algebras, {.algebra = "conf2d"});
    CHECK(rep.all_pass());
}

TEST_CASE("a loaded conf4d reconstructs the composite-inverse rule") {
    auto loaded = parse_algebra_file(serialize_algebra(*make_algebra("conf4d")));
    Expr q = loaded->letter_expr("Q");
    Expr psq = expand_derived(parse_expr("Psq", *loaded), *loaded);
    CHECK(normalize(q * psq, *loaded) == Expr::unit());
    CHECK(normalize(psq * q, *loaded) == Expr::unit());
}
