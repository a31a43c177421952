#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opalg/catalog.hpp"
#include "opalg/parser.hpp"

using namespace opalg;

namespace {

const IdentityRecord& find_record(const std::vector<IdentityRecord>& recs, const std::string& id) {
    for (const auto& r : recs)
        if (r.id == id) return r;
    REQUIRE(false);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("2d records pass") {
    AlgebraSet algebras = AlgebraSet::shipped();
    Report rep = verify_catalog(algebras, {.algebra = "conf2d"});
    CHECK(rep.failed() == 0);
    CHECK(rep.inconclusive() == 0);
    CHECK(rep.passed() > 0);
}

TEST_CASE("pair records pass, including the convention record") {
    AlgebraSet algebras = AlgebraSet::shipped();
    Report rep = verify_catalog(algebras, {.algebra = "conf2d-pair"});
    CHECK(rep.all_pass());
    bool saw_p2 = false;
    for (const auto& e : rep.entries) saw_p2 |= e.id == "p2.sectors";
    CHECK(saw_p2);
}

TEST_CASE("catalog size and structure") {
    AlgebraSet algebras = AlgebraSet::shipped();
    auto recs = build_catalog(algebras);
    CHECK(recs.size() >= 28);
    CHECK(find_record(recs, "px.canonical").instances.size() == 16);
    CHECK(find_record(recs, "xx.spin").instances.size() == 16);
    CHECK(find_record(recs, "jacobi.conf4d").instances.size() == 455);
    CHECK(find_record(recs, "jacobi.poincare4d").instances.size() == 120);
    CHECK(find_record(recs, "jacobi.conf2d-pair").instances.size() == 20);
    CHECK(find_record(recs, "jacobi.conf2d").instances.size() == 1);
    // numerical-only records are listed but not counted
    CHECK(find_record(recs, "casimir.bound").kind == RecipeKind::NumericalOnly);
    CHECK(find_record(recs, "number.inv").kind == RecipeKind::NumericalOnly);
}

TEST_CASE("single records by id") {
    AlgebraSet algebras = AlgebraSet::shipped();
    for (const char* id : {"shift.U.E", "casimir.def", "shift.U.C", "casimir.inv"}) {
        Report rep = verify_catalog(algebras, {.id = id});
        CHECK(rep.all_pass());
        CHECK(rep.passed() > 0);
    }
}

TEST_CASE("massless guard reports the specified rejection") {
    AlgebraSet algebras = AlgebraSet::shipped();
    Report rep = verify_catalog(algebras, {.id = "massless.guard"});
    CHECK(rep.all_pass());
    CHECK(rep.passed() == 2);
}

TEST_CASE("mutated table turns shift.U.E into a FAIL") {
    AlgebraSet algebras = AlgebraSet::shipped();
    // (E,D) -> E + D
    algebras.conf2d = make_algebra_mutated("conf2d", "E", "D", make_algebra("conf2d")->letter_expr("D"));
    Report rep = verify_catalog(algebras, {.id = "shift.U.E"});
    CHECK(rep.failed() == 1);
    CHECK(!rep.entries.empty());
    CHECK(!rep.entries[0].residual.empty());
}

TEST_CASE("recipe soundness: extra clearing preserves the verdict") {
    AlgebraSet algebras = AlgebraSet::shipped();
    auto recs = build_catalog(algebras);
    IdentityRecord rec = find_record(recs, "casimir.def");
    Report before;
    verify_record(rec, algebras, before);
    rec.clears.push_back({true, "E"});
    Report after;
    verify_record(rec, algebras, after);
    CHECK(before.all_pass());
    CHECK(after.all_pass());

    // and a failing record stays failing
    AlgebraSet mutated = algebras;
    mutated.conf2d = make_algebra_mutated("conf2d", "E", "D", make_algebra("conf2d")->letter_expr("D"));
    IdentityRecord bad = find_record(recs, "shift.U.E");
    Report b1;
    verify_record(bad, mutated, b1);
    bad.clears.push_back({false, "E"});
    bad.kind = RecipeKind::Clear;
    Report b2;
    verify_record(bad, mutated, b2);
    CHECK(b1.failed() == 1);
    CHECK(b2.failed() == 1);
}

TEST_CASE("incomplete clearing reports INCONCLUSIVE, not FAIL") {
    AlgebraSet algebras = AlgebraSet::shipped();
    IdentityRecord rec;
    rec.id = "synthetic.inverse";
    rec.algebra = "conf2d";
    rec.kind = RecipeKind::Direct;
    rec.instances.push_back({"", "inv(E)", "0"});
    Report rep;
    verify_record(rec, algebras, rep);
    CHECK(rep.inconclusive() == 1);
}

TEST_CASE("reports are deterministic") {
    AlgebraSet algebras = AlgebraSet::shipped();
    Report a = verify_catalog(algebras, {.algebra = "conf2d"});
    Report b = verify_catalog(algebras, {.algebra = "conf2d"});
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_text() == b.to_text());
}

TEST_CASE("catalog serialization") {
    AlgebraSet algebras = AlgebraSet::shipped();
    std::string text = serialize_catalog(build_catalog(algebras));
    CHECK(text.find("record shift.U.E") != std::string::npos);
    CHECK(text.find("recipe clear right:Psq right:Psq") != std::string::npos);
    CHECK(text.find("lhs comm(E, U)") != std::string::npos);
}

TEST_CASE("rejected recipe multiplier") {
    AlgebraSet algebras = AlgebraSet::shipped();
    IdentityRecord rec;
    rec.id = "synthetic.badclear";
    rec.algebra = "conf2d";
    rec.kind = RecipeKind::Clear;
    rec.clears.push_back({false, "D"});  // D is not designated invertible
    rec.instances.push_back({"", "E", "E"});
    Report rep;
    verify_record(rec, algebras, rep);
    CHECK(rep.failed() == 1);
    CHECK(rep.entries[0].note.find("invertible") != std::string::npos);
}
