#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opalg/fock.hpp"
#include "opalg/parser.hpp"

using namespace opalg;
using namespace opalg::fock;

namespace {
constexpr double kHbar = 1.0;

Expr parse2d(const char* text) {
    auto alg = make_algebra("conf2d");
    return expand_derived(parse_expr(text, *alg), *alg);
}
}  // namespace

TEST_CASE("ladder construction") {
    SingleParticleRep rep(8, Rational(1), kHbar);
    for (int n = 0; n < 4; ++n) CHECK(rep.K0()(n, n) == Complex(n + 1.0, 0.0));
    CHECK(rep.min_E_eigenvalue() > 0.0);
    // hermiticity
    CHECK(op_norm(rep.E() - rep.E().adjoint()) == doctest::Approx(0.0));
    CHECK(op_norm(rep.D() - rep.D().adjoint()) == doctest::Approx(0.0));
    CHECK(op_norm(rep.C() - rep.C().adjoint()) == doctest::Approx(0.0));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(SingleParticleRep(4, Rational(1), kHbar), Error);
    CHECK_THROWS_AS(SingleParticleRep(16, Rational(0), kHbar), Error);
    CHECK_THROWS_AS(SingleParticleRep(16, Rational(-1) / 2, kHbar), Error);
}

TEST_CASE("bracket relations hold on the exactness window") {
    auto alg = make_algebra("conf2d");
    SingleParticleRep rep(48, Rational(1), kHbar);
    auto X = [&](const char* t) { return parse_expr(t, *alg); };
    CHECK(commutator_residual(rep, *alg, X("E"), X("D"), X("E"), 3) < 1e-12);
    CHECK(commutator_residual(rep, *alg, X("E"), X("C"), X("2*D"), 3) < 1e-12);
    CHECK(commutator_residual(rep, *alg, X("D"), X("C"), X("C"), 3) < 1e-12);
    // quadratic Casimir of the ladder algebra vanishes at k=1
    Matrix cas = (rep.C() * rep.E() + rep.E() * rep.C()) / 2.0 - rep.D() * rep.D();
    Matrix P = rep.window(2);
    CHECK(op_norm(P * cas * P) < 1e-10);
}

TEST_CASE("alpha2 is constant hbar^2 (k-1/2)^2 on the window") {
    auto alg = make_algebra("conf2d");
    for (auto [num, den] : {std::pair<long, long>{1, 1}, {3, 2}, {2, 1}}) {
        SingleParticleRep rep(40, Rational(num) / den, kHbar);
        Matrix a2 = evaluate(parse2d("alpha2"), *alg, rep);
        double expect = std::pow(double(num) / den - 0.5, 2);
        Matrix P = rep.window(2);
        CHECK(op_norm(P * (a2 - expect * Matrix::Identity(40, 40)) * P) < 1e-10);
    }
}

TEST_CASE("windowed inversion gives the light-cone observable") {
    auto alg = make_algebra("conf2d");
    SingleParticleRep rep(48, Rational(1), kHbar);
    auto X = [&](const char* t) { return parse_expr(t, *alg); };
    CHECK(commutator_residual(rep, *alg, X("E"), parse2d("U"), X("1"), 4) < 1e-10);
    CHECK(commutator_residual(rep, *alg, X("D"), parse2d("U"), parse2d("U"), 4) < 1e-10);
    Matrix U = evaluate(parse2d("U"), *alg, rep);
    CHECK(op_norm(U - U.adjoint()) < 1e-12);
}

TEST_CASE("evaluate is multiplicative and linear") {
    auto alg = make_algebra("conf2d");
    SingleParticleRep rep(32, Rational(1), kHbar);
    Expr e = alg->letter_expr("E"), d = alg->letter_expr("D");
    Matrix lhs = evaluate(e * d, *alg, rep);
    CHECK(op_norm(lhs - rep.E() * rep.D()) == doctest::Approx(0.0));
    CHECK(op_norm(evaluate(Expr::unit(), *alg, rep) - Matrix::Identity(32, 32)) ==
          doctest::Approx(0.0));
    Expr bad = Expr::letter(alg->letter("U"));
    CHECK_THROWS_AS(evaluate(bad, *alg, rep), Error);
}

TEST_CASE("oracle sweep: symbolic vs matrix calculus") {
    auto alg = make_algebra("conf2d");
    SingleParticleRep rep(40, Rational(1), kHbar);
    Matrix P = rep.window(7);
    for (int j = 0; j < 30; ++j) {
        Expr a = random_expr(*alg, 99, 2 * j), b = random_expr(*alg, 99, 2 * j + 1);
        Matrix ma = evaluate(a, *alg, rep), mb = evaluate(b, *alg, rep);
        Matrix lhs = (ma * mb - mb * ma) / Complex(0.0, kHbar);
        Matrix rhs = evaluate(normalize(commutator(a, b, *alg), *alg), *alg, rep);
        CHECK(op_norm(P * (lhs - rhs) * P) / std::max(1.0, op_norm(ma) * op_norm(mb)) < 1e-9);
        Matrix mn = evaluate(normalize(a, *alg), *alg, rep);
        CHECK(op_norm(P * (ma - mn) * P) / std::max(1.0, op_norm(ma)) < 1e-10);
    }
}

TEST_CASE("second quantization blocks") {
    SingleParticleRep rep(12, Rational(1), kHbar);
    FockRep fock(rep, 3);
    CHECK(fock.block(0).dim == 1);
    CHECK(fock.block(1).dim == 12);
    CHECK(fock.block(2).dim == 78);
    CHECK(fock.block(3).dim == 364);
    // vacuum block of every lift is the 1x1 zero
    CHECK(sparse_op_norm(fock.block(0).E) == 0.0);
    CHECK(sparse_op_norm(fock.block(0).D) == 0.0);
    CHECK(sparse_op_norm(fock.block(0).C) == 0.0);
    // one-photon block is the base representation
    CHECK(op_norm(Matrix(fock.block(1).E) - rep.E()) == doctest::Approx(0.0));

    // lifted brackets on per-block windows
    for (int n = 1; n <= 3; ++n) {
        const FockBlock& b = fock.block(n);
        Eigen::VectorXd mask = b.window_mask(12, 3);
        Sparse comm = Sparse(b.E * b.D) - Sparse(b.D * b.E);
        Matrix m = Matrix(comm) - Complex(0.0, kHbar) * Matrix(b.E);
        for (Eigen::Index r = 0; r < b.dim; ++r)
            for (Eigen::Index c = 0; c < b.dim; ++c)
                if (mask(r) == 0 || mask(c) == 0) m(r, c) = 0.0;
        CHECK(op_norm(m) / std::max(1.0, sparse_op_norm(b.E) * sparse_op_norm(b.D)) < 1e-10);
    }

    // exact photon-number invariance
    Sparse N = fock.full_N();
    Sparse E = fock.full('E');
    CHECK(sparse_op_norm(Sparse(E * N) - Sparse(N * E)) == 0.0);
}

TEST_CASE("mode operators") {
    SingleParticleRep rep(10, Rational(1), kHbar);
    FockRep fock(rep, 2);
    // [a_i, a^dag_j] = delta_ij from the vacuum and one-photon blocks
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Sparse lhs = Sparse(fock.a(i, 2) * fock.adag(j, 1)) -
                         Sparse(fock.adag(j, 0) * fock.a(i, 1));
            Matrix m = Matrix(lhs);
            Matrix expect = Matrix::Zero(10, 10);
            if (i == j) expect = Matrix::Identity(10, 10);
            CHECK(op_norm(m - expect) == doctest::Approx(0.0).epsilon(1e-12));
        }
}

TEST_CASE("resource guard") {
    SingleParticleRep rep(12, Rational(1), kHbar);
    CHECK_THROWS_AS(FockRep(rep, 3, 100), Error);
}

TEST_CASE("casimir samples") {
    SingleParticleRep rep(16, Rational(1), kHbar);
    FockRep fock(rep, 3);
    // one-photon window basis states sit exactly at hbar^2/4
    Sparse a2 = fock.alpha2_block(1);
    for (int j = 0; j < 14; ++j) {
        Vector v = Vector::Zero(16);
        v(j) = 1.0;
        CHECK(std::abs((v.adjoint() * (a2 * v)).real()(0, 0) - 0.25) < 1e-10);
    }
    auto vals = fock.casimir_samples(200, 4242);
    double lo = 1e9;
    for (double v : vals) lo = std::min(lo, v);
    CHECK(lo >= 0.25 - 1e-8);
    // vacuum is rejected by precondition
    CHECK_THROWS_AS(fock.casimir_on_block_state(0, Vector::Ones(1)), Error);
    // determinism in (seed, counter)
    CHECK(fock.casimir_samples(10, 4242) == std::vector<double>(vals.begin(), vals.begin() + 10));
}

TEST_CASE("two-sector localisation") {
    auto pair = make_algebra("conf2d-pair");
    SingleParticleRep rp(16, Rational(1), kHbar), rm(16, Rational(1), kHbar);
    TwoSectorRep two = build_two_sector(rp, rm, 1e-6);
    auto PX = [&](const char* t) { return parse_expr(t, *pair); };

    KronOp x0 = two.evaluate_pair(PX("X0"), *pair);
    KronOp x1 = two.evaluate_pair(PX("X1"), *pair);
    KronOp c = (x0 * x1 - x1 * x0).scaled(Complex(0.0, -1.0));
    CHECK(two.windowed_norm(c, 4) < 1e-9);

    const char* pn[2] = {"P0", "P1"};
    const char* xn[2] = {"X0", "X1"};
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) {
            KronOp p = two.evaluate_pair(PX(pn[mu]), *pair);
            KronOp x = two.evaluate_pair(PX(xn[nu]), *pair);
            KronOp comm = (p * x - x * p).scaled(Complex(0.0, -1.0));
            if (mu == nu) {
                KronOp ident;
                ident.terms.emplace_back(Matrix::Identity(16, 16), Matrix::Identity(16, 16));
                comm = comm + ident;
            }
            CHECK(two.windowed_norm(comm, 4) < 1e-9);
        }

    // hermitian on the massive window
    CHECK(two.windowed_norm(x0 - x0.adjoint(), 4) < 1e-12);
    // single-sector states are excluded from the massive window
    CHECK(!two.block_massive(1, 0));
    CHECK(!two.block_massive(0, 1));
    CHECK(two.block_massive(1, 1));
    // empty massive window is rejected with a diagnostic
    CHECK_THROWS_AS(build_two_sector(rp, rm, 1e9), Error);
}
