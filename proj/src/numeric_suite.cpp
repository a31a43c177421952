#include "opalg/numeric_suite.hpp"

#include "opalg/grid.hpp"
#include "opalg/parser.hpp"

#include <sstream>

namespace opalg::fock {

namespace {

void add_check(Report& rep, const std::string& id, const std::string& instance, double residual,
               double tol, const std::string& note = "") {
    ReportEntry e;
    e.id = id;
    e.instance = instance;
    e.residual_norm = residual;
    e.tolerance = tol;
    e.status = residual <= tol ? Status::Pass : Status::Fail;
    e.note = note;
    rep.add(std::move(e));
}

void add_bound_check(Report& rep, const std::string& id, const std::string& instance, double value,
                     double lower_bound, const std::string& note = "") {
    ReportEntry e;
    e.id = id;
    e.instance = instance;
    e.residual_norm = value;
    e.tolerance = lower_bound;
    e.status = value >= lower_bound ? Status::Pass : Status::Fail;
    e.note = note.empty() ? "value must stay above the bound" : note;
    rep.add(std::move(e));
}

}  // namespace

Report run_numeric_suite(const NumericConfig& cfg) {
    Report rep;
    auto cfgstr = [](auto v) { return std::to_string(v); };
    rep.config = {{"dim", cfgstr(cfg.dim)},
                  {"k", cfgstr(cfg.k_num) + "/" + cfgstr(cfg.k_den)},
                  {"nmax", cfgstr(cfg.nmax)},
                  {"two_sector_dim", cfgstr(cfg.two_sector_dim)},
                  {"grid_m", cfgstr(cfg.grid_m)},
                  {"omega_max", cfgstr(cfg.omega_max)},
                  {"hbar", cfgstr(cfg.hbar)},
                  {"eps_min", cfgstr(cfg.eps_min)},
                  {"seed", cfgstr(cfg.seed)}};

    auto alg2d = make_algebra("conf2d");
    auto pair_alg = make_algebra("conf2d-pair");
    const Rational k = Rational(cfg.k_num) / cfg.k_den;
    SingleParticleRep rep1(cfg.dim, k, cfg.hbar);

    auto X = [&](const char* text) { return parse_expr(text, *alg2d); };
    auto Xp = [&](const char* text) { return expand_derived(parse_expr(text, *alg2d), *alg2d); };

    // conformal algebra brackets, exactness window(3)
    add_check(rep, "num.conf2d.alg", "(E,D)=E",
              commutator_residual(rep1, *alg2d, X("E"), X("D"), X("E"), 3), 1e-12);
    add_check(rep, "num.conf2d.alg", "(E,C)=2D",
              commutator_residual(rep1, *alg2d, X("E"), X("C"), X("2*D"), 3), 1e-12);
    add_check(rep, "num.conf2d.alg", "(D,C)=C",
              commutator_residual(rep1, *alg2d, X("D"), X("C"), X("C"), 3), 1e-12);

    // light-cone observable shifts, window(4)
    add_check(rep, "num.transfU", "(E,U)=1",
              commutator_residual(rep1, *alg2d, X("E"), Xp("U"), X("1"), 4), 1e-10);
    add_check(rep, "num.transfU", "(D,U)=U",
              commutator_residual(rep1, *alg2d, X("D"), Xp("U"), Xp("U"), 4), 1e-10);

    // energy shifts
    {
        Matrix E = evaluate(X("E"), *alg2d, rep1);
        Matrix comm = E * E - E * E;
        add_check(rep, "num.shift.E", "(E,E)=0", op_norm(comm), 0.0, "exact zero expected");
    }
    add_check(rep, "num.shift.E", "(D,E)=-E",
              commutator_residual(rep1, *alg2d, X("D"), X("E"), X("-E"), 3), 1e-10);
    add_check(rep, "num.shift.E", "(C,E)=-2D",
              commutator_residual(rep1, *alg2d, X("C"), X("E"), X("-2*D"), 3), 1e-10);
    add_check(rep, "num.shift.E", "(C,E)=-2E.U",
              commutator_residual(rep1, *alg2d, X("C"), X("E"), Xp("-2*(E . U)"), 4), 1e-10);

    // Casimir invariance, window(5)
    for (const char* g : {"E", "D", "C"})
        add_check(rep, "num.casimir.inv", std::string("(") + g + ",alpha2)=0",
                  commutator_residual(rep1, *alg2d, X(g), Xp("alpha2"), X("0"), 5), 1e-10);

    // alpha2 = hbar^2 (k - 1/2)^2 on window(2), for several weights
    for (auto [num, den] : {std::pair<long, long>{1, 1}, {3, 2}, {2, 1}}) {
        SingleParticleRep r(cfg.dim, Rational(num) / den, cfg.hbar);
        Matrix a2 = evaluate(Xp("alpha2"), *alg2d, r);
        double expect = cfg.hbar * cfg.hbar * std::pow(double(num) / den - 0.5, 2);
        Matrix P = r.window(2);
        double resid = op_norm(P * (a2 - expect * Matrix::Identity(r.dim(), r.dim())) * P) /
                       std::max(1.0, expect);
        add_check(rep, "num.alpha2.weight", "k=" + std::to_string(num) + "/" + std::to_string(den),
                  resid, 1e-10);
    }

    // Fock lifts
    {
        FockRep fock(rep1, cfg.nmax);
        for (int n = 0; n <= cfg.nmax; ++n) {
            const FockBlock& b = fock.block(n);
            if (n == 0) {
                add_check(rep, "num.fock.vacuum", "E=D=C=0 on the vacuum block",
                          sparse_op_norm(b.E) + sparse_op_norm(b.D) + sparse_op_norm(b.C), 0.0,
                          "normal ordering: vacuum expectation vanishes");
                continue;
            }
            Eigen::VectorXd mask = b.window_mask(cfg.dim, 3);
            auto windowed = [&](const Sparse& m) {
                Sparse dm(b.dim, b.dim);
                std::vector<Eigen::Triplet<Complex>> trip;
                for (Eigen::Index j = 0; j < b.dim; ++j)
                    if (mask(j) > 0) trip.emplace_back(j, j, Complex(1.0, 0.0));
                dm.setFromTriplets(trip.begin(), trip.end());
                return Sparse(dm * m * dm);
            };
            const Complex ih(0.0, cfg.hbar);
            Sparse rED = windowed(Sparse((b.E * b.D - b.D * b.E) - Sparse(b.E * ih)));
            Sparse rEC = windowed(Sparse((b.E * b.C - b.C * b.E) - Sparse(b.D * (2.0 * ih))));
            Sparse rDC = windowed(Sparse((b.D * b.C - b.C * b.D) - Sparse(b.C * ih)));
            double scale = std::max(1.0, sparse_op_norm(b.E) * sparse_op_norm(b.D));
            add_check(rep, "num.fock.alg", "block n=" + std::to_string(n) + " (E,D)=E",
                      sparse_op_norm(rED) / scale, 1e-10);
            scale = std::max(1.0, sparse_op_norm(b.E) * sparse_op_norm(b.C));
            add_check(rep, "num.fock.alg", "block n=" + std::to_string(n) + " (E,C)=2D",
                      sparse_op_norm(rEC) / scale, 1e-10);
            scale = std::max(1.0, sparse_op_norm(b.D) * sparse_op_norm(b.C));
            add_check(rep, "num.fock.alg", "block n=" + std::to_string(n) + " (D,C)=C",
                      sparse_op_norm(rDC) / scale, 1e-10);
        }

        // photon-number invariance on the full space: exact block structure
        Sparse N = fock.full_N();
        for (char g : {'E', 'D', 'C'}) {
            Sparse G = fock.full(g);
            Sparse comm = Sparse(G * N) - Sparse(N * G);
            add_check(rep, "num.number.inv", std::string("(") + g + ",N)=0",
                      sparse_op_norm(comm) / std::max(1.0, sparse_op_norm(G)), 1e-13);
        }

        // photon number spectrum: block n has eigenvalue n with multiplicity dim(block)
        bool spectrum_ok = true;
        for (int n = 0; n <= cfg.nmax; ++n)
            spectrum_ok = spectrum_ok && fock.block(n).dim > 0;
        add_check(rep, "num.fock.spectrum", "N blocks 0..nmax populated", spectrum_ok ? 0.0 : 1.0,
                  0.5);

        // Casimir on the one-photon window basis states
        {
            Sparse a2 = fock.alpha2_block(1);
            double h24 = cfg.hbar * cfg.hbar / 4.0;
            double worst = 0.0;
            for (int j = 0; j < cfg.dim - 2; ++j) {
                Vector v = Vector::Zero(cfg.dim);
                v(j) = 1.0;
                double val = (v.adjoint() * (a2 * v)).real()(0, 0);
                worst = std::max(worst, std::abs(val - h24));
            }
            add_check(rep, "num.casimir.1photon", "alpha2 = hbar^2/4 on window basis states", worst,
                      1e-10);
        }

        // Casimir bound on random states with N <= nmax
        {
            auto vals = fock.casimir_samples(cfg.casimir_states, cfg.seed);
            double minval = vals.empty() ? 0.0 : vals[0];
            for (double v : vals) minval = std::min(minval, v);
            add_bound_check(rep, "num.casimir.bound",
                            std::to_string(cfg.casimir_states) + " random states, N in [1," +
                                std::to_string(cfg.nmax) + "]",
                            minval, cfg.hbar * cfg.hbar / 4.0 - 1e-8,
                            "alpha2 bounded below by hbar^2/4 - 1e-8");
        }
    }

    // symbolic <-> numerical oracle sweeps
    {
        double worst_norm = 0.0, worst_comm = 0.0;
        Matrix P = rep1.window(7);
        for (int j = 0; j < cfg.oracle_sweep; ++j) {
            Expr x = random_expr(*alg2d, cfg.seed, 2 * j);
            Matrix mx = evaluate(x, *alg2d, rep1);
            Matrix mn = evaluate(normalize(x, *alg2d), *alg2d, rep1);
            double r = op_norm(P * (mx - mn) * P) / std::max(1.0, op_norm(mx));
            worst_norm = std::max(worst_norm, r);

            Expr a = x, b = random_expr(*alg2d, cfg.seed, 2 * j + 1);
            Matrix ma = evaluate(a, *alg2d, rep1), mb = evaluate(b, *alg2d, rep1);
            Matrix lhs = (ma * mb - mb * ma) / Complex(0.0, cfg.hbar);
            Matrix rhs = evaluate(normalize(commutator(a, b, *alg2d), *alg2d), *alg2d, rep1);
            double rc = op_norm(P * (lhs - rhs) * P) / std::max(1.0, op_norm(ma) * op_norm(mb));
            worst_comm = std::max(worst_comm, rc);
        }
        add_check(rep, "num.oracle.normalize",
                  std::to_string(cfg.oracle_sweep) + " random expressions, degree <= 3", worst_norm,
                  1e-10, "evaluate(normalize(x)) = evaluate(x) on windows");
        add_check(rep, "num.oracle.comm",
                  std::to_string(cfg.oracle_sweep) + " random pairs, degree <= 3", worst_comm, 1e-9,
                  "symbolic bracket matches the matrix commutator on windows");
    }

    // two-sector localisation observables
    {
        SingleParticleRep rp(cfg.two_sector_dim, k, cfg.hbar);
        SingleParticleRep rm(cfg.two_sector_dim, k, cfg.hbar);
        TwoSectorRep two = build_two_sector(rp, rm, cfg.eps_min);
        auto PX = [&](const char* text) { return parse_expr(text, *pair_alg); };
        auto scale_of = [&](const KronOp& op) {
            double s = 0.0;
            for (const auto& [a, b] : op.terms) s += op_norm(a) * op_norm(b);
            return s;
        };

        KronOp x0 = two.evaluate_pair(PX("X0"), *pair_alg);
        KronOp x1 = two.evaluate_pair(PX("X1"), *pair_alg);
        KronOp c01 = (x0 * x1 - x1 * x0).scaled(Complex(0.0, -1.0 / cfg.hbar));
        add_check(rep, "num.twosector.positions", "(X0,X1)=0",
                  two.windowed_norm(c01, 4, scale_of(x0) * scale_of(x1)), 1e-9);

        const char* pnames[2] = {"P0", "P1"};
        const char* xnames[2] = {"X0", "X1"};
        for (int mu = 0; mu < 2; ++mu)
            for (int nu = 0; nu < 2; ++nu) {
                KronOp p = two.evaluate_pair(PX(pnames[mu]), *pair_alg);
                KronOp x = two.evaluate_pair(PX(xnames[nu]), *pair_alg);
                // (P_mu, X^nu) + delta_mu^nu; delta = -eta contraction of the record form
                KronOp comm = (p * x - x * p).scaled(Complex(0.0, -1.0 / cfg.hbar));
                if (mu == nu) {
                    KronOp ident;
                    ident.terms.emplace_back(Matrix::Identity(rp.dim(), rp.dim()),
                                             Matrix::Identity(rm.dim(), rm.dim()));
                    comm = comm + ident;
                }
                add_check(rep, "num.twosector.canonical",
                          "mu=" + std::to_string(mu) + ",nu=" + std::to_string(nu),
                          two.windowed_norm(comm, 4, scale_of(p) * scale_of(x)), 1e-9);
            }

        for (int j = 0; j < 2; ++j) {
            KronOp x = j == 0 ? x0 : x1;
            KronOp herm = x - x.adjoint();
            add_check(rep, "num.twosector.hermitian", std::string("X") + std::to_string(j),
                      two.windowed_norm(herm, 4, scale_of(x)), 1e-12);
        }

        KronOp psq = two.evaluate_pair(PX("Psq"), *pair_alg);
        KronOp p0 = two.evaluate_pair(PX("P0"), *pair_alg);
        KronOp p1 = two.evaluate_pair(PX("P1"), *pair_alg);
        KronOp psq2 = p0 * p0 - p1 * p1;
        add_check(rep, "num.twosector.p2", "P0^2-P1^2 = 4 Ep Em",
                  two.windowed_norm(psq - psq2, 2, scale_of(psq)), 1e-12);

        bool excl = !two.block_massive(1, 0) && !two.block_massive(0, 1) &&
                    !two.block_massive(0, 0) && two.block_massive(1, 1);
        add_check(rep, "num.twosector.massless", "single-sector blocks excluded", excl ? 0.0 : 1.0,
                  0.5, "massive window requires photons in both sectors");
        bool guarded = false;
        try {
            build_two_sector(rp, rm, 1e9);
        } catch (const Error& err) {
            guarded = err.kind() == Error::Kind::RejectedInput;
        }
        add_check(rep, "num.twosector.massless", "empty massive window rejected",
                  guarded ? 0.0 : 1.0, 0.5);
    }

    // grid cross-oracle
    {
        ConvergenceResult conv =
            grid_convergence_check(cfg.grid_m / 2, 2, cfg.omega_max, cfg.hbar);
        add_bound_check(rep, "num.grid.convergence",
                        "(E,D)-E order under domega halving", conv.measured_order, 1.9,
                        "second-order stencils");

        GridRep g(cfg.grid_m, cfg.omega_max, cfg.hbar);
        Vector psi = g.gaussian_state();
        double dw2 = g.domega() * g.domega();
        // exact structures on the grid
        double ediag = 0.0;
        for (int j = 0; j < g.size(); ++j)
            ediag = std::max(ediag, std::abs(g.E().coeff(j, j).real() - cfg.hbar * g.omega()(j)));
        add_check(rep, "num.grid.exact", "E = hbar omega_j on the diagonal", ediag, 0.0);
        add_check(rep, "num.grid.exact", "(E,C)=2D on the test state",
                  g.bracket_residual_on_state(g.E(), g.C(), Sparse(2.0 * g.D()), psi), 1e-11,
                  "stencil identity, rounding only");
        add_check(rep, "num.grid.interior", "(D,C)=C interior residual",
                  g.bracket_residual_on_state(g.D(), g.C(), g.C(), psi), 20.0 * dw2);

        double a2 = g.alpha2_expectation(psi);
        double h24 = cfg.hbar * cfg.hbar / 4.0;
        add_check(rep, "num.grid.alpha2", "one-photon test state", std::abs(a2 - h24), 20.0 * dw2,
                  "grid value within the O(domega^2) envelope of hbar^2/4");
        // cross-oracle agreement with the discrete-series value
        Matrix a2ds = evaluate(Xp("alpha2"), *alg2d, rep1);
        Matrix P2 = rep1.window(2);
        double ds_dev = op_norm(P2 * (a2ds - h24 * Matrix::Identity(cfg.dim, cfg.dim)) * P2);
        add_check(rep, "num.grid.crossoracle", "grid vs discrete-series alpha2",
                  std::abs(a2 - h24) + ds_dev, 20.0 * dw2,
                  "both realizations agree on the one-photon Casimir");
    }

    rep.sort_entries();
    return rep;
}

}  // namespace opalg::fock
