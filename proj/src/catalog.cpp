#include "opalg/catalog.hpp"

#include "opalg/parser.hpp"
#include "opalg/tensors.hpp"

#include <sstream>

namespace opalg {

AlgebraSet AlgebraSet::shipped() {
    return {make_algebra("conf2d"), make_algebra("conf2d-pair"), make_algebra("poincare4d"),
            make_algebra("conf4d")};
}

const AlgebraSpec& AlgebraSet::by_name(const std::string& name) const {
    if (name == "conf2d") return *conf2d;
    if (name == "conf2d-pair") return *conf2d_pair;
    if (name == "poincare4d") return *poincare4d;
    if (name == "conf4d") return *conf4d;
    throw Error(Error::Kind::RejectedInput, "unknown algebra '" + name + "'");
}

bool IdentityRecord::has_tag(const std::string& t) const {
    for (const auto& x : tags)
        if (x == t) return true;
    return false;
}

namespace {

std::string jacobi_text(const std::string& a, const std::string& b, const std::string& c) {
    std::ostringstream os;
    os << "comm(comm(" << a << "," << b << ")," << c << ") + comm(comm(" << b << "," << c << "),"
       << a << ") + comm(comm(" << c << "," << a << ")," << b << ")";
    return os.str();
}

IdentityRecord jacobi_sweep(const AlgebraSpec& alg) {
    IdentityRecord rec;
    rec.id = "jacobi." + alg.name();
    rec.algebra = alg.name();
    rec.kind = RecipeKind::Direct;
    rec.ref = "closure of the structure table under the Jacobi identity";
    rec.tags = {"jacobi"};
    auto gens = alg.generators();
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a + 1; b < gens.size(); ++b)
            for (size_t c = b + 1; c < gens.size(); ++c) {
                const std::string na = alg.info(gens[a]).name, nb = alg.info(gens[b]).name,
                                  nc = alg.info(gens[c]).name;
                rec.instances.push_back({na + "," + nb + "," + nc, jacobi_text(na, nb, nc), "0"});
            }
    return rec;
}

// lower-index position/momentum helper texts for the 4d records
std::string x_lower(int mu) {
    return mu == 0 ? std::string("X0") : "-X" + std::to_string(mu);
}
std::string w_lower(int mu) {
    return mu == 0 ? std::string("W0") : "-W" + std::to_string(mu);
}
std::string s_lower(int mu, int nu) {
    if (mu == nu) return "0";
    if (mu < nu) return "S" + std::to_string(mu) + std::to_string(nu);
    return "-S" + std::to_string(nu) + std::to_string(mu);
}
std::string ij(int mu, int nu) { return std::to_string(mu) + std::to_string(nu); }

struct AccelSample {
    std::string label;
    std::array<Rational, 4> a;
};

const std::vector<AccelSample>& accel_samples() {
    static const std::vector<AccelSample> s = {
        {"a=e0", {Rational(1), Rational(0), Rational(0), Rational(0)}},
        {"a=e1", {Rational(0), Rational(1), Rational(0), Rational(0)}},
        {"a=e2", {Rational(0), Rational(0), Rational(1), Rational(0)}},
        {"a=e3", {Rational(0), Rational(0), Rational(0), Rational(1)}},
        {"a=(1,2,3,5)", {Rational(1), Rational(2), Rational(3), Rational(5)}},
    };
    return s;
}

void add_conf2d_records(std::vector<IdentityRecord>& out, const AlgebraSpec& alg) {
    out.push_back(jacobi_sweep(alg));
    out.push_back({"shift.U.E", "conf2d", RecipeKind::Direct, {},
                   {{"", "comm(E, U)", "1"}},
                   "light-cone time observable is canonically conjugate to energy",
                   {"shift", "sync"}});
    out.push_back({"shift.U.D", "conf2d", RecipeKind::Direct, {},
                   {{"", "comm(D, U)", "U"}},
                   "light-cone time observable has conformal weight one",
                   {"shift", "sync"}});
    out.push_back({"shift.E", "conf2d", RecipeKind::Direct, {},
                   {{"(E,E)", "comm(E, E)", "0"}, {"(D,E)", "comm(D, E)", "-E"}},
                   "energy is preserved under translations and rescaled under dilatations",
                   {"shift"}});
    out.push_back({"shift.E.C", "conf2d", RecipeKind::Direct, {},
                   {{"-2D", "comm(C, E)", "-2*D"}, {"-2E.U", "comm(C, E)", "-2*(E . U)"}},
                   "position-dependent energy shift under accelerated-frame maps",
                   {"shift", "redshift"}});
    out.push_back({"casimir.def", "conf2d", RecipeKind::Clear, {{false, "E"}},
                   {{"", "C", "U*E*U + alpha2*inv(E)"}},
                   "accelerated-frame generator as a classical-form term plus an invariant part",
                   {"casimir"}});
    out.push_back({"shift.U.C", "conf2d", RecipeKind::Clear, {{false, "E"}, {false, "E"}},
                   {{"", "comm(C, U)", "U^2 - alpha2*inv(E)^2"}},
                   "time-observable shift under accelerated-frame maps with quantum correction",
                   {"shift", "casimir"}});
    out.push_back({"casimir.inv", "conf2d", RecipeKind::Direct, {},
                   {{"(E,alpha2)", "comm(E, alpha2)", "0"},
                    {"(D,alpha2)", "comm(D, alpha2)", "0"},
                    {"(C,alpha2)", "comm(C, alpha2)", "0"}},
                   "alpha2 commutes with all three generators",
                   {"casimir"}});
    out.push_back({"casimir.bound", "conf2d", RecipeKind::NumericalOnly, {},
                   {{"", "alpha2", "alpha2"}},
                   "lower bound hbar^2/4 on alpha2, attained on one-photon states",
                   {"casimir", "numerical"}});
    out.push_back({"number.inv", "conf2d", RecipeKind::NumericalOnly, {},
                   {{"", "N", "N"}},
                   "photon number commutes with E, D, C",
                   {"numerical"}});
}

void add_conf2d_pair_records(std::vector<IdentityRecord>& out, const AlgebraSpec& alg) {
    out.push_back(jacobi_sweep(alg));
    IdentityRecord sect{"sectors.commute", "conf2d-pair", RecipeKind::Direct, {}, {},
                        "the two counterpropagating sectors commute",
                        {"sectors"}};
    for (const char* gp : {"invEp", "Ep", "Dp", "Cp"})
        for (const char* gm : {"invEm", "Em", "Dm", "Cm"}) {
            std::string lhs = std::string("comm(") + (std::string(gp).rfind("inv", 0) == 0
                                                          ? "inv(" + std::string(gp).substr(3) + ")"
                                                          : gp) +
                              ", " +
                              (std::string(gm).rfind("inv", 0) == 0
                                   ? "inv(" + std::string(gm).substr(3) + ")"
                                   : gm) +
                              ")";
            sect.instances.push_back({std::string(gp) + "," + gm, lhs, "0"});
        }
    out.push_back(sect);

    IdentityRecord canon{"canonical.2d", "conf2d-pair", RecipeKind::Direct, {}, {},
                         "canonical conjugation of momenta and positions in the fixed convention",
                         {"canonical", "localisation"}};
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu) {
            // (P_mu, X^nu) = -delta_mu^nu
            canon.instances.push_back({"mu=" + std::to_string(mu) + ",nu=" + std::to_string(nu),
                                       "comm(P" + std::to_string(mu) + ", X" + std::to_string(nu) + ")",
                                       mu == nu ? "-1" : "0"});
        }
    out.push_back(canon);

    out.push_back({"positions.commute.2d", "conf2d-pair", RecipeKind::Direct, {},
                   {{"", "comm(X0, X1)", "0"}},
                   "time and space positions commute in the spinless two-sector model",
                   {"localisation"}});
    out.push_back({"p2.sectors", "conf2d-pair", RecipeKind::Direct, {},
                   {{"", "Psq", "4*Ep*Em"}},
                   "squared mass in sector energies; the factor 4 documents the momentum convention",
                   {"convention", "localisation"}});
}

void add_poincare_records(std::vector<IdentityRecord>& out, const AlgebraSpec& alg) {
    out.push_back(jacobi_sweep(alg));

    IdentityRecord pwm{"pw.momentum", "poincare4d", RecipeKind::Direct, {}, {},
                       "spin vector commutes with momenta", {"spin"}};
    for (int mu = 0; mu < 4; ++mu)
        for (int rho = 0; rho < 4; ++rho)
            pwm.instances.push_back({"mu=" + std::to_string(mu) + ",rho=" + std::to_string(rho),
                                     "comm(P" + std::to_string(mu) + ", W" + std::to_string(rho) + ")",
                                     "0"});
    out.push_back(pwm);

    IdentityRecord pwl{"pw.lorentz", "poincare4d", RecipeKind::Direct, {}, {},
                       "spin vector transforms as a Lorentz vector", {"spin"}};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho) {
                std::ostringstream rhs;
                bool any = false;
                if (nu == rho) {
                    rhs << (eta(nu, nu) > 0 ? "" : "-") << "(" << w_lower(mu) << ")";
                    any = true;
                }
                if (mu == rho) {
                    rhs << (any ? " + " : "") << (eta(mu, mu) > 0 ? "-(" : "(") << w_lower(nu) << ")";
                    any = true;
                }
                pwl.instances.push_back({"J" + ij(mu, nu) + ",rho=" + std::to_string(rho),
                                         "comm(J" + ij(mu, nu) + ", " + w_lower(rho) + ")",
                                         any ? rhs.str() : "0"});
            }
    out.push_back(pwl);

    IdentityRecord ww{"ww.spin", "poincare4d", RecipeKind::Direct, {}, {},
                      "commutators of spin-vector components close on the spin contraction",
                      {"spin"}};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            std::ostringstream rhs;
            bool any = false;
            for (int rho = 0; rho < 4; ++rho)
                for (int sg = 0; sg < 4; ++sg) {
                    int s = epsilon_lower(mu, nu, rho, sg) * eta(sg, sg);
                    if (!s) continue;
                    if (any) rhs << (s > 0 ? " + " : " - ");
                    else if (s < 0) rhs << "-";
                    any = true;
                    rhs << "W" << rho << "*P" << sg;
                }
            ww.instances.push_back({"mu=" + std::to_string(mu) + ",nu=" + std::to_string(nu),
                                    "comm(" + w_lower(mu) + ", " + w_lower(nu) + ")",
                                    any ? rhs.str() : "0"});
        }
    out.push_back(ww);

    out.push_back({"transversality.W", "poincare4d", RecipeKind::Direct, {},
                   {{"", "P0*W0 + P1*W1 + P2*W2 + P3*W3", "0"}},
                   "spin vector is transverse to momentum", {"spin", "transversality"}});
}

void add_conf4d_records(std::vector<IdentityRecord>& out, const AlgebraSpec& alg) {
    out.push_back(jacobi_sweep(alg));

    IdentityRecord wts{"weights", "conf4d", RecipeKind::Direct, {}, {},
                       "conformal weights of momenta, rotations and accelerations", {"weights"}};
    for (int mu = 0; mu < 4; ++mu)
        wts.instances.push_back({"P" + std::to_string(mu),
                                 "comm(D, P" + std::to_string(mu) + ")", "P" + std::to_string(mu)});
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            wts.instances.push_back({"J" + ij(mu, nu), "comm(D, J" + ij(mu, nu) + ")", "0"});
    for (int mu = 0; mu < 4; ++mu)
        wts.instances.push_back({"C" + std::to_string(mu),
                                 "comm(D, C" + std::to_string(mu) + ")", "-C" + std::to_string(mu)});
    out.push_back(wts);

    IdentityRecord trs{"transversality.S", "conf4d", RecipeKind::Direct, {}, {},
                       "spin tensor is transverse to momentum", {"spin", "transversality"}};
    for (int nu = 0; nu < 4; ++nu) {
        std::ostringstream lhs;
        bool any = false;
        for (int mu = 0; mu < 4; ++mu) {
            if (mu == nu) continue;
            // P^mu S_{mu nu}
            int sign = eta(mu, mu) * (mu < nu ? 1 : -1);
            if (any) lhs << (sign > 0 ? " + " : " - ");
            else if (sign < 0) lhs << "-";
            any = true;
            lhs << "P" << mu << "*S" << (mu < nu ? ij(mu, nu) : ij(nu, mu));
        }
        trs.instances.push_back({"nu=" + std::to_string(nu), lhs.str(), "0"});
    }
    out.push_back(trs);

    out.push_back({"s2.consistency", "conf4d", RecipeKind::Clear,
                   {{false, "Psq"}, {false, "Psq"}},
                   {{"", "Ssq", "S01^2 + S02^2 + S03^2 - S12^2 - S13^2 - S23^2"}},
                   "squared spin from the spin tensor contraction",
                   {"spin", "casimir"}});

    IdentityRecord jd{"jd.reconstruct", "conf4d", RecipeKind::Clear, {{false, "Psq"}}, {},
                      "rotations and dilatation decompose into orbital and spin parts",
                      {"localisation"}};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            // J^{mu nu} = P^mu . X^nu - P^nu . X^mu + S^{mu nu}
            int emu = eta(mu, mu), enu = eta(nu, nu);
            std::ostringstream lhs, rhs;
            lhs << (emu * enu > 0 ? "" : "-") << "J" << ij(mu, nu);
            rhs << (emu > 0 ? "" : "-") << "(P" << mu << " . X" << nu << ")";
            rhs << (enu > 0 ? " - " : " + ") << "(P" << nu << " . X" << mu << ")";
            rhs << (emu * enu > 0 ? " + " : " - ") << "S" << ij(mu, nu);
            jd.instances.push_back({"J" + ij(mu, nu), lhs.str(), rhs.str()});
        }
    jd.instances.push_back(
        {"D", "D", "P0 . X0 + P1 . X1 + P2 . X2 + P3 . X3"});
    out.push_back(jd);

    IdentityRecord pxc{"px.canonical", "conf4d", RecipeKind::Clear, {{false, "Psq"}}, {},
                       "positions are canonically conjugate to momenta",
                       {"canonical", "localisation"}};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            pxc.instances.push_back({"mu=" + std::to_string(mu) + ",nu=" + std::to_string(nu),
                                     "comm(P" + std::to_string(mu) + ", X" + std::to_string(nu) + ")",
                                     mu == nu ? "-1" : "0"});
    out.push_back(pxc);

    IdentityRecord pxw{"px.weight", "conf4d", RecipeKind::Clear, {{false, "Psq"}}, {},
                       "positions have conformal weight minus one", {"canonical"}};
    for (int mu = 0; mu < 4; ++mu)
        pxw.instances.push_back({"X" + std::to_string(mu),
                                 "comm(D, X" + std::to_string(mu) + ")", "-X" + std::to_string(mu)});
    out.push_back(pxw);

    IdentityRecord pxl{"px.lorentz", "conf4d", RecipeKind::Clear, {{false, "Psq"}}, {},
                       "positions transform as a Lorentz vector", {"canonical"}};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho) {
                std::ostringstream rhs;
                bool any = false;
                if (nu == rho) {
                    rhs << (eta(nu, nu) > 0 ? "" : "-") << "(" << x_lower(mu) << ")";
                    any = true;
                }
                if (mu == rho) {
                    rhs << (any ? " + " : "") << (eta(mu, mu) > 0 ? "-(" : "(") << x_lower(nu) << ")";
                    any = true;
                }
                pxl.instances.push_back({"J" + ij(mu, nu) + ",rho=" + std::to_string(rho),
                                         "comm(J" + ij(mu, nu) + ", " + x_lower(rho) + ")",
                                         any ? rhs.str() : "0"});
            }
    out.push_back(pxl);

    IdentityRecord xx{"xx.spin", "conf4d", RecipeKind::Clear, {{false, "Psq"}, {false, "Psq"}}, {},
                      "noncommutativity of positions is set by the spin tensor",
                      {"spin", "localisation"}};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            xx.instances.push_back({"mu=" + std::to_string(mu) + ",nu=" + std::to_string(nu),
                                    "Psq . comm(" + x_lower(mu) + ", " + x_lower(nu) + ")",
                                    s_lower(mu, nu)});
    out.push_back(xx);

    // Accelerated-frame records, sampled over basis and generic accelerations.
    auto da_text = [&](const AccelSample& s) { return print_expr(delta_accel(alg, s.a), alg); };
    auto ax_text = [&](const AccelSample& s) { return print_expr(accel_dot_x(alg, s.a), alg); };

    IdentityRecord rm{"redshift.mass", "conf4d", RecipeKind::Clear, {{false, "Psq"}}, {},
                      "squared-mass redshift proportional to the potential along the acceleration",
                      {"redshift"}};
    for (const auto& s : accel_samples())
        rm.instances.push_back({s.label, "comm(" + da_text(s) + ", Psq)",
                                "2*(Psq . (" + ax_text(s) + "))"});
    out.push_back(rm);

    IdentityRecord rp{"redshift.momentum", "conf4d", RecipeKind::Direct, {}, {},
                      "momentum redshift in dilatation and rotation generators",
                      {"redshift"}};
    IdentityRecord rps{"redshift.momentum.spin", "conf4d", RecipeKind::Clear, {{false, "Psq"}}, {},
                       "momentum redshift in position and spin observables",
                       {"redshift", "spin"}};
    for (const auto& s : accel_samples())
        for (int nu = 0; nu < 4; ++nu) {
            Expr rhs1;
            rhs1 = rhs1 + Scalar::rational(s.a[nu] * eta(nu, nu)) * alg.letter_expr("D");
            for (int mu = 0; mu < 4; ++mu)
                rhs1 = rhs1 - Scalar::rational(s.a[mu]) * J_expr(alg, mu, nu);
            rp.instances.push_back({s.label + ",nu=" + std::to_string(nu),
                                    "comm(" + da_text(s) + ", P" + std::to_string(nu) + ")",
                                    print_expr(rhs1, alg)});
            // a_nu P.X - a^mu P_mu . X_nu + a^mu X_mu . P_nu - a^mu S_{mu nu}
            Expr rhs2;
            for (int mu = 0; mu < 4; ++mu) {
                Expr pdotx = sym_product(P_letter(alg, mu), alg.letter_expr("X" + std::to_string(mu)));
                rhs2 = rhs2 + Scalar::rational(s.a[nu] * eta(nu, nu)) * pdotx;
            }
            for (int mu = 0; mu < 4; ++mu) {
                Expr xlow_nu = Scalar::integer(eta(nu, nu)) * alg.letter_expr("X" + std::to_string(nu));
                Expr xlow_mu = Scalar::integer(eta(mu, mu)) * alg.letter_expr("X" + std::to_string(mu));
                rhs2 = rhs2 - Scalar::rational(s.a[mu]) * sym_product(P_letter(alg, mu), xlow_nu);
                rhs2 = rhs2 + Scalar::rational(s.a[mu]) * sym_product(xlow_mu, P_letter(alg, nu));
                if (mu != nu) {
                    Expr slow = (mu < nu ? Expr::unit() : -Expr::unit()) *
                                alg.letter_expr(mu < nu ? "S" + ij(mu, nu) : "S" + ij(nu, mu));
                    rhs2 = rhs2 - Scalar::rational(s.a[mu]) * slow;
                }
            }
            rps.instances.push_back({s.label + ",nu=" + std::to_string(nu),
                                     "comm(" + da_text(s) + ", P" + std::to_string(nu) + ")",
                                     print_expr(rhs2, alg)});
        }
    out.push_back(rp);
    out.push_back(rps);

    IdentityRecord cp{"canonical.preserved", "conf4d", RecipeKind::Clear,
                      {{false, "Psq"}, {false, "Psq"}}, {},
                      "canonical commutators are invariant under accelerated-frame maps",
                      {"redshift", "canonical"}};
    IdentityRecord jc{"jacobi.consistency", "conf4d", RecipeKind::Clear,
                      {{false, "Psq"}, {false, "Psq"}}, {},
                      "momentum and position redshifts are mutually consistent",
                      {"redshift", "jacobi"}};
    IdentityRecord me{"metric.eval", "conf4d", RecipeKind::Clear, {{false, "Psq"}}, {},
                      "evaluated double shift reproduces the classical form",
                      {"redshift", "metric"}};
    for (const auto& s : accel_samples())
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const std::string lbl = s.label + ",mu=" + std::to_string(mu) + ",nu=" +
                                        std::to_string(nu);
                const std::string da = da_text(s);
                const std::string pmu = "P" + std::to_string(mu);
                const std::string xnu = x_lower(nu);
                cp.instances.push_back(
                    {lbl, "comm(" + da + ", comm(" + pmu + ", " + xnu + "))", "0"});
                jc.instances.push_back({lbl, "comm(comm(" + da + ", " + pmu + "), " + xnu + ")",
                                        "comm(comm(" + da + ", " + xnu + "), " + pmu + ")"});
                // -a_mu X_nu - eta_{mu nu} a.X + a_nu X_mu
                Expr rhs;
                Expr xlow_nu = Scalar::integer(eta(nu, nu)) * alg.letter_expr("X" + std::to_string(nu));
                Expr xlow_mu = Scalar::integer(eta(mu, mu)) * alg.letter_expr("X" + std::to_string(mu));
                rhs = rhs - Scalar::rational(s.a[mu] * eta(mu, mu)) * xlow_nu;
                if (mu == nu) rhs = rhs - Scalar::integer(eta(mu, mu)) * accel_dot_x(alg, s.a);
                rhs = rhs + Scalar::rational(s.a[nu] * eta(nu, nu)) * xlow_mu;
                me.instances.push_back({lbl, "comm(comm(" + da + ", " + pmu + "), " + xnu + ")",
                                        print_expr(rhs, alg)});
            }
    out.push_back(cp);
    out.push_back(jc);
    out.push_back(me);

    IdentityRecord ms{"metric.sym", "conf4d", RecipeKind::Clear, {{false, "Psq"}}, {},
                      "symmetrised double shifts reduce to the conformal metric factor",
                      {"redshift", "metric"}};
    for (const auto& s : accel_samples())
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu; nu < 4; ++nu) {
                const std::string da = da_text(s);
                const std::string pmu = "P" + std::to_string(mu), pnu = "P" + std::to_string(nu);
                const std::string xmu = x_lower(mu), xnu = x_lower(nu);
                Expr rhs;
                if (mu == nu) rhs = Scalar::integer(-2 * eta(mu, mu)) * accel_dot_x(alg, s.a);
                const std::string rhs_text = print_expr(rhs, alg);
                const std::string lbl = s.label + ",mu=" + std::to_string(mu) + ",nu=" +
                                        std::to_string(nu);
                ms.instances.push_back({lbl + ",PX",
                                        "comm(comm(" + da + ", " + pmu + "), " + xnu + ") + comm(comm(" +
                                            da + ", " + pnu + "), " + xmu + ")",
                                        rhs_text});
                ms.instances.push_back({lbl + ",XP",
                                        "comm(comm(" + da + ", " + xnu + "), " + pmu + ") + comm(comm(" +
                                            da + ", " + xmu + "), " + pnu + ")",
                                        rhs_text});
            }
    out.push_back(ms);

    IdentityRecord guard{"massless.guard", "poincare4d", RecipeKind::Guard, {}, {},
                         "position and spin-tensor observables are rejected without an invertible "
                         "squared mass",
                         {"guard", "localisation"}};
    guard.instances.push_back({"X0", "X0", ""});
    guard.instances.push_back({"S01", "S01", ""});
    out.push_back(guard);
}

Expr clear_multiplier(const AlgebraSpec& alg, const std::string& name) {
    Expr m = parse_expr(name, alg);
    m = expand_derived(m, alg);
    // multipliers must be designated invertible elements
    for (const auto& [inv, element] : alg.inverse_designations()) {
        if (normalize(m - element, alg).is_zero() ||
            (element.size() == m.size() && m == element))
            return m;
    }
    throw Error(Error::Kind::RejectedInput,
                "recipe multiplier '" + name + "' is not a designated invertible element of " +
                    alg.name());
}

}  // namespace

std::vector<IdentityRecord> build_catalog(const AlgebraSet& algebras) {
    std::vector<IdentityRecord> out;
    add_conf2d_records(out, *algebras.conf2d);
    add_conf2d_pair_records(out, *algebras.conf2d_pair);
    add_poincare_records(out, *algebras.poincare4d);
    add_conf4d_records(out, *algebras.conf4d);
    return out;
}

void verify_record(const IdentityRecord& rec, const AlgebraSet& algebras, Report& report,
                   const VerifyOptions& opts) {
    const AlgebraSpec& alg = algebras.by_name(rec.algebra);

    if (rec.kind == RecipeKind::NumericalOnly) {
        ReportEntry e;
        e.id = rec.id;
        e.counted = false;
        e.status = Status::Pass;
        e.note = "numerical-only record; verified by the numerical suite (repcheck)";
        report.add(std::move(e));
        return;
    }

    if (rec.kind == RecipeKind::Guard) {
        for (const auto& inst : rec.instances) {
            ReportEntry e;
            e.id = rec.id;
            e.instance = inst.label;
            try {
                derived_definition(alg, inst.lhs);
                e.status = Status::Fail;
                e.note = "expected rejection, but '" + inst.lhs + "' expanded";
            } catch (const Error& err) {
                if (err.kind() == Error::Kind::RejectedInput) {
                    e.status = Status::Pass;
                    e.note = "rejected as specified: " + std::string(err.what());
                } else {
                    e.status = Status::Fail;
                    e.note = err.what();
                }
            }
            report.add(std::move(e));
        }
        return;
    }

    for (const auto& inst : rec.instances) {
        ReportEntry e;
        e.id = rec.id;
        e.instance = inst.label;
        try {
            NormalizeStats stats;
            // Normalizing after expansion and after every clearing step keeps
            // the intermediate expressions collapsed.
            Expr lhs = normalize(expand_derived(parse_expr(inst.lhs, alg), alg), alg, &stats,
                                 opts.budget);
            Expr rhs = normalize(expand_derived(parse_expr(inst.rhs, alg), alg), alg, &stats,
                                 opts.budget);
            for (const ClearStep& step : rec.clears) {
                Expr m = clear_multiplier(alg, step.multiplier);
                lhs = normalize(step.left ? m * lhs : lhs * m, alg, &stats, opts.budget);
                rhs = normalize(step.left ? m * rhs : rhs * m, alg, &stats, opts.budget);
            }
            Expr diff = normalize(lhs - rhs, alg, &stats, opts.budget);
            e.steps = stats.steps;
            if (diff.is_zero()) {
                e.status = Status::Pass;
            } else {
                bool has_inverse = false;
                for (const auto& [w, s] : diff.terms())
                    for (letter_t l : w)
                        if (alg.info(l).kind == LetterKind::Inverse) has_inverse = true;
                e.status = has_inverse ? Status::Inconclusive : Status::Fail;
                e.residual = print_expr(diff, alg);
            }
        } catch (const Error& err) {
            e.status = Status::Fail;
            e.note = std::string("error: ") + err.what();
        }
        report.add(std::move(e));
    }
}

Report verify_catalog(const AlgebraSet& algebras, const CatalogFilter& filter,
                      const VerifyOptions& opts) {
    Report report;
    for (const IdentityRecord& rec : build_catalog(algebras)) {
        if (!filter.algebra.empty() && rec.algebra != filter.algebra) continue;
        if (!filter.tag.empty() && !rec.has_tag(filter.tag)) continue;
        if (!filter.id.empty() && rec.id != filter.id) continue;
        verify_record(rec, algebras, report, opts);
    }
    report.sort_entries();
    return report;
}

std::string serialize_catalog(const std::vector<IdentityRecord>& records) {
    std::ostringstream os;
    for (const auto& rec : records) {
        os << "record " << rec.id << "\n";
        os << "  algebra " << rec.algebra << "\n";
        os << "  recipe ";
        switch (rec.kind) {
            case RecipeKind::Direct: os << "direct"; break;
            case RecipeKind::Clear:
                os << "clear";
                for (const auto& c : rec.clears)
                    os << " " << (c.left ? "left" : "right") << ":" << c.multiplier;
                break;
            case RecipeKind::NumericalOnly: os << "numerical-only"; break;
            case RecipeKind::Guard: os << "guard"; break;
        }
        os << "\n";
        os << "  ref " << rec.ref << "\n";
        os << "  tags";
        for (const auto& t : rec.tags) os << " " << t;
        os << "\n";
        for (const auto& inst : rec.instances) {
            os << "  instance " << (inst.label.empty() ? "-" : inst.label) << "\n";
            os << "    lhs " << inst.lhs << "\n";
            os << "    rhs " << inst.rhs << "\n";
        }
        os << "end\n";
    }
    return os.str();
}

}  // namespace opalg
