#include "opalg/algebras.hpp"

#include "opalg/parser.hpp"
#include "opalg/tensors.hpp"

#include <functional>
#include <mutex>
#include <sstream>

namespace opalg {

namespace {

Scalar rat(long n) { return Scalar::integer(n); }

/// Brackets of an inverse letter, derived once from (A, X^-1) = -X^-1 (A,X) X^-1
/// and stored in the table.  Processed in rank order so each derivation only
/// straightens through brackets that are already known.
void derive_inverse_brackets(AlgebraSpec& alg, letter_t q, const Expr& element,
                             const std::vector<letter_t>& gens) {
    const Expr qe = Expr::letter(q);
    for (letter_t g : gens) {
        Expr gx = commutator(Expr::letter(g), element, alg);
        if (gx.is_zero()) continue;
        Expr b = normalize(-(qe * gx * qe), alg);
        if (!b.is_zero()) alg.set_bracket(g, q, b);
    }
}

void validate_jacobi(const AlgebraSpec& alg) {
    std::vector<letter_t> gens = alg.generators();
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a + 1; b < gens.size(); ++b)
            for (size_t c = b + 1; c < gens.size(); ++c)
                if (!jacobi(alg, gens[a], gens[b], gens[c]).is_zero())
                    throw Error(Error::Kind::Internal,
                                "Jacobi identity fails in algebra " + alg.name() + " on triple (" +
                                    alg.info(gens[a]).name + ", " + alg.info(gens[b]).name + ", " +
                                    alg.info(gens[c]).name + ")");
}

void add_conf2d_sector(AlgebraSpec& alg, const std::string& e, const std::string& d,
                       const std::string& c) {
    letter_t E = alg.letter(e), D = alg.letter(d), C = alg.letter(c);
    alg.set_bracket(E, D, Expr::letter(E));
    alg.set_bracket(E, C, rat(2) * Expr::letter(D));
    alg.set_bracket(D, C, Expr::letter(C));
}

struct Conf2dNames {
    std::string inv, e, d, c;
};

void finish_conf2d_sector(AlgebraSpec& alg, const Conf2dNames& n) {
    letter_t iE = alg.letter(n.inv), E = alg.letter(n.e);
    alg.add_cancel_pair(iE, E);
    alg.set_inverse_of(iE, Expr::letter(E));
    derive_inverse_brackets(alg, iE, Expr::letter(E),
                            {E, alg.letter(n.d), alg.letter(n.c)});
}

std::shared_ptr<AlgebraSpec> build_conf2d() {
    auto alg = std::make_shared<AlgebraSpec>(
        "conf2d", std::vector<LetterInfo>{{"invE", LetterKind::Inverse},
                                          {"E", LetterKind::Generator},
                                          {"D", LetterKind::Generator},
                                          {"C", LetterKind::Generator},
                                          {"U", LetterKind::Derived},
                                          {"alpha2", LetterKind::Derived},
                                          {"N", LetterKind::Derived}});
    add_conf2d_sector(*alg, "E", "D", "C");
    finish_conf2d_sector(*alg, {"invE", "E", "D", "C"});
    Expr E = alg->letter_expr("E"), D = alg->letter_expr("D"), C = alg->letter_expr("C");
    Expr iE = alg->letter_expr("invE");
    alg->set_derived(alg->letter("U"), sym_product(D, iE));
    alg->set_derived(alg->letter("alpha2"), sym_product(C, E) - D * D +
                                                Expr::scalar(Scalar::rational(1, 4) * Scalar::hbar(2)));
    // N has no symbolic definition: it exists at the representation level only.
    return alg;
}

std::shared_ptr<AlgebraSpec> build_conf2d_pair() {
    std::vector<LetterInfo> letters{{"invEp", LetterKind::Inverse},
                                    {"invEm", LetterKind::Inverse},
                                    {"Ep", LetterKind::Generator},
                                    {"Em", LetterKind::Generator},
                                    {"Dp", LetterKind::Generator},
                                    {"Dm", LetterKind::Generator},
                                    {"Cp", LetterKind::Generator},
                                    {"Cm", LetterKind::Generator}};
    for (const char* s : {"Up", "Um", "X0", "X1", "P0", "P1", "Psq", "alpha2p", "alpha2m"})
        letters.push_back({s, LetterKind::Derived});
    auto alg = std::make_shared<AlgebraSpec>("conf2d-pair", std::move(letters));
    add_conf2d_sector(*alg, "Ep", "Dp", "Cp");
    add_conf2d_sector(*alg, "Em", "Dm", "Cm");
    // cross-sector brackets all vanish: no table entries
    finish_conf2d_sector(*alg, {"invEp", "Ep", "Dp", "Cp"});
    finish_conf2d_sector(*alg, {"invEm", "Em", "Dm", "Cm"});

    auto L = [&](const char* n) { return alg->letter_expr(n); };
    Expr Up = sym_product(L("Dp"), L("invEp"));
    Expr Um = sym_product(L("Dm"), L("invEm"));
    alg->set_derived(alg->letter("Up"), Up);
    alg->set_derived(alg->letter("Um"), Um);
    Expr half = Expr::scalar(Scalar::rational(1, 2));
    // positions from the two light-cone observables, as symbols
    alg->set_derived(alg->letter("X0"),
                     half * (alg->letter_expr("Um") + alg->letter_expr("Up")));
    alg->set_derived(alg->letter("X1"),
                     half * (alg->letter_expr("Um") - alg->letter_expr("Up")));
    // covariant momenta: fixed so that (P_mu, X_nu) = -eta_{mu nu} holds
    alg->set_derived(alg->letter("P0"), -(L("Ep") + L("Em")));
    alg->set_derived(alg->letter("P1"), L("Ep") - L("Em"));
    // squared mass; the factor 4 follows from the momentum convention above
    alg->set_derived(alg->letter("Psq"), rat(4) * (L("Ep") * L("Em")));
    Expr h24 = Expr::scalar(Scalar::rational(1, 4) * Scalar::hbar(2));
    alg->set_derived(alg->letter("alpha2p"),
                     sym_product(L("Cp"), L("Ep")) - L("Dp") * L("Dp") + h24);
    alg->set_derived(alg->letter("alpha2m"),
                     sym_product(L("Cm"), L("Em")) - L("Dm") * L("Dm") + h24);
    return alg;
}

std::string j_name(int mu, int nu) { return "J" + std::to_string(mu) + std::to_string(nu); }
std::string s_name(int mu, int nu) { return "S" + std::to_string(mu) + std::to_string(nu); }

void add_poincare_table(AlgebraSpec& alg) {
    auto P = [&](int mu) { return alg.letter("P" + std::to_string(mu)); };
    auto Jl = [&](int mu, int nu) { return alg.letter(j_name(mu, nu)); };
    // (P,P) = 0: no entries
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho) {
                Expr e;
                if (nu == rho) e = e + rat(eta(nu, nu)) * P_letter(alg, mu);
                if (mu == rho) e = e - rat(eta(mu, mu)) * P_letter(alg, nu);
                if (!e.is_zero()) alg.set_bracket(Jl(mu, nu), P(rho), e);
            }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sg = rho + 1; sg < 4; ++sg) {
                    if (Jl(mu, nu) >= Jl(rho, sg)) continue;
                    Expr e;
                    if (nu == rho) e = e + rat(eta(nu, nu)) * J_expr(alg, mu, sg);
                    if (mu == sg) e = e + rat(eta(mu, mu)) * J_expr(alg, nu, rho);
                    if (mu == rho) e = e - rat(eta(mu, mu)) * J_expr(alg, nu, sg);
                    if (nu == sg) e = e - rat(eta(nu, nu)) * J_expr(alg, mu, rho);
                    if (!e.is_zero()) alg.set_bracket(Jl(mu, nu), Jl(rho, sg), e);
                }
}

void add_momentum_spin_symbols(AlgebraSpec& alg, bool with_q) {
    auto L = [&](const std::string& n) { return alg.letter(n); };
    Expr psq;
    for (int a = 0; a < 4; ++a) psq = psq + rat(eta(a, a)) * (P_letter(alg, a) * P_letter(alg, a));
    alg.set_derived(L("Psq"), psq);

    std::array<Expr, 4> W;
    for (int mu = 0; mu < 4; ++mu) {
        Expr e;
        for (int nu = 0; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sg = 0; sg < 4; ++sg) {
                    int s = epsilon_upper(mu, nu, rho, sg);
                    if (s) e = e + Scalar::rational(-s, 2) * (J_expr(alg, nu, rho) * P_letter(alg, sg));
                }
        W[mu] = e;
        alg.set_derived(L("W" + std::to_string(mu)), e);
    }
    Expr wsq;
    for (int a = 0; a < 4; ++a) wsq = wsq + rat(eta(a, a)) * (W[a] * W[a]);
    alg.set_derived(L("Wsq"), wsq);

    if (!with_q) return;
    Expr Q = alg.letter_expr("Q");
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            Expr e;
            for (int rho = 0; rho < 4; ++rho)
                for (int sg = 0; sg < 4; ++sg) {
                    int s = epsilon_lower(mu, nu, rho, sg);
                    if (s) e = e + rat(s) * (W[rho] * P_upper(alg, sg));
                }
            alg.set_derived(L(s_name(mu, nu)), e * Q);
        }
    alg.set_derived(L("Ssq"), alg.derived(L("Wsq")) * Q);
    for (int mu = 0; mu < 4; ++mu) {
        Expr e = sym_product(P_upper(alg, mu) * Q, alg.letter_expr("D"));
        for (int nu = 0; nu < 4; ++nu) {
            Expr juu = rat(eta(mu, mu) * eta(nu, nu)) * J_expr(alg, mu, nu);
            if (!juu.is_zero()) e = e - sym_product(P_letter(alg, nu) * Q, juu);
        }
        alg.set_derived(L("X" + std::to_string(mu)), e);
    }
}

std::shared_ptr<AlgebraSpec> build_poincare4d() {
    std::vector<LetterInfo> letters;
    for (int mu = 0; mu < 4; ++mu) letters.push_back({"P" + std::to_string(mu), LetterKind::Generator});
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) letters.push_back({j_name(mu, nu), LetterKind::Generator});
    for (const char* s : {"Psq", "W0", "W1", "W2", "W3", "Wsq"})
        letters.push_back({s, LetterKind::Derived});
    auto alg = std::make_shared<AlgebraSpec>("poincare4d", std::move(letters));
    add_poincare_table(*alg);
    add_momentum_spin_symbols(*alg, false);
    return alg;
}

std::shared_ptr<AlgebraSpec> build_conf4d(
    const std::function<void(AlgebraSpec&)>& mutate = {}) {
    std::vector<LetterInfo> letters{{"Q", LetterKind::Inverse}};
    for (int mu = 0; mu < 4; ++mu) letters.push_back({"P" + std::to_string(mu), LetterKind::Generator});
    letters.push_back({"D", LetterKind::Generator});
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) letters.push_back({j_name(mu, nu), LetterKind::Generator});
    for (int mu = 0; mu < 4; ++mu) letters.push_back({"C" + std::to_string(mu), LetterKind::Generator});
    for (const char* s : {"Psq", "W0", "W1", "W2", "W3", "Wsq", "S01", "S02", "S03", "S12", "S13",
                          "S23", "Ssq", "X0", "X1", "X2", "X3"})
        letters.push_back({s, LetterKind::Derived});
    auto alg = std::make_shared<AlgebraSpec>("conf4d", std::move(letters));

    add_poincare_table(*alg);
    auto L = [&](const std::string& n) { return alg->letter(n); };
    letter_t D = L("D");
    for (int mu = 0; mu < 4; ++mu) alg->set_bracket(D, L("P" + std::to_string(mu)), P_letter(*alg, mu));
    // (D, J) = 0
    for (int mu = 0; mu < 4; ++mu)
        alg->set_bracket(D, L("C" + std::to_string(mu)), -C_letter(*alg, mu));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Expr e = rat(-2) * J_expr(*alg, mu, nu);
            if (mu == nu) e = e + rat(-2 * eta(mu, mu)) * Expr::letter(D);
            if (!e.is_zero()) alg->set_bracket(L("P" + std::to_string(mu)), L("C" + std::to_string(nu)), e);
        }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho) {
                Expr e;
                if (nu == rho) e = e + rat(eta(nu, nu)) * C_letter(*alg, mu);
                if (mu == rho) e = e - rat(eta(mu, mu)) * C_letter(*alg, nu);
                if (!e.is_zero()) alg->set_bracket(L(j_name(mu, nu)), L("C" + std::to_string(rho)), e);
            }
    // (C,C) = 0: no entries

    if (mutate) mutate(*alg);

    // Q = inverse of the squared mass.  P0^2 is the leading pair of the
    // quadratic form; cancellation rewrites Q^k P0 P0 w.
    letter_t Q = L("Q");
    Expr psq;
    for (int a = 0; a < 4; ++a) psq = psq + rat(eta(a, a)) * (P_letter(*alg, a) * P_letter(*alg, a));
    alg->set_inverse_of(Q, psq);
    QuadInverseRule rule;
    rule.q = Q;
    rule.lead = L("P0");
    rule.unit_coeff = Scalar::integer(1);
    for (int a = 1; a < 4; ++a)
        rule.repl.push_back({Scalar::integer(1), {L("P" + std::to_string(a)), L("P" + std::to_string(a))}});
    alg->set_quad_rule(rule);
    derive_inverse_brackets(*alg, Q, psq, alg->generators());

    add_momentum_spin_symbols(*alg, true);
    return alg;
}

std::shared_ptr<AlgebraSpec> build(const std::string& name) {
    if (name == "conf2d") return build_conf2d();
    if (name == "conf2d-pair") return build_conf2d_pair();
    if (name == "poincare4d") return build_poincare4d();
    if (name == "conf4d") return build_conf4d();
    throw Error(Error::Kind::RejectedInput, "unknown algebra '" + name + "'");
}

}  // namespace

Expr P_letter(const AlgebraSpec& alg, int mu) {
    return alg.letter_expr("P" + std::to_string(mu));
}

Expr P_upper(const AlgebraSpec& alg, int mu) { return rat(eta(mu, mu)) * P_letter(alg, mu); }

Expr J_expr(const AlgebraSpec& alg, int mu, int nu) {
    if (mu == nu) return Expr::zero();
    if (mu < nu) return alg.letter_expr(j_name(mu, nu));
    return -alg.letter_expr(j_name(nu, mu));
}

Expr C_letter(const AlgebraSpec& alg, int mu) {
    return alg.letter_expr("C" + std::to_string(mu));
}

std::shared_ptr<const AlgebraSpec> make_algebra(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const AlgebraSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    auto alg = build(name);
    validate_jacobi(*alg);
    cache[name] = alg;
    return alg;
}

std::shared_ptr<const AlgebraSpec> make_algebra_mutated(const std::string& name,
                                                        const std::string& g1,
                                                        const std::string& g2,
                                                        const Expr& delta) {
    if (name == "conf4d")
        return build_conf4d([&](AlgebraSpec& alg) {
            letter_t a = alg.letter(g1), b = alg.letter(g2);
            alg.set_bracket(a, b, alg.bracket(a, b) + delta);
        });
    auto alg = build(name);
    letter_t a = alg->letter(g1), b = alg->letter(g2);
    alg->set_bracket(a, b, alg->bracket(a, b) + delta);
    // Re-derive inverse brackets against the mutated table.
    if (name == "conf2d") {
        finish_conf2d_sector(*alg, {"invE", "E", "D", "C"});
    } else if (name == "conf2d-pair") {
        finish_conf2d_sector(*alg, {"invEp", "Ep", "Dp", "Cp"});
        finish_conf2d_sector(*alg, {"invEm", "Em", "Dm", "Cm"});
    }
    return alg;
}

Expr derived_definition(const AlgebraSpec& alg, const std::string& symbol) {
    static const char* positional[] = {"X0", "X1", "X2", "X3", "S01", "S02", "S03",
                                       "S12", "S13", "S23", "Ssq"};
    if (!alg.has_letter(symbol)) {
        for (const char* p : positional)
            if (symbol == p)
                throw Error(Error::Kind::RejectedInput,
                            "'" + symbol + "' requires an invertible squared mass (letter Q); "
                            "not available in algebra " + alg.name());
        throw Error(Error::Kind::RejectedInput,
                    "unknown symbol '" + symbol + "' for algebra " + alg.name());
    }
    letter_t l = alg.letter(symbol);
    if (alg.info(l).kind != LetterKind::Derived)
        throw Error(Error::Kind::RejectedInput, "'" + symbol + "' is a letter, not a derived symbol");
    if (!alg.has_derived(l))
        throw Error(Error::Kind::RejectedInput,
                    "'" + symbol + "' is representation-level only; it has no symbolic definition");
    return alg.derived(l);
}

Expr delta_accel(const AlgebraSpec& alg, const std::array<Rational, 4>& a_upper) {
    Expr e;
    for (int mu = 0; mu < 4; ++mu)
        e = e + Scalar::rational(a_upper[mu] / 2) * C_letter(alg, mu);
    return e;
}

Expr accel_dot_x(const AlgebraSpec& alg, const std::array<Rational, 4>& a_upper) {
    Expr e;
    for (int mu = 0; mu < 4; ++mu)
        e = e + Scalar::rational(a_upper[mu] * eta(mu, mu)) * alg.letter_expr("X" + std::to_string(mu));
    return e;
}

Expr expand_derived(const Expr& e, const AlgebraSpec& alg) {
    const size_t depth_limit = alg.letter_count() + 1;
    auto expand = [&](const auto& self, const Expr& x, size_t depth) -> Expr {
        if (depth > depth_limit)
            throw Error(Error::Kind::Internal,
                        "cycle detected while expanding derived symbols in " + alg.name());
        Expr out;
        for (const auto& [w, s] : x.terms()) {
            Expr prod = Expr::scalar(s);
            for (letter_t l : w) {
                if (alg.info(l).kind == LetterKind::Derived)
                    prod = prod * self(self, alg.derived(l), depth + 1);
                else
                    prod = prod * Expr::letter(l);
            }
            out = out + prod;
        }
        return out;
    };
    return expand(expand, e, 0);
}

Expr jacobi(const AlgebraSpec& alg, letter_t g1, letter_t g2, letter_t g3) {
    Expr s;
    const letter_t t[3][3] = {{g1, g2, g3}, {g2, g3, g1}, {g3, g1, g2}};
    for (const auto& triple : t)
        s = s + commutator(commutator(Expr::letter(triple[0]), Expr::letter(triple[1]), alg),
                           Expr::letter(triple[2]), alg);
    return normalize(s, alg);
}

std::string serialize_algebra(const AlgebraSpec& alg) {
    std::ostringstream os;
    os << "algebra " << alg.name() << "\n";
    for (letter_t l = 0; l < alg.letter_count(); ++l) {
        const LetterInfo& info = alg.info(l);
        switch (info.kind) {
            case LetterKind::Generator:
                os << "generator " << info.name << "\n";
                break;
            case LetterKind::Inverse:
                os << "inverse " << info.name << " of "
                   << print_expr(alg.inverse_designations().at(l), alg) << "\n";
                break;
            case LetterKind::Derived:
                os << "symbol " << info.name << "\n";
                break;
        }
    }
    for (const auto& [pair, e] : alg.table())
        os << "bracket (" << alg.info(pair.first).name << ", " << alg.info(pair.second).name
           << ") = " << print_expr(e, alg) << "\n";
    for (const auto& [l, def] : alg.derived_definitions())
        os << "derived " << alg.info(l).name << " = " << print_expr(def, alg) << "\n";
    os << "end\n";
    return os.str();
}

std::shared_ptr<const AlgebraSpec> parse_algebra_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string name;
    std::vector<LetterInfo> letters;
    std::vector<std::pair<std::string, std::string>> designations;  // inverse name -> element text
    std::vector<std::string> bracket_lines, derived_lines;

    auto fail = [](const std::string& what) {
        throw Error(Error::Kind::RejectedInput, "algebra file: " + what);
    };

    while (std::getline(is, line)) {
        if (line.empty() || line == "end") continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "algebra") {
            ls >> name;
        } else if (kw == "generator") {
            std::string n;
            ls >> n;
            letters.push_back({n, LetterKind::Generator});
        } else if (kw == "inverse") {
            std::string n, of;
            ls >> n >> of;
            if (of != "of") fail("expected 'of' in inverse declaration");
            std::string rest;
            std::getline(ls, rest);
            letters.push_back({n, LetterKind::Inverse});
            designations.emplace_back(n, rest);
        } else if (kw == "symbol") {
            std::string n;
            ls >> n;
            letters.push_back({n, LetterKind::Derived});
        } else if (kw == "bracket") {
            bracket_lines.push_back(line);
        } else if (kw == "derived") {
            derived_lines.push_back(line);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (name.empty()) fail("missing 'algebra <name>' header");

    auto alg = std::make_shared<AlgebraSpec>(name, letters);
    for (const auto& [inv, element_text] : designations) {
        letter_t q = alg->letter(inv);
        Expr element = parse_expr(element_text, *alg);
        alg->set_inverse_of(q, element);
        if (element.size() == 1 && element.terms().begin()->first.size() == 1 &&
            element.terms().begin()->second == Scalar::integer(1)) {
            alg->add_cancel_pair(q, element.terms().begin()->first[0]);
        } else {
            // diagonal quadratic form: reconstruct the cancellation rule
            QuadInverseRule rule;
            rule.q = q;
            bool have_lead = false;
            Scalar lead_coeff;
            for (const auto& [w, s] : element.terms()) {
                if (w.size() != 2 || w[0] != w[1])
                    fail("unsupported designated element for '" + inv + "'");
                if (!have_lead) {
                    rule.lead = w[0];
                    lead_coeff = s;
                    have_lead = true;
                }
            }
            if (!have_lead) fail("empty designated element");
            // X = c0 lead^2 + sum ci li^2, Q X = 1  =>
            // Q^k lead^2 w -> (1/c0) Q^{k-1} w - sum (ci/c0) Q^k li^2 w
            Rational c0_re = lead_coeff.terms().at(0).c.re;
            rule.unit_coeff = Scalar::rational(Rational(1) / c0_re);
            for (const auto& [w, s] : element.terms()) {
                if (w[0] == rule.lead) continue;
                Rational ci = s.terms().at(0).c.re;
                rule.repl.push_back({Scalar::rational(-ci / c0_re), {w[0], w[1]}});
            }
            alg->set_quad_rule(rule);
        }
    }
    for (const std::string& bl : bracket_lines) {
        size_t open = bl.find('('), comma = bl.find(',', open), close = bl.find(')', comma);
        size_t eq = bl.find('=', close);
        if (open == std::string::npos || comma == std::string::npos ||
            close == std::string::npos || eq == std::string::npos)
            fail("malformed bracket line: " + bl);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(' ');
            size_t b = s.find_last_not_of(' ');
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string n1 = trim(bl.substr(open + 1, comma - open - 1));
        std::string n2 = trim(bl.substr(comma + 1, close - comma - 1));
        alg->set_bracket(alg->letter(n1), alg->letter(n2), parse_expr(bl.substr(eq + 1), *alg));
    }
    for (const std::string& dl : derived_lines) {
        std::istringstream ls(dl);
        std::string kw, n, eq;
        ls >> kw >> n >> eq;
        if (eq != "=") fail("malformed derived line: " + dl);
        std::string rest;
        std::getline(ls, rest);
        alg->set_derived(alg->letter(n), parse_expr(rest, *alg));
    }
    return alg;
}

}  // namespace opalg
