#include "opalg/algebra.hpp"

#include <algorithm>

namespace opalg {

letter_t AlgebraSpec::letter(const std::string& name) const {
    for (size_t j = 0; j < letters_.size(); ++j)
        if (letters_[j].name == name) return static_cast<letter_t>(j);
    throw Error(Error::Kind::RejectedInput, "unknown letter '" + name + "' in algebra " + name_);
}

bool AlgebraSpec::has_letter(const std::string& name) const {
    for (const LetterInfo& l : letters_)
        if (l.name == name) return true;
    return false;
}

void AlgebraSpec::set_bracket(letter_t a, letter_t b, const Expr& e) {
    if (a == b) throw Error(Error::Kind::Internal, "bracket of a letter with itself");
    if (a < b) {
        if (!e.is_zero()) table_[{a, b}] = e;
    } else {
        if (!e.is_zero()) table_[{b, a}] = -e;
    }
}

Expr AlgebraSpec::bracket(letter_t a, letter_t b) const {
    if (a == b) return Expr::zero();
    if (a < b) {
        auto it = table_.find({a, b});
        return it == table_.end() ? Expr::zero() : it->second;
    }
    auto it = table_.find({b, a});
    return it == table_.end() ? Expr::zero() : -it->second;
}

void AlgebraSpec::add_cancel_pair(letter_t inv, letter_t base) {
    cancel_.emplace_back(inv, base);
}

bool AlgebraSpec::cancels(letter_t a, letter_t b) const {
    for (const auto& [inv, base] : cancel_)
        if ((a == inv && b == base) || (a == base && b == inv)) return true;
    return false;
}

const Expr& AlgebraSpec::derived(letter_t sym) const {
    auto it = derived_.find(sym);
    if (it == derived_.end())
        throw Error(Error::Kind::RejectedInput,
                    "symbol '" + info(sym).name + "' has no definition in algebra " + name_);
    return it->second;
}

std::vector<letter_t> AlgebraSpec::generators() const {
    std::vector<letter_t> g;
    for (size_t j = 0; j < letters_.size(); ++j)
        if (letters_[j].kind == LetterKind::Generator) g.push_back(static_cast<letter_t>(j));
    return g;
}

void AlgebraSpec::check_core(const Expr& e, const char* where) const {
    for (const auto& [w, s] : e.terms()) {
        for (letter_t l : w) {
            if (l >= letters_.size())
                throw Error(Error::Kind::RejectedInput,
                            std::string(where) + ": letter id out of range for algebra " + name_);
            if (letters_[l].kind == LetterKind::Derived)
                throw Error(Error::Kind::RejectedInput,
                            std::string(where) + ": derived symbol '" + letters_[l].name +
                                "' must be expanded first");
        }
    }
}

Expr normalize(const Expr& e, const AlgebraSpec& alg, NormalizeStats* stats, size_t budget) {
    alg.check_core(e, "normalize");
    // Worklist keyed by word so coefficients of equal words coalesce early.
    std::map<Word, Scalar> pending(e.terms().begin(), e.terms().end());
    Expr out;
    size_t steps = 0;
    const auto& quad = alg.quad_rule();

    auto push = [&pending](const Word& w, const Scalar& s) {
        if (s.is_zero()) return;
        auto it = pending.find(w);
        if (it == pending.end()) {
            pending.emplace(w, s);
        } else {
            it->second = it->second + s;
            if (it->second.is_zero()) pending.erase(it);
        }
    };

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word w = std::move(node.key());
        const Scalar s = std::move(node.mapped());
        if (s.is_zero()) continue;

        size_t redex = Word::npos;
        bool is_cancel = false;
        for (size_t j = 0; j + 1 < w.size(); ++j) {
            if (w[j] != w[j + 1] && alg.cancels(w[j], w[j + 1])) {
                redex = j;
                is_cancel = true;
                break;
            }
            if (w[j] > w[j + 1]) {
                redex = j;
                break;
            }
        }

        if (redex == Word::npos && quad) {
            size_t k = 0;
            while (k < w.size() && w[k] == quad->q) ++k;
            if (k >= 1 && w.size() >= k + 2 && w[k] == quad->lead && w[k + 1] == quad->lead) {
                if (++steps > budget)
                    throw Error(Error::Kind::Internal,
                                "normalize step budget exceeded (" + std::to_string(budget) +
                                    ") in algebra " + alg.name());
                Word rest = w.substr(k + 2);
                push(w.substr(0, k - 1) + rest, s * quad->unit_coeff);
                for (const auto& [coeff, pair] : quad->repl) {
                    Word nw = w.substr(0, k);
                    nw.push_back(pair.first);
                    nw.push_back(pair.second);
                    nw += rest;
                    push(nw, s * coeff);
                }
                continue;
            }
        }

        if (redex == Word::npos) {
            out.add_term(w, s);
            continue;
        }

        if (++steps > budget)
            throw Error(Error::Kind::Internal, "normalize step budget exceeded (" +
                                                   std::to_string(budget) + ") in algebra " +
                                                   alg.name());
        if (is_cancel) {
            Word nw = w.substr(0, redex) + w.substr(redex + 2);
            push(nw, s);
        } else {
            Word sw = w;
            std::swap(sw[redex], sw[redex + 1]);
            push(sw, s);
            const Expr corr = alg.bracket(w[redex], w[redex + 1]);
            const Scalar s_ih = s * Scalar::i_hbar();
            for (const auto& [cw, cs] : corr.terms())
                push(w.substr(0, redex) + cw + w.substr(redex + 2), s_ih * cs);
        }
    }
    if (stats) stats->steps += steps;
    return out;
}

Expr commutator(const Expr& a, const Expr& b, const AlgebraSpec& alg) {
    alg.check_core(a, "commutator");
    alg.check_core(b, "commutator");

    // (u, v) on words via the Leibniz rule, down to the structure table.
    auto word_bracket = [&alg](const Word& u, const Word& v) {
        auto rec = [&alg](const auto& self, const Word& u, const Word& v) -> Expr {
            if (u.empty() || v.empty()) return Expr::zero();
            if (u.size() == 1 && v.size() == 1) return alg.bracket(u[0], v[0]);
            if (u.size() > 1) {
                Word x = u.substr(0, 1), rest = u.substr(1);
                return Expr::word(x) * self(self, rest, v) + self(self, x, v) * Expr::word(rest);
            }
            Word y = v.substr(0, 1), rest = v.substr(1);
            return Expr::word(y) * self(self, u, rest) + self(self, u, y) * Expr::word(rest);
        };
        return rec(rec, u, v);
    };

    Expr r;
    for (const auto& [wa, sa] : a.terms())
        for (const auto& [wb, sb] : b.terms()) r = r + word_bracket(wa, wb).scaled(sa * sb);
    return r;
}

EqResult equals(const Expr& a, const Expr& b, const AlgebraSpec& alg) {
    Expr d = normalize(a - b, alg);
    if (d.is_zero()) return EqResult::True;
    for (const auto& [w, s] : d.terms())
        for (letter_t l : w)
            if (alg.info(l).kind == LetterKind::Inverse) return EqResult::Inconclusive;
    return EqResult::False;
}

}  // namespace opalg
