#include "opalg/expr.hpp"

namespace opalg {

size_t Expr::degree() const {
    size_t d = 0;
    for (const auto& [w, s] : terms_) d = std::max(d, w.size());
    return d;
}

void Expr::add_term(const Word& w, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, s);
    } else {
        it->second = it->second + s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Expr Expr::operator+(const Expr& o) const {
    Expr r = *this;
    for (const auto& [w, s] : o.terms_) r.add_term(w, s);
    return r;
}

Expr Expr::operator-(const Expr& o) const {
    Expr r = *this;
    for (const auto& [w, s] : o.terms_) r.add_term(w, -s);
    return r;
}

Expr Expr::operator-() const {
    Expr r;
    for (const auto& [w, s] : terms_) r.terms_.emplace(w, -s);
    return r;
}

Expr Expr::operator*(const Expr& o) const {
    Expr r;
    for (const auto& [w1, s1] : terms_)
        for (const auto& [w2, s2] : o.terms_) r.add_term(w1 + w2, s1 * s2);
    return r;
}

Expr Expr::scaled(const Scalar& s) const {
    Expr r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
    return r;
}

bool Expr::contains_letter(letter_t l) const {
    for (const auto& [w, s] : terms_)
        if (w.find(l) != Word::npos) return true;
    return false;
}

Expr sym_product(const Expr& a, const Expr& b) {
    return (a * b + b * a).scaled(Scalar::rational(1, 2));
}

}  // namespace opalg
