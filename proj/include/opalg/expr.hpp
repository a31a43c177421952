#ifndef OPALG_EXPR_HPP
#define OPALG_EXPR_HPP

#include "opalg/scalar.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace opalg {

/// Index of a letter inside its owning AlgebraSpec.  The numeric value is the
/// letter's rank in the algebra's canonical order.
using letter_t = unsigned char;

/// A word is a finite product of letters; the empty word is the ring unit.
using Word = std::basic_string<letter_t>;

class Error : public std::runtime_error {
public:
    enum class Kind { RejectedInput, Internal, ResourceGuard };
    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Formal sum of scalar-weighted words.  Canonical invariant: no zero
/// coefficients (maintained by all mutators).
class Expr {
public:
    using Terms = std::map<Word, Scalar>;

    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr unit() { return single(Word(), Scalar::integer(1)); }
    static Expr scalar(const Scalar& s) { return single(Word(), s); }
    static Expr letter(letter_t l) { return single(Word(1, l), Scalar::integer(1)); }
    static Expr word(const Word& w) { return single(w, Scalar::integer(1)); }
    static Expr single(const Word& w, const Scalar& s) {
        Expr e;
        if (!s.is_zero()) e.terms_[w] = s;
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    /// Maximum word length over all terms (0 for scalars and zero).
    size_t degree() const;

    void add_term(const Word& w, const Scalar& s);

    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator-() const;
    Expr operator*(const Expr& o) const;  // concatenation product
    bool operator==(const Expr& o) const { return terms_ == o.terms_; }
    bool operator!=(const Expr& o) const { return !(*this == o); }

    Expr scaled(const Scalar& s) const;

    bool contains_letter(letter_t l) const;

private:
    Terms terms_;
};

inline Expr operator*(const Scalar& s, const Expr& e) { return e.scaled(s); }

/// Symmetrised product (AB + BA)/2.
Expr sym_product(const Expr& a, const Expr& b);

}  // namespace opalg

#endif
