#ifndef OPALG_ALGEBRA_HPP
#define OPALG_ALGEBRA_HPP

#include "opalg/expr.hpp"

#include <optional>
#include <vector>

namespace opalg {

enum class LetterKind { Generator, Inverse, Derived };

struct LetterInfo {
    std::string name;
    LetterKind kind;
};

/// Cancellation rule for the inverse of a designated element that is a
/// quadratic form in a commuting letter family (e.g. the squared-mass
/// element).  A sorted word q^k lead lead w rewrites to
///   unit_coeff * q^(k-1) w  +  sum_i coeff_i * q^k l_i l_i w.
struct QuadInverseRule {
    letter_t q;
    letter_t lead;
    Scalar unit_coeff;
    std::vector<std::pair<Scalar, std::pair<letter_t, letter_t>>> repl;
};

/// A named algebra: letters in canonical order, the structure table for the
/// scaled bracket (A,B) = [A,B]/(i hbar), designated invertible elements, and
/// derived-symbol definitions.  Immutable once built; safe to share across
/// threads.
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, std::vector<LetterInfo> letters)
        : name_(std::move(name)), letters_(std::move(letters)) {}

    const std::string& name() const { return name_; }
    size_t letter_count() const { return letters_.size(); }
    const LetterInfo& info(letter_t l) const { return letters_.at(l); }
    const std::vector<LetterInfo>& letters() const { return letters_; }

    /// Letter id by name; throws RejectedInput when absent.
    letter_t letter(const std::string& name) const;
    bool has_letter(const std::string& name) const;
    Expr letter_expr(const std::string& name) const { return Expr::letter(letter(name)); }

    /// Structure table.  set_bracket stores (a,b) with antisymmetry applied;
    /// bracket(a,b) resolves any ordered pair (missing pairs commute).
    void set_bracket(letter_t a, letter_t b, const Expr& e);
    Expr bracket(letter_t a, letter_t b) const;
    const std::map<std::pair<letter_t, letter_t>, Expr>& table() const { return table_; }

    void add_cancel_pair(letter_t inv, letter_t base);
    bool cancels(letter_t a, letter_t b) const;
    const std::vector<std::pair<letter_t, letter_t>>& cancel_pairs() const { return cancel_; }

    void set_quad_rule(QuadInverseRule rule) { quad_ = std::move(rule); }
    const std::optional<QuadInverseRule>& quad_rule() const { return quad_; }

    void set_inverse_of(letter_t inv, const Expr& element) { inverse_of_[inv] = element; }
    const std::map<letter_t, Expr>& inverse_designations() const { return inverse_of_; }

    void set_derived(letter_t sym, const Expr& def) { derived_[sym] = def; }
    bool has_derived(letter_t sym) const { return derived_.count(sym) != 0; }
    const Expr& derived(letter_t sym) const;
    const std::map<letter_t, Expr>& derived_definitions() const { return derived_; }

    std::vector<letter_t> generators() const;

    /// All letters of e belong to this algebra and none is a derived symbol.
    void check_core(const Expr& e, const char* where) const;

private:
    std::string name_;
    std::vector<LetterInfo> letters_;
    std::map<std::pair<letter_t, letter_t>, Expr> table_;
    std::vector<std::pair<letter_t, letter_t>> cancel_;
    std::optional<QuadInverseRule> quad_;
    std::map<letter_t, Expr> inverse_of_;
    std::map<letter_t, Expr> derived_;
};

struct NormalizeStats {
    size_t steps = 0;
};

/// Default rewrite-step budget.  Straightening the shipped catalog stays well
/// below this; exceeding it signals a runaway rewrite (Error::Internal).
inline constexpr size_t kDefaultStepBudget = 1000000;

/// Canonical form: words sorted in the algebra's letter order via
/// AB = BA + i hbar (A,B), adjacent inverse pairs cancelled, and the quadratic
/// inverse rule applied.  Idempotent; preserves the enveloping-ring element.
Expr normalize(const Expr& e, const AlgebraSpec& alg, NormalizeStats* stats = nullptr,
               size_t budget = kDefaultStepBudget);

/// Scaled bracket (a,b) extended from the structure table by bilinearity and
/// the Leibniz rule.  The result is not normalized.
Expr commutator(const Expr& a, const Expr& b, const AlgebraSpec& alg);

enum class EqResult { True, False, Inconclusive };

/// True iff normalize(a - b) vanishes.  A nonzero normalized difference that
/// still carries inverse letters is Inconclusive, not False: clearing the
/// inverses (see the catalog recipes) is then required to decide.
EqResult equals(const Expr& a, const Expr& b, const AlgebraSpec& alg);

}  // namespace opalg

#endif
