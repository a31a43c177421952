#ifndef OPALG_PARSER_HPP
#define OPALG_PARSER_HPP

#include "opalg/algebra.hpp"

namespace opalg {

class ParseError : public Error {
public:
    ParseError(const std::string& what, size_t pos)
        : Error(Error::Kind::RejectedInput, what + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

/// Parses the operator grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*' | '.') factor)*
///   factor := scalar | symbol | 'comm(' expr ',' expr ')' | 'sym(' expr ',' expr ')'
///           | 'inv(' symbol ')' | '(' expr ')' | factor '^' nat
///   scalar := rational | 'i' | 'hbar'
/// '.' is the symmetrised product, '*' the ordinary product; '^' binds
/// tighter.  Symbols carry digit index suffixes (J10 resolves to -J01; J with
/// equal indices is rejected).  comm(...) is evaluated with the algebra's
/// structure table; the result may contain derived symbols.
Expr parse_expr(const std::string& text, const AlgebraSpec& alg);

/// Canonical printer; output reparses to the same Expr.
std::string print_expr(const Expr& e, const AlgebraSpec& alg);

}  // namespace opalg

#endif
