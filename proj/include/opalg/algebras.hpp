#ifndef OPALG_ALGEBRAS_HPP
#define OPALG_ALGEBRAS_HPP

#include "opalg/algebra.hpp"

#include <array>
#include <memory>

namespace opalg {

/// The four shipped algebras.  make_algebra returns a fully populated spec
/// with inverse-letter brackets derived from the inverse rule and the Jacobi
/// identity verified on every generator triple.
///   conf2d      : E, D, C with inverse invE
///   conf2d-pair : two commuting copies (Ep, Dp, Cp / Em, Dm, Cm) + invEp, invEm
///   poincare4d  : P0..P3, J01..J23
///   conf4d      : poincare4d + D + C0..C3, with Q = inverse of the squared mass
std::shared_ptr<const AlgebraSpec> make_algebra(const std::string& name);

/// Single-entry structure-table mutation hook for sensitivity runs.  Applies
/// `delta` to the bracket (g1,g2) before inverse-bracket derivation and skips
/// the Jacobi validation.  Test/diagnostic use only.
std::shared_ptr<const AlgebraSpec> make_algebra_mutated(const std::string& name,
                                                        const std::string& g1,
                                                        const std::string& g2,
                                                        const Expr& delta);

/// Indexed-letter helpers for the 4d algebras.  J/S with swapped indices
/// resolve to the negated stored letter; equal indices give zero.
Expr P_letter(const AlgebraSpec& alg, int mu);
Expr P_upper(const AlgebraSpec& alg, int mu);
Expr J_expr(const AlgebraSpec& alg, int mu, int nu);
Expr C_letter(const AlgebraSpec& alg, int mu);

/// Defining expression of a derived symbol ("U", "X0", "Wsq", ...).
/// Throws RejectedInput when the symbol is not available for the algebra
/// (e.g. position or spin observables without Q).
Expr derived_definition(const AlgebraSpec& alg, const std::string& symbol);

/// Generator of transformations to accelerated frames for an acceleration
/// 4-vector with exact rational upper components: (1/2) a^mu C_mu.
Expr delta_accel(const AlgebraSpec& alg, const std::array<Rational, 4>& a_upper);

/// Position observable contracted with the acceleration: a^mu X_mu.
Expr accel_dot_x(const AlgebraSpec& alg, const std::array<Rational, 4>& a_upper);

/// Replaces derived symbols by their definitions until only core letters
/// remain.  Idempotent on letter-only input; cycles raise Error::Internal.
Expr expand_derived(const Expr& e, const AlgebraSpec& alg);

/// Normalized cyclic sum ((g1,g2),g3) + ((g2,g3),g1) + ((g3,g1),g2).
Expr jacobi(const AlgebraSpec& alg, letter_t g1, letter_t g2, letter_t g3);

/// Structured text form of the algebra (documented in the README); parsing it
/// back and re-serializing is byte-identical.
std::string serialize_algebra(const AlgebraSpec& alg);
std::shared_ptr<const AlgebraSpec> parse_algebra_file(const std::string& text);

}  // namespace opalg

#endif
