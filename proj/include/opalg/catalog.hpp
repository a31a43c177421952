#ifndef OPALG_CATALOG_HPP
#define OPALG_CATALOG_HPP

#include "opalg/algebras.hpp"
#include "opalg/report.hpp"

namespace opalg {

/// The four shipped algebras as one bundle, so sensitivity runs can swap in a
/// mutated spec while the rest stay stock.
struct AlgebraSet {
    std::shared_ptr<const AlgebraSpec> conf2d, conf2d_pair, poincare4d, conf4d;

    static AlgebraSet shipped();
    const AlgebraSpec& by_name(const std::string& name) const;
};

enum class RecipeKind {
    Direct,         // normalize(lhs - rhs) must vanish as is
    Clear,          // multiply both sides by invertible elements first
    NumericalOnly,  // delegated to the numerical suite
    Guard           // the expected outcome is a rejection, not an equality
};

struct ClearStep {
    bool left;               // left or right multiplication
    std::string multiplier;  // name of an invertible element ("E", "Psq", ...)
};

struct IdentityInstance {
    std::string label;
    std::string lhs, rhs;  // expressions in the CLI grammar
};

/// One paper identity (or sweep).  lhs/rhs are stored as grammar text and
/// parsed against the target algebra at verification time, so brackets inside
/// comm(...) are always evaluated with the structure table actually under
/// test.
struct IdentityRecord {
    std::string id;
    std::string algebra;
    RecipeKind kind = RecipeKind::Direct;
    std::vector<ClearStep> clears;
    std::vector<IdentityInstance> instances;
    std::string ref;
    std::vector<std::string> tags;

    bool has_tag(const std::string& t) const;
};

/// All shipped records, including the Jacobi sweeps (tagged "jacobi").
std::vector<IdentityRecord> build_catalog(const AlgebraSet& algebras);

struct VerifyOptions {
    size_t budget = kDefaultStepBudget;
};

struct CatalogFilter {
    std::string algebra;  // empty = all
    std::string tag;      // empty = all
    std::string id;       // empty = all
};

/// Verifies one record into the report (one entry per instance).
void verify_record(const IdentityRecord& rec, const AlgebraSet& algebras, Report& report,
                   const VerifyOptions& opts = {});

/// Runs every matching record; the report is sorted by (id, instance) and its
/// exit status counts only records with symbolic recipes.
Report verify_catalog(const AlgebraSet& algebras, const CatalogFilter& filter = {},
                      const VerifyOptions& opts = {});

/// Catalog file (documented in the README): one record per block, expressions
/// in the CLI grammar.
std::string serialize_catalog(const std::vector<IdentityRecord>& records);

}  // namespace opalg

#endif
