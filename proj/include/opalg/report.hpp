#ifndef OPALG_REPORT_HPP
#define OPALG_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace opalg {

enum class Status { Pass, Fail, Inconclusive };

const char* status_name(Status s);

/// One verified instance (an identity instance, a Jacobi triple, or a
/// numerical check).  Symbolic entries carry the printed residual; numerical
/// entries carry residual_norm/tolerance.  Entries with counted == false are
/// listed for completeness but do not affect the exit status of the run that
/// produced them (numerical-only records in a symbolic run).
struct ReportEntry {
    std::string id;
    std::string instance;
    Status status = Status::Pass;
    bool counted = true;
    std::string residual;        // symbolic residual, canonical form ("" = none)
    double residual_norm = -1.;  // numeric residual (negative = not applicable)
    double tolerance = -1.;
    size_t steps = 0;
    std::string note;
};

struct Report {
    std::vector<ReportEntry> entries;
    std::vector<std::pair<std::string, std::string>> config;

    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    void merge(const Report& o);
    /// Deterministic order: by (id, instance); aggregation is order-independent.
    void sort_entries();

    size_t passed() const;
    size_t failed() const;
    size_t inconclusive() const;
    bool all_pass() const { return failed() == 0 && inconclusive() == 0; }

    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace opalg

#endif
