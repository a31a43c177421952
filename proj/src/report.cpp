#include "opalg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace opalg {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

void Report::merge(const Report& o) {
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
    config.insert(config.end(), o.config.begin(), o.config.end());
}

void Report::sort_entries() {
    std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.instance < b.instance;
    });
}

size_t Report::passed() const {
    size_t n = 0;
    for (const auto& e : entries) n += (e.counted && e.status == Status::Pass);
    return n;
}
size_t Report::failed() const {
    size_t n = 0;
    for (const auto& e : entries) n += (e.counted && e.status == Status::Fail);
    return n;
}
size_t Report::inconclusive() const {
    size_t n = 0;
    for (const auto& e : entries) n += (e.counted && e.status == Status::Inconclusive);
    return n;
}

namespace {
std::string fmt_norm(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}
}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : config) os << "# " << k << " = " << v << "\n";
    for (const auto& e : entries) {
        os << "[" << status_name(e.status) << "] " << e.id;
        if (!e.instance.empty()) os << " :: " << e.instance;
        if (!e.residual.empty()) os << "  residual = " << e.residual;
        if (e.residual_norm >= 0) {
            os << "  residual_norm = " << fmt_norm(e.residual_norm);
            if (e.tolerance >= 0) os << " (tol " << fmt_norm(e.tolerance) << ")";
        }
        if (e.steps > 0) os << "  steps = " << e.steps;
        if (!e.note.empty()) os << "  -- " << e.note;
        os << "\n";
    }
    os << "summary: " << passed() << " passed, " << failed() << " failed, " << inconclusive()
       << " inconclusive";
    size_t listed = 0;
    for (const auto& e : entries) listed += !e.counted;
    if (listed > 0) os << " (" << listed << " listed, not counted)";
    os << "\n";
    os << "exit: " << (all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["config"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) j["config"][k] = v;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["instance"] = e.instance;
        je["status"] = status_name(e.status);
        je["counted"] = e.counted;
        if (!e.residual.empty()) je["residual"] = e.residual;
        if (e.residual_norm >= 0) je["residual_norm"] = fmt_norm(e.residual_norm);
        if (e.tolerance >= 0) je["tolerance"] = fmt_norm(e.tolerance);
        if (e.steps > 0) je["steps"] = e.steps;
        if (!e.note.empty()) je["note"] = e.note;
        j["entries"].push_back(je);
    }
    j["summary"] = {{"passed", passed()},
                    {"failed", failed()},
                    {"inconclusive", inconclusive()},
                    {"exit", all_pass() ? "PASS" : "FAIL"}};
    return j.dump(2) + "\n";
}

}  // namespace opalg
