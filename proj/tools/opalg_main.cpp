#include "CLI11.hpp"

#include "opalg/catalog.hpp"
#include "opalg/numeric_suite.hpp"
#include "opalg/parser.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace opalg;

int env_or(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return v ? std::atoi(v) : fallback;
}

std::uint64_t env_or_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    return v ? std::strtoull(v, nullptr, 10) : fallback;
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(Error::Kind::RejectedInput, "cannot open output file " + path);
    os << text;
}

int emit_report(Report& rep, const std::string& format, const std::string& out) {
    rep.sort_entries();
    write_or_print(format == "json" ? rep.to_json() : rep.to_text(), out);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator-algebra verification laboratory"};
    app.require_subcommand(1);

    std::string format = "text", out_path, algebra_name, tag, record_id, expr_a, expr_b;
    bool verify_all_flag = false;

    // defaults for the numerical suite; environment overrides, flags win
    fock::NumericConfig cfg;
    cfg.dim = env_or("OPALG_DIM", cfg.dim);
    cfg.nmax = env_or("OPALG_PHOTONS", cfg.nmax);
    cfg.grid_m = env_or("OPALG_GRID", cfg.grid_m);
    cfg.seed = env_or_u64("OPALG_SEED", cfg.seed);

    auto* verify = app.add_subcommand("verify", "run the symbolic identity catalog");
    verify->add_flag("--all", verify_all_flag, "run every record");
    verify->add_option("--id", record_id, "run a single record by id");
    verify->add_option("--algebra", algebra_name, "restrict to one algebra");
    verify->add_option("--tag", tag, "restrict to one tag");
    verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to a file");

    auto* comm = app.add_subcommand("comm", "bracket of two expressions");
    comm->add_option("exprA", expr_a, "first expression")->required();
    comm->add_option("exprB", expr_b, "second expression")->required();
    comm->add_option("--algebra", algebra_name, "algebra name")->required();

    auto* norm = app.add_subcommand("normalize", "canonical form of an expression");
    norm->add_option("expr", expr_a, "expression")->required();
    norm->add_option("--algebra", algebra_name, "algebra name")->required();

    auto* repcheck = app.add_subcommand("repcheck", "run the numerical suite");
    repcheck->add_option("--dim", cfg.dim, "single-particle truncation size");
    repcheck->add_option("--photons", cfg.nmax, "maximum photon number");
    repcheck->add_option("--grid", cfg.grid_m, "frequency-grid size");
    repcheck->add_option("--seed", cfg.seed, "random seed");
    repcheck->add_option("--hbar", cfg.hbar, "value of hbar in numerics");
    repcheck->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    repcheck->add_option("--out", out_path, "write the report to a file");

    auto* report_cmd = app.add_subcommand("report", "full symbolic + numerical report");
    report_cmd->add_option("--out", out_path, "output path")->required();
    report_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    report_cmd->add_option("--dim", cfg.dim, "single-particle truncation size");
    report_cmd->add_option("--photons", cfg.nmax, "maximum photon number");
    report_cmd->add_option("--grid", cfg.grid_m, "frequency-grid size");
    report_cmd->add_option("--seed", cfg.seed, "random seed");
    report_cmd->add_option("--hbar", cfg.hbar, "value of hbar in numerics");

    auto* algebra_cmd = app.add_subcommand("algebra", "export or check an algebra file");
    std::string check_path;
    algebra_cmd->add_option("--name", algebra_name, "shipped algebra name");
    algebra_cmd->add_option("--out", out_path, "output path (default stdout)");
    algebra_cmd->add_option("--roundtrip", check_path, "parse a file and re-serialize it");

    auto* catalog_cmd = app.add_subcommand("catalog", "export the identity catalog");
    catalog_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (!verify_all_flag && record_id.empty() && algebra_name.empty() && tag.empty())
                throw Error(Error::Kind::RejectedInput,
                            "verify needs --all, --id, --algebra or --tag");
            AlgebraSet algebras = AlgebraSet::shipped();
            CatalogFilter filter{algebra_name, tag, record_id};
            if (!record_id.empty()) {
                bool known = false;
                for (const auto& rec : build_catalog(algebras)) known |= rec.id == record_id;
                if (!known)
                    throw Error(Error::Kind::RejectedInput, "unknown record id '" + record_id + "'");
            }
            Report rep = verify_catalog(algebras, filter);
            return emit_report(rep, format, out_path);
        }
        if (comm->parsed() || norm->parsed()) {
            auto alg = make_algebra(algebra_name);
            Expr result;
            if (comm->parsed()) {
                Expr a = expand_derived(parse_expr(expr_a, *alg), *alg);
                Expr b = expand_derived(parse_expr(expr_b, *alg), *alg);
                result = normalize(commutator(a, b, *alg), *alg);
            } else {
                result = normalize(expand_derived(parse_expr(expr_a, *alg), *alg), *alg);
            }
            std::cout << print_expr(result, *alg) << "\n";
            return 0;
        }
        if (repcheck->parsed()) {
            Report rep = fock::run_numeric_suite(cfg);
            return emit_report(rep, format, out_path);
        }
        if (report_cmd->parsed()) {
            AlgebraSet algebras = AlgebraSet::shipped();
            Report rep = verify_catalog(algebras);
            Report num = fock::run_numeric_suite(cfg);
            rep.merge(num);
            return emit_report(rep, format, out_path);
        }
        if (algebra_cmd->parsed()) {
            if (!check_path.empty()) {
                std::ifstream is(check_path, std::ios::binary);
                if (!is) throw Error(Error::Kind::RejectedInput, "cannot read " + check_path);
                std::string text((std::istreambuf_iterator<char>(is)),
                                 std::istreambuf_iterator<char>());
                auto alg = parse_algebra_file(text);
                write_or_print(serialize_algebra(*alg), out_path);
                return 0;
            }
            if (algebra_name.empty())
                throw Error(Error::Kind::RejectedInput, "algebra needs --name or --roundtrip");
            write_or_print(serialize_algebra(*make_algebra(algebra_name)), out_path);
            return 0;
        }
        if (catalog_cmd->parsed()) {
            AlgebraSet algebras = AlgebraSet::shipped();
            write_or_print(serialize_catalog(build_catalog(algebras)), out_path);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
