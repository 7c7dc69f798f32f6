#pragma once

#include "glts/catalog.hpp"
#include "glts/checker.hpp"
#include "glts/dsl.hpp"
#include "glts/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace glts::cli {

enum ExitCode : int { kHolds = 0, kViolation = 1, kError = 2 };

/// Parsed `check` invocation.
struct RunConfig {
    std::string algebra;
    std::vector<std::string> identities;
    std::optional<std::string> dsl_file;
    bool json = false;
    bool exhaustive = false;
    unsigned workers = 1;
};

inline int cmd_list(bool json, std::ostream& out) {
    if (json) {
        auto arr = nlohmann::json::array();
        for (const auto& b : builtin_identities()) {
            arr.push_back({{"id", b.id}, {"arity", b.arity()}, {"paper_ref", b.formula}});
        }
        out << arr.dump(2) << "\n";
        return kHolds;
    }
    out << "Algebras:\n";
    for (const auto& name : builtin_names()) out << "  " << name << "\n";
    out << "Identities:\n";
    std::size_t width = 0;
    for (const auto& b : builtin_identities()) width = std::max(width, b.id.size());
    for (const auto& b : builtin_identities()) {
        out << "  " << b.id << std::string(width - b.id.size() + 2, ' ') << "arity " << b.arity() << "  "
            << b.formula << (b.in_all ? "" : "  (not in 'all')") << "\n";
    }
    return kHolds;
}

inline int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.workers == 0) {
        err << "error: --workers must be >= 1\n";
        return kError;
    }
    std::optional<Algebra> algebra;
    try {
        algebra = resolve_algebra(config.algebra);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }

    // Builtins in canonical order, then DSL identities in file order.
    std::vector<const BuiltinIdentity*> builtins;
    bool want_all = config.identities.empty() && !config.dsl_file;
    for (const auto& id : config.identities) {
        if (id == "all") {
            want_all = true;
            continue;
        }
        try {
            (void)find_builtin(id);
        } catch (const UnknownName& e) {
            err << "error: " << e.what() << "\n";
            return kError;
        }
    }
    for (const auto& b : builtin_identities()) {
        const bool named = std::find(config.identities.begin(), config.identities.end(), b.id) !=
                           config.identities.end();
        if (named || (want_all && b.in_all)) builtins.push_back(&b);
    }

    std::vector<dsl::FileIdentity> custom;
    if (config.dsl_file) {
        std::ifstream in(*config.dsl_file);
        if (!in) {
            err << "error: " << *config.dsl_file << ": cannot open file\n";
            return kError;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            custom = dsl::parse_identity_file(buffer.str());
        } catch (const dsl::ParseError& e) {
            err << "error: " << *config.dsl_file << ":" << e.what() << "\n";
            return kError;
        }
    }
    if (builtins.empty() && custom.empty()) {
        err << "error: no identities selected\n";
        return kError;
    }

    const CheckOptions options{config.exhaustive, config.workers};
    std::vector<CheckReport> reports;
    try {
        for (const auto* b : builtins) reports.push_back(check_builtin(*algebra, *b, options));
        for (const auto& c : custom) reports.push_back(dsl::check_identity(*algebra, c.ast, options));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }

    const bool ok = all_hold(reports);
    if (config.json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) out << format_report(r, algebra->basis());
        const auto held = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
        out << held << " of " << reports.size() << " identities hold on " << algebra->name() << "\n";
    }
    return ok ? kHolds : kViolation;
}

inline int cmd_table(const std::string& source, bool ternary, bool json, std::ostream& out, std::ostream& err) {
    std::optional<Algebra> algebra;
    try {
        algebra = resolve_algebra(source);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    const Algebra& a = *algebra;
    const std::size_t n = a.dim();
    auto entries = nlohmann::json::array();
    auto emit = [&](std::vector<std::size_t> idx, const Vector& value) {
        if (json) {
            auto labels = nlohmann::json::array();
            for (auto k : idx) labels.push_back(a.label(k));
            entries.push_back({{"indices", idx}, {"args", labels}, {"value", to_json(value)}});
            return;
        }
        out << "[";
        for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? "," : "") << a.label(idx[k]);
        out << "] = " << format_vector(value, a.basis()) << "\n";
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (ternary) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    emit({i, j, k}, yamaguti(a, Vector::basis(n, i), Vector::basis(n, j), Vector::basis(n, k)));
                }
            }
        } else {
            for (std::size_t j = i + 1; j < n; ++j) emit({i, j}, a.structure(i, j));
        }
    }
    if (json) {
        nlohmann::json doc{{"algebra", a.name()},
                           {"basis", a.basis()},
                           {"kind", ternary ? "ternary" : "binary"},
                           {"entries", std::move(entries)}};
        out << doc.dump(2) << "\n";
    }
    return kHolds;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Mal'tsev algebra and general Lie triple system identities", "glts"};
    app.require_subcommand(0, 1);

    bool list_json = false;
    auto* list = app.add_subcommand("list", "List builtin algebras and identities");
    list->add_flag("--json", list_json, "Emit JSON");

    RunConfig config;
    auto* check = app.add_subcommand("check", "Check identities on an algebra");
    check->add_option("algebra", config.algebra, "Builtin name or path to a .alg.json file")->required();
    check->add_option("--identity", config.identities, "Builtin identity id, or 'all'");
    check->add_option("--dsl", config.dsl_file, "File with one identity per line");
    check->add_flag("--json", config.json, "Emit a JSON report");
    check->add_flag("--exhaustive", config.exhaustive, "Count all violations instead of stopping at the first");
    check->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);

    std::string table_source;
    bool ternary = false;
    bool table_json = false;
    auto* table = app.add_subcommand("table", "Print the bracket table of an algebra");
    table->add_option("algebra", table_source, "Builtin name or path to a .alg.json file")->required();
    table->add_flag("--ternary", ternary, "Print the ternary brackets [e_i,e_j,e_k]");
    table->add_flag("--json", table_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }

    if (check->parsed()) return cmd_check(config, out, err);
    if (table->parsed()) return cmd_table(table_source, ternary, table_json, out, err);
    return cmd_list(list_json, out);
}

}  // namespace glts::cli
