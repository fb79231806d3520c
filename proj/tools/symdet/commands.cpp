#include "commands.hpp"

#include <CLI11.hpp>

#include "symdet/parallel.hpp"

namespace symdet::cli {

Partition parse_shape_arg(const std::string& text) {
    try {
        Partition p = parse_partition(text);
        if (p.n() < 1) throw UsageError("partition must have positive size");
        return p;
    } catch (const std::invalid_argument& e) {
        throw UsageError("bad partition '" + text + "': " + e.what());
    }
}

Format parse_format(const std::string& text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "latex") return Format::latex;
    throw UsageError("unknown format '" + text + "'");
}

int cmd_sym(const std::string& shape, Format format, unsigned jobs, std::ostream& out) {
    const Partition p = parse_shape_arg(shape);
    if (p.n() > kTableLimit) throw UsageError("beyond supported degree");
    out << render_sym(symmetrization_determinant(p, jobs), format);
    return kExitOk;
}

int cmd_table(int n_max, Format format, unsigned jobs, std::ostream& out) {
    if (n_max > kTableLimit) throw UsageError("beyond supported degree");
    if (n_max < 2) throw UsageError("table needs n >= 2");
    std::vector<SymDetResult> rows;
    for (int n = 2; n <= n_max; ++n)
        for (const auto& p : partitions_of(n)) rows.push_back(symmetrization_determinant(p, jobs));
    out << render_table(rows, format);
    return kExitOk;
}

int cmd_refined(const std::string& shape, Format format, unsigned jobs, std::ostream& out) {
    const Partition p = parse_shape_arg(shape);
    if (p.n() > kRefinedLimit) throw UsageError("beyond supported degree");
    out << render_refined(refined_decomposition(p, jobs), format);
    return kExitOk;
}

int cmd_verify(const std::string& scope, const std::string& golden_path, Format format, unsigned jobs, std::ostream& out) {
    if (scope != "sym" && scope != "refined" && scope != "all") throw UsageError("unknown scope '" + scope + "'");
    GoldenTables loaded;
    if (!golden_path.empty()) {
        try {
            loaded = load_golden_file(golden_path);
        } catch (const std::runtime_error& e) {
            throw UsageError(e.what());
        }
    }
    const GoldenTables& golden = golden_path.empty() ? embedded_golden() : loaded;
    std::vector<VerifyReport> reports;
    if (scope != "refined") reports.push_back(verify_sym(golden, jobs));
    if (scope != "sym") reports.push_back(verify_refined(golden, jobs));
    out << render_reports(reports, format);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return ok ? kExitOk : kExitMismatch;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Determinants of tensor symmetrizations of bilinear forms", "symdet"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    unsigned jobs = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--jobs", jobs, "Worker threads (0: all cores)");

    std::string shape;
    auto* sym = app.add_subcommand("sym", "Determinant of one symmetrization");
    sym->add_option("lambda", shape, "Partition, e.g. 3,1,1 or 3,1^2")->required();

    int n_max = 0;
    auto* table = app.add_subcommand("table", "Table for all partitions of 2..n");
    table->add_option("--n", n_max, "Largest degree")->required();

    auto* refined = app.add_subcommand("refined", "Refined orthogonal constituents");
    refined->add_option("lambda", shape, "Partition")->required();

    std::string scope = "all", golden;
    auto* verify = app.add_subcommand("verify", "Recompute and compare against golden tables");
    verify->add_option("--scope", scope, "sym, refined or all")->check(CLI::IsMember({"sym", "refined", "all"}));
    verify->add_option("--golden", golden, "Golden JSON file (default: embedded)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        const Format f = parse_format(format);
        const unsigned j = resolve_jobs(jobs);
        if (*sym) return cmd_sym(shape, f, j, out);
        if (*table) return cmd_table(n_max, f, j, out);
        if (*refined) return cmd_refined(shape, f, j, out);
        return cmd_verify(scope, golden, f, j, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace symdet::cli
