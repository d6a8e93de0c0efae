#include "spinecensus/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "spinecensus/census.hpp"
#include "spinecensus/errors.hpp"
#include "spinecensus/io.hpp"
#include "spinecensus/parallel.hpp"
#include "spinecensus/reduction.hpp"
#include "spinecensus/triangulation.hpp"

namespace spinecensus::cli {

namespace {

using io::Json;

std::string read_input(const std::string& path) {
    if (path.empty()) throw ValidationError("this command needs --input");
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string extension(const std::string& format) {
    if (format == "csv") return ".csv";
    if (format == "text") return ".txt";
    return ".jsonl";
}

// Writes to --out, or to $SPINECENSUS_OUT_DIR/<command><ext>, or to `out`.
void emit(const RunConfig& config, const std::string& payload, std::ostream& out) {
    std::string path = config.output;
    if (path.empty()) {
        if (const char* dir = std::getenv(kOutDirVariable); dir && *dir) {
            path = (std::filesystem::path(dir) / (config.command + extension(config.format))).string();
        }
    }
    if (path.empty() || path == "-") {
        out << payload;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ValidationError("cannot write " + path);
    file << payload;
}

std::vector<RegularGraph> graphs_of_class(const RunConfig& config) {
    if (config.graph_class == "A") return enumerate_A(config.n, config.limits);
    if (config.graph_class == "C") return enumerate_C(config.n, config.limits);
    throw ValidationError("graph class must be A or C");
}

// --input graph record, or --class/--n/--index.
std::vector<RegularGraph> selected_graphs(const RunConfig& config) {
    if (!config.input.empty()) return {io::graph_from_json(io::parse(read_input(config.input)))};
    auto all = graphs_of_class(config);
    if (config.index < 0) return all;
    if (config.index >= static_cast<int>(all.size())) throw ValidationError("--index out of range");
    return {all[config.index]};
}

ReductionOptions reduction_options(const RunConfig& config) {
    ReductionOptions options;
    options.bfs_depth = config.bfs_depth;
    options.decoration_budget = config.budget;
    return options;
}

int cmd_graphs(const RunConfig& config, std::ostream& out) {
    const auto graphs = graphs_of_class(config);
    std::ostringstream payload;
    if (config.format == "text") {
        payload << "class " << config.graph_class << ", n = " << config.n << ": " << graphs.size()
                << " isomorphism classes\n";
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            payload << i << ' ' << canonical_form(graphs[i]).hex() << '\n';
        }
    } else if (config.format == "csv") {
        payload << "index,n,canonical_code\n";
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            payload << i << ',' << config.n << ',' << canonical_form(graphs[i]).hex() << '\n';
        }
    } else {
        for (const auto& g : graphs) payload << io::to_json(g).dump() << '\n';
    }
    emit(config, payload.str(), out);
    return kExitOk;
}

int cmd_spines(const RunConfig& config, std::ostream& out) {
    const auto graphs = selected_graphs(config);
    if (graphs.size() != 1) throw ValidationError("spines needs a single graph (--input or --index)");
    const auto& g = graphs.front();
    std::ostringstream payload;
    std::map<int, std::uint64_t> histogram;
    auto record = [&](const std::vector<int>& chirality, const std::vector<int>& gluing, int cells) {
        ++histogram[cells];
        if (config.format == "json") {
            payload << Json{{"chirality", chirality}, {"gluing", gluing}, {"cells", cells}}.dump() << '\n';
        }
    };
    if (config.samples > 0) {
        std::mt19937_64 rng(config.seed);
        std::vector<int> chirality(g.vertex_count());
        std::vector<int> gluing(g.edge_count());
        for (std::size_t i = 0; i < config.samples; ++i) {
            for (auto& c : chirality) c = rng() % 2 ? -1 : 1;
            for (auto& x : gluing) x = static_cast<int>(rng() % 3);
            record(chirality, gluing, count_cells(Spine::build(g, chirality, gluing)));
        }
    } else {
        for_each_decoration(g, config.budget, record);
    }
    if (config.format != "json") {
        const bool csv = config.format == "csv";
        payload << (csv ? "cells,decorations\n" : "cell count histogram\n");
        for (auto [cells, count] : histogram) payload << cells << (csv ? "," : " ") << count << '\n';
    }
    emit(config, payload.str(), out);
    return kExitOk;
}

int cmd_minimize(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto graphs = selected_graphs(config);
    const auto options = reduction_options(config);
    struct Outcome {
        std::string line;
        bool anomaly;
    };
    auto outcomes = parallel_map(config.jobs, graphs.size(), [&](std::size_t i) -> Outcome {
        const auto& g = graphs[i];
        try {
            auto result = minimize_cells(g, options);
            Json j{{"graph", io::to_json(g)},
                   {"spine", io::to_json(result.spine)},
                   {"cells", result.cell_count},
                   {"trace", io::to_json(result.trace)}};
            return {j.dump(), false};
        } catch (const ReductionFailure& e) {
            return {io::to_json(Anomaly{"ReductionFailure", e.what(), g, std::nullopt}).dump(), true};
        }
    });
    std::ostringstream payload;
    int status = kExitOk;
    for (const auto& o : outcomes) {
        if (o.anomaly) {
            err << o.line << '\n';
            status = kExitAnomaly;
        } else if (config.format == "text") {
            payload << Json::parse(o.line).at("cells") << '\n';
        } else {
            payload << o.line << '\n';
        }
    }
    emit(config, payload.str(), out);
    return status;
}

int cmd_census(const RunConfig& config, std::ostream& out, std::ostream& err) {
    CensusOptions options;
    options.limits = config.limits;
    options.reduction = reduction_options(config);
    options.jobs = config.jobs;
    const auto result = census_one_cell(config.n, options);
    std::ostringstream payload;
    if (config.format == "text") {
        payload << "one-cell spines on n = " << result.n << " vertices from " << result.source_graphs
                << " graphs of A_" << result.n - 1 << ": " << result.records.size() << " distinct spines, "
                << result.anomalies.size() << " anomalies\n"
                << "(counts combinatorial spines; manifolds are not deduplicated)\n";
    } else {
        for (const auto& r : result.records) payload << io::to_json(r).dump() << '\n';
    }
    emit(config, payload.str(), out);
    for (const auto& a : result.anomalies) err << io::to_json(a).dump() << '\n';
    return result.anomalies.empty() ? kExitOk : kExitAnomaly;
}

int cmd_bounds(const RunConfig& config, std::ostream& out) {
    BoundsOptions options;
    options.limits = config.limits;
    options.jobs = config.jobs;
    const auto rows = bounds_table(config.n_from, config.n_to, options);
    std::ostringstream payload;
    if (config.format == "csv") {
        payload << io::bounds_csv(rows);
    } else if (config.format == "text") {
        char line[160];
        payload << "    n     lower   upper(thm)  upper(intro)  route\n";
        for (const auto& r : rows) {
            std::snprintf(line, sizeof line, "%5d %9s %12s %13.4f  %s%s\n", r.n,
                          r.lower_ln_Mn ? std::to_string(*r.lower_ln_Mn).c_str() : "-",
                          r.upper_ln_Mn_theorem ? std::to_string(*r.upper_ln_Mn_theorem).c_str() : "-",
                          r.upper_ln_Mn_intro, r.upper_route.c_str(),
                          r.lower_estimated || r.upper_estimated ? " (estimated)" : "");
            payload << line;
        }
    } else {
        Json rows_json = Json::array();
        for (const auto& r : rows) rows_json.push_back(io::to_json(r));
        payload << Json{{"schema_version", io::kSchemaVersion},
                        {"note", "A_n = connected simple 4-regular graphs up to isomorphism"},
                        {"rows", rows_json}}
                       .dump()
                << '\n';
    }
    emit(config, payload.str(), out);
    return kExitOk;
}

int cmd_verify_lemmas(const RunConfig& config, std::ostream& out) {
    std::vector<RegularGraph> graphs;
    for (int n = 1; n <= config.max_n; ++n) {
        auto level = enumerate_C(n, config.limits);
        graphs.insert(graphs.end(), level.begin(), level.end());
    }
    auto sweeps = parallel_map(config.jobs, graphs.size(),
                               [&](std::size_t i) { return sweep_lemmas(graphs[i], config.budget); });
    Json report = Json::array();
    std::uint64_t violations = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& s = sweeps[i];
        violations += s.violations();
        report.push_back({{"n", graphs[i].vertex_count()},
                          {"graph_code", canonical_form(graphs[i]).hex()},
                          {"min_cells", s.min_cells},
                          {"decorations", s.decorations},
                          {"minimal_decorations", s.minimal_decorations},
                          {"three_cell_edge", s.three_cell_edge},
                          {"antiparallel_arcs", s.antiparallel_arcs},
                          {"crowded_vertex", s.crowded_vertex},
                          {"negative_control", s.negative_control ? io::to_json(*s.negative_control) : Json(nullptr)}});
    }
    std::ostringstream payload;
    if (config.format == "text") {
        payload << "checked " << graphs.size() << " graphs with n <= " << config.max_n << ": " << violations
                << " violations\n";
    } else {
        payload << Json{{"schema_version", io::kSchemaVersion},
                        {"max_n", config.max_n},
                        {"graphs", report},
                        {"violations", violations}}
                       .dump()
                << '\n';
    }
    emit(config, payload.str(), out);
    return violations == 0 ? kExitOk : kExitAnomaly;
}

int cmd_export_tri(const RunConfig& config, std::ostream& out) {
    const Spine s = io::spine_from_json(io::parse(read_input(config.input)));
    emit(config, io::to_json(to_triangulation(s)).dump() + "\n", out);
    return kExitOk;
}

int cmd_import_tri(const RunConfig& config, std::ostream& out) {
    const auto table = io::table_from_json(io::parse(read_input(config.input)));
    const Spine s = from_triangulation(table);
    Json j{{"spine", io::to_json(s)}, {"cells", count_cells(s)}, {"edge_classes", count_edge_classes(table)}};
    emit(config, j.dump() + "\n", out);
    return kExitOk;
}

int cmd_bollobas(const RunConfig& config, std::ostream& out) {
    std::ostringstream payload;
    const bool csv = config.format == "csv";
    if (csv) payload << "r,n,ln_estimate,ln_exact,residual,stirling_residual\n";
    for (int n = config.n_from; n <= config.n_to; ++n) {
        if ((config.r * n) % 2 != 0) continue;
        const double estimate = bollobas_ln_estimate(config.r, n);
        std::optional<double> exact;
        if (config.r * n <= 200) exact = bollobas_ln_exact(config.r, n);
        std::optional<double> residual, stirling;
        if (config.r == 4) {
            residual = asymptotic_residual(n);
            stirling = stirling_residual(n);
        }
        if (csv) {
            auto field = [](const std::optional<double>& v) {
                if (!v) return std::string();
                char b[32];
                std::snprintf(b, sizeof b, "%.12g", *v);
                return std::string(b);
            };
            payload << config.r << ',' << n << ',' << field(estimate) << ',' << field(exact) << ','
                    << field(residual) << ',' << field(stirling) << '\n';
        } else {
            Json j{{"r", config.r}, {"n", n}, {"ln_estimate", estimate}};
            j["ln_exact"] = exact ? Json(*exact) : Json(nullptr);
            j["residual"] = residual ? Json(*residual) : Json(nullptr);
            j["stirling_residual"] = stirling ? Json(*stirling) : Json(nullptr);
            payload << j.dump() << '\n';
        }
    }
    emit(config, payload.str(), out);
    return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.jobs < 1 || config.bfs_depth < 1 || config.budget == 0 || config.limits.simple_max_n < 1 ||
            config.limits.multigraph_max_n < 1) {
            throw ValidationError("limits and parallelism must be positive");
        }
        if (config.n_to < config.n_from) throw ValidationError("range is empty");
        if (config.format != "json" && config.format != "csv" && config.format != "text") {
            throw ValidationError("format must be json, csv or text");
        }
        const auto& c = config.command;
        if (c == "graphs") return cmd_graphs(config, out);
        if (c == "spines") return cmd_spines(config, out);
        if (c == "minimize") return cmd_minimize(config, out, err);
        if (c == "census") return cmd_census(config, out, err);
        if (c == "bounds") return cmd_bounds(config, out);
        if (c == "verify-lemmas") return cmd_verify_lemmas(config, out);
        if (c == "export-tri") return cmd_export_tri(config, out);
        if (c == "import-tri") return cmd_import_tri(config, out);
        if (c == "bollobas") return cmd_bollobas(config, out);
        throw ValidationError("unknown command '" + c + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Census of oriented special spines over 4-regular graphs"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", config.output, "output file (default: stdout or $SPINECENSUS_OUT_DIR)");
        sub->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--a-limit", config.limits.simple_max_n, "largest n enumerated for A_n")->check(CLI::PositiveNumber);
        sub->add_option("--c-limit", config.limits.multigraph_max_n, "largest n enumerated for C_n")->check(CLI::PositiveNumber);
        sub->add_option("--budget", config.budget, "decoration sweep budget")->check(CLI::PositiveNumber);
        sub->add_option("--bfs-depth", config.bfs_depth, "rotation search depth")->check(CLI::PositiveNumber);
        sub->add_option("--seed", config.seed, "seed for sampling");
    };
    auto graph_choice = [&](CLI::App* sub) {
        sub->add_option("--class", config.graph_class, "A (simple) or C (multigraphs)")->check(CLI::IsMember({"A", "C"}));
        sub->add_option("--n", config.n, "vertex count")->check(CLI::PositiveNumber);
    };

    auto* graphs = app.add_subcommand("graphs", "enumerate A_n or C_n");
    graph_choice(graphs);
    common(graphs);

    auto* spines = app.add_subcommand("spines", "cell counts of the decorations of one graph");
    graph_choice(spines);
    spines->add_option("--index", config.index, "graph index within the class");
    spines->add_option("--input", config.input, "graph record file ('-' for stdin)");
    spines->add_option("--samples", config.samples, "sample this many random decorations instead");
    common(spines);

    auto* minimize = app.add_subcommand("minimize", "reduce spines to at most two cells, with traces");
    graph_choice(minimize);
    minimize->add_option("--index", config.index, "graph index within the class");
    minimize->add_option("--input", config.input, "graph record file ('-' for stdin)");
    common(minimize);

    auto* census = app.add_subcommand("census", "one-cell spines on n vertices");
    census->add_option("--n", config.n, "vertex count of the census spines")->required()->check(CLI::PositiveNumber);
    common(census);

    auto* bounds = app.add_subcommand("bounds", "table of bounds on ln|M_n|");
    bounds->add_option("--from", config.n_from, "first n")->check(CLI::PositiveNumber);
    bounds->add_option("--to", config.n_to, "last n")->check(CLI::PositiveNumber);
    common(bounds);

    auto* verify = app.add_subcommand("verify-lemmas", "check minimal spines of small multigraphs");
    verify->add_option("--max-n", config.max_n, "largest vertex count")->check(CLI::PositiveNumber);
    common(verify);

    auto* export_tri = app.add_subcommand("export-tri", "spine record to gluing table");
    export_tri->add_option("--input", config.input, "spine record file ('-' for stdin)")->required();
    common(export_tri);

    auto* import_tri = app.add_subcommand("import-tri", "gluing table to spine record");
    import_tri->add_option("--input", config.input, "gluing table file ('-' for stdin)")->required();
    common(import_tri);

    auto* bollobas = app.add_subcommand("bollobas", "regular graph counting formula and residuals");
    bollobas->add_option("--r", config.r, "degree")->check(CLI::PositiveNumber);
    bollobas->add_option("--from", config.n_from, "first n")->check(CLI::PositiveNumber);
    bollobas->add_option("--to", config.n_to, "last n")->check(CLI::PositiveNumber);
    common(bollobas);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kExitError;
    }
    for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
    if (config.command == "census" || config.command == "graphs") {
        // n_from/n_to are unused
        config.n_from = config.n_to = 1;
    }
    return run(config, out, err);
}

} // namespace spinecensus::cli
