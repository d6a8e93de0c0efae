// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "spinecensus/census.hpp"
#include "spinecensus/cli.hpp"
#include "spinecensus/errors.hpp"
#include "spinecensus/reduction.hpp"
#include "spinecensus/triangulation.hpp"
#include "support.hpp"

using namespace spinecensus;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail,
            std::chrono::steady_clock::time_point started) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("criterion %d %-28s %s  %s (%.1fs)\n", id, name, ok ? "PASS" : "FAIL", detail.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::vector<RegularGraph> graphs_up_to(int max_n) {
    auto pool = testing::small_multigraphs(std::min(max_n, 6));
    for (int n = 5; n <= max_n; ++n)
        for (auto& g : enumerate_A(n)) pool.push_back(g);
    return pool;
}

// Counts trace failures of conservation; returns cell count or -1.
long conservation_checks = 0;
long conservation_failures = 0;
int traced_cells(const Spine& s) {
    auto d = trace_cells(s);
    std::size_t total = 0;
    for (auto& cell : d.cells) total += cell.size();
    ++conservation_checks;
    if (total != static_cast<std::size_t>(6 * s.vertex_count()) || d.directed_orbits != 2 * d.cell_count())
        ++conservation_failures;
    return d.cell_count();
}

void rotation_cyclicity() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    auto pool = graphs_up_to(6);
    long checks = 0, bad = 0;
    for (int i = 0; i < 1000; ++i) {
        auto s = testing::random_spine(pool[rng() % pool.size()], rng);
        traced_cells(s);
        for (int e = 0; e < s.edge_count(); ++e) {
            ++checks;
            if (!(rotate_edge(rotate_edge(rotate_edge(s, e), e), e) == s)) ++bad;
        }
    }
    report(1, "rotation cyclicity", bad == 0,
           std::to_string(checks) + " edge checks over 1000 spines, " + std::to_string(bad) + " mismatches", t0);
}

void dual_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    long exhaustive = 0, sampled = 0, bad = 0;
    for (auto& g : testing::small_multigraphs(2)) {
        for_each_decoration(g, kDefaultDecorationBudget, [&](const std::vector<int>& c, const std::vector<int>& x, int) {
            auto s = build_spine(g, c, x);
            ++exhaustive;
            if (traced_cells(s) != count_edge_classes(to_triangulation(s))) ++bad;
        });
    }
    std::mt19937_64 rng(3003);
    auto pool = graphs_up_to(8);
    for (int i = 0; i < 10000; ++i) {
        auto s = testing::random_spine(pool[rng() % pool.size()], rng);
        ++sampled;
        if (traced_cells(s) != count_edge_classes(to_triangulation(s))) ++bad;
    }
    report(3, "dual-oracle equivalence", bad == 0,
           std::to_string(exhaustive) + " exhaustive + " + std::to_string(sampled) + " random spines, " +
               std::to_string(bad) + " mismatches",
           t0);
}

void corollary() {
    auto t0 = std::chrono::steady_clock::now();
    int graphs = 0, worst = 0, failures_seen = 0;
    for (int n = 5; n <= 7; ++n) {
        for (auto& g : enumerate_A(n)) {
            ++graphs;
            try {
                worst = std::max(worst, minimize_cells(g).cell_count);
            } catch (const ReductionFailure&) {
                ++failures_seen;
            }
        }
    }
    report(4, "at most two cells", worst <= 2 && failures_seen == 0,
           std::to_string(graphs) + " graphs, worst " + std::to_string(worst) + " cells, " +
               std::to_string(failures_seen) + " ReductionFailure",
           t0);
}

void lemma_sweep() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t minimal = 0, violations = 0;
    int graphs = 0;
    for (auto& g : testing::small_multigraphs(3)) {
        auto sweep = sweep_lemmas(g);
        ++graphs;
        minimal += sweep.minimal_decorations;
        violations += sweep.violations();
    }
    report(5, "lemma sweep", violations == 0,
           std::to_string(graphs) + " graphs, " + std::to_string(minimal) + " minimal decorations, " +
               std::to_string(violations) + " violations",
           t0);
}

void lower_bound_census() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 6; n <= 8; ++n) {
        const std::size_t reference = oracle::count_simple(n - 1);
        auto result = census_one_cell(n);
        bool one_cell = true;
        for (auto& r : result.records) one_cell &= count_cells(r.spine) == 1 && r.spine.vertex_count() == n;
        const bool row_ok = result.anomalies.empty() && result.source_graphs == reference &&
                            result.records.size() >= reference && one_cell;
        ok &= row_ok;
        detail += "n=" + std::to_string(n) + ": " + std::to_string(result.records.size()) + " >= |A_" +
                  std::to_string(n - 1) + "|=" + std::to_string(reference) + (row_ok ? "" : " (bad)") + "; ";
    }
    report(6, "one-cell census", ok, detail, t0);
}

void bollobas() {
    auto t0 = std::chrono::steady_clock::now();
    const int big = 10000;
    const double ratio = asymptotic_residual(big) / std::log(big);
    const bool ratio_ok = std::abs(ratio + 0.5) <= 0.1;
    double worst_margin = -1e300;
    for (int n = 10; n <= big; ++n) worst_margin = std::max(worst_margin, std::abs(asymptotic_residual(n)) - 5 - std::log(n));
    const bool envelope_ok = worst_margin <= 0;
    const double refinement = std::abs(asymptotic_residual(big) - stirling_residual(big));
    double worst_rel = 0;
    for (int r = 1; r <= 200; ++r)
        for (int n = 1; r * n <= 200; ++n) {
            if ((r * n) % 2) continue;
            double exact = bollobas_ln_exact(r, n);
            worst_rel = std::max(worst_rel, std::abs(bollobas_ln_estimate(r, n) - exact) / std::max(1.0, std::abs(exact)));
        }
    const bool agree_ok = worst_rel <= 1e-9;
    std::string detail = fmt("residual/ln n at 1e4 = %.4f (want -0.5+-0.1), ", ratio) +
                         (ratio_ok ? "ok" : "out of range") +
                         fmt("; max |residual|-(5+ln n) = %.3f; Stirling gap %.2e; ", worst_margin, refinement) +
                         fmt("exact vs lgamma rel %.1e", worst_rel);
    report(7, "Bollobas asymptotic", ratio_ok && envelope_ok && agree_ok && refinement <= 0.01, detail, t0);
}

void finite_upper_bound() {
    auto t0 = std::chrono::steady_clock::now();
    auto rows = bounds_table(1, 16);
    bool ok = true;
    int exact_pairs = 0, ordered = 0;
    std::string detail;
    for (auto& r : rows) {
        if (r.n <= 5 && r.count_A && *r.count_A > 0 && r.count_C) {
            ++exact_pairs;
            const double lhs = std::log(static_cast<double>(*r.count_C) / *r.count_A);
            const double bound = r.n * (1 + std::log(15.0));
            ok &= lhs <= bound;
            detail += fmt("n=%g: ln(C/A)=%.3f <= %.3f; ", r.n, lhs, bound);
        }
        ordered += r.ordered();
        ok &= r.ordered();
    }
    ok &= exact_pairs > 0;
    detail += std::to_string(ordered) + "/" + std::to_string(rows.size()) + " rows ordered";
    report(8, "finite upper bound", ok, detail, t0);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void determinism() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::vector<std::string>> pipeline{
        {"graphs", "--class", "C", "--n", "5"},
        {"spines", "--class", "A", "--n", "6", "--index", "0", "--samples", "200", "--seed", "5"},
        {"minimize", "--class", "A", "--n", "7"},
        {"minimize", "--class", "C", "--n", "3"},
        {"census", "--n", "6"},
        {"census", "--n", "7"},
        {"census", "--n", "8"},
        {"bounds", "--from", "1", "--to", "14", "--format", "csv"},
        {"verify-lemmas", "--max-n", "3"},
        {"bollobas", "--from", "1", "--to", "60", "--format", "csv"},
    };
    const auto root = std::filesystem::temp_directory_path() / "spinecensus-acceptance";
    std::filesystem::remove_all(root);
    bool ok = true;
    int files = 0;
    for (const std::string jobs : {"1", "8"}) {
        std::filesystem::create_directories(root / jobs);
        for (std::size_t i = 0; i < pipeline.size(); ++i) {
            auto args = pipeline[i];
            args.insert(args.end(), {"--jobs", jobs, "--out", (root / jobs / std::to_string(i)).string()});
            std::ostringstream out, err;
            ok &= cli::main(args, out, err) == cli::kExitOk;
        }
    }
    for (std::size_t i = 0; i < pipeline.size(); ++i) {
        auto a = slurp(root / "1" / std::to_string(i)), b = slurp(root / "8" / std::to_string(i));
        ok &= !a.empty() && a == b;
        ++files;
    }
    report(9, "determinism", ok, std::to_string(files) + " output files compared at jobs 1 and 8", t0);
}

} // namespace

int main() {
    rotation_cyclicity();
    dual_oracle();
    {
        auto t0 = std::chrono::steady_clock::now();
        report(2, "conservation", conservation_failures == 0 && conservation_checks > 0,
               std::to_string(conservation_checks) + " traces, " + std::to_string(conservation_failures) +
                   " violations",
               t0);
    }
    corollary();
    lemma_sweep();
    lower_bound_census();
    bollobas();
    finite_upper_bound();
    determinism();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
