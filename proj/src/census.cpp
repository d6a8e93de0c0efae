#include "spinecensus/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "spinecensus/errors.hpp"
#include "spinecensus/parallel.hpp"

namespace spinecensus {

namespace {

void check_parity(int r, int n) {
    if (r < 1 || n < 1) throw ParityError("r and n must be positive");
    if ((r * n) % 2 != 0) {
        throw ParityError("r*n = " + std::to_string(r * n) + " is odd");
    }
}

double ln_factorial(double m) {
    return std::lgamma(m + 1.0);
}

} // namespace

double bollobas_ln_estimate(int r, int n) {
    check_parity(r, n);
    const double rn = static_cast<double>(r) * n;
    return -(static_cast<double>(r) * r - 1.0) / 4.0 + ln_factorial(rn) - ln_factorial(rn / 2) -
           (rn / 2) * std::numbers::ln2 - n * ln_factorial(r) - ln_factorial(n);
}

double bollobas_ln_exact(int r, int n) {
    namespace mp = boost::multiprecision;
    check_parity(r, n);
    if (r * n > 2000) throw LimitError("exact evaluation is limited to rn <= 2000");
    auto factorial = [](int m) {
        mp::cpp_int f = 1;
        for (int k = 2; k <= m; ++k) f *= k;
        return f;
    };
    const int rn = r * n;
    const mp::cpp_int numerator = factorial(rn);
    mp::cpp_int denominator = factorial(rn / 2) * mp::pow(mp::cpp_int(2), rn / 2) * factorial(n);
    denominator *= mp::pow(factorial(r), n);
    using Float = mp::cpp_bin_float_50;
    const Float value = mp::log(Float(numerator)) - mp::log(Float(denominator)) -
                        (Float(r) * r - 1) / 4;
    return value.convert_to<double>();
}

double asymptotic_residual(int n) {
    const double x = n;
    return bollobas_ln_estimate(4, n) - x * std::log(x) - x * kIntroLowerConstant;
}

double stirling_residual(int n) {
    return -0.5 * std::log(std::numbers::pi * n) - 15.0 / 4.0;
}

CensusResult census_one_cell(int n, const CensusOptions& options) {
    if (n < 2) throw LimitError("the census needs n >= 2");
    const auto sources = enumerate_A(n - 1, options.limits);

    struct Outcome {
        std::optional<CensusRecord> record;
        std::optional<Anomaly> anomaly;
    };
    auto outcomes = parallel_map(options.jobs, sources.size(), [&](std::size_t i) -> Outcome {
        const auto& g = sources[i];
        Spine reduced = seed_spine(g);
        try {
            reduced = minimize_cells(g, options.reduction).spine;
        } catch (const ReductionFailure& e) {
            return {std::nullopt, Anomaly{"ReductionFailure", e.what(), g, std::nullopt}};
        } catch (const NonCoherentTraceError& e) {
            return {std::nullopt, Anomaly{"NonCoherentTrace", e.what(), g, std::nullopt}};
        }
        const auto edge = find_gluing_edge(reduced);
        if (!edge) {
            return {std::nullopt, Anomaly{"MissingGluingEdge", "no edge qualifies for loop insertion", g, reduced}};
        }
        try {
            Spine grown = insert_loop_vertex(reduced, *edge);
            CensusRecord record{canonical_form(grown.graph()), canonical_spine(grown), n, count_cells(grown), grown};
            return {std::move(record), std::nullopt};
        } catch (const ConstructionFailure& e) {
            return {std::nullopt, Anomaly{"ConstructionFailure", e.what(), g, reduced}};
        }
    });

    CensusResult result;
    result.n = n;
    result.source_graphs = sources.size();
    std::map<CanonicalCode, CensusRecord> unique;
    for (auto& o : outcomes) {
        if (o.anomaly) result.anomalies.push_back(std::move(*o.anomaly));
        if (o.record) {
            auto code = o.record->spine_code;
            unique.emplace(std::move(code), std::move(*o.record));
        }
    }
    for (auto& [code, record] : unique) result.records.push_back(std::move(record));
    return result;
}

std::vector<BoundsRow> bounds_table(int n_from, int n_to, const BoundsOptions& options) {
    if (n_from < 1 || n_to < n_from) throw LimitError("bounds range must be nonempty and start at n >= 1");

    // Exact class sizes needed by the rows: A for n-1..n, C for n.
    struct Counts {
        std::optional<std::size_t> a;
        std::optional<std::size_t> c;
    };
    const int first = std::max(1, n_from - 1);
    auto counts = parallel_map(options.jobs, static_cast<std::size_t>(n_to - first + 1), [&](std::size_t i) {
        const int n = first + static_cast<int>(i);
        Counts out;
        if (n <= options.limits.simple_max_n) out.a = enumerate_A(n, options.limits).size();
        if (n <= options.limits.multigraph_max_n) out.c = enumerate_C(n, options.limits).size();
        return out;
    });
    auto counts_at = [&](int n) -> const Counts& { return counts[n - first]; };

    std::vector<BoundsRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        BoundsRow row;
        row.n = n;
        const double x = n;
        row.count_A = counts_at(n).a;
        row.count_C = counts_at(n).c;
        if (row.count_A && *row.count_A > 0) row.ln_A = std::log(static_cast<double>(*row.count_A));
        if (row.count_C && *row.count_C > 0) row.ln_C = std::log(static_cast<double>(*row.count_C));
        row.bollobas_ln = bollobas_ln_estimate(4, n);

        if (n >= 2) {
            const auto& below = counts_at(n - 1);
            if (below.a) {
                if (*below.a > 0) row.lower_ln_Mn = std::log(static_cast<double>(*below.a));
            } else {
                row.lower_ln_Mn = bollobas_ln_estimate(4, n - 1);
                row.lower_estimated = true;
            }
        }

        if (row.ln_C) {
            row.upper_ln_Mn_theorem = *row.ln_C + x * std::log(18.0);
            row.upper_route = "C";
        } else if (row.ln_A) {
            row.upper_ln_Mn_theorem = *row.ln_A + x * kTheoremUpperConstant;
            row.upper_route = "A";
        } else if (!row.count_A) {
            row.upper_ln_Mn_theorem = row.bollobas_ln + x * kTheoremUpperConstant;
            row.upper_route = "A";
            row.upper_estimated = true;
        }

        row.upper_ln_Mn_intro = x * std::log(x) + x * kIntroUpperConstant;
        row.lower_ln_Mn_intro = x * std::log(x) + x * kIntroLowerConstant;
        row.ln_C_over_A_bound = x * (1.0 + std::log(15.0));
        if (row.ln_A && row.ln_C) {
            row.ln_C_over_A = *row.ln_C - *row.ln_A;
            row.ln_C_over_A_ok = *row.ln_C_over_A <= row.ln_C_over_A_bound;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace spinecensus
