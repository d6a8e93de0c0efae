#ifndef SPINECENSUS_CENSUS_HPP
#define SPINECENSUS_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "spinecensus/graph.hpp"
#include "spinecensus/reduction.hpp"
#include "spinecensus/spine.hpp"

namespace spinecensus {

/// ln of e^{-(r^2-1)/4} (rn)! / ((rn/2)! 2^{rn/2} (r!)^n n!), via log-gamma.
/// Throws ParityError when rn is odd.
double bollobas_ln_estimate(int r, int n);

/// The same value from exact integer factorials and 50-digit logarithms.
/// Throws ParityError, or LimitError when rn exceeds 2000.
double bollobas_ln_exact(int r, int n);

/// bollobas_ln_estimate(4, n) - n ln n - n ln(2 / (3e)).
double asymptotic_residual(int n);

/// Leading Stirling terms of the residual: -ln(pi n) / 2 - 15/4.
double stirling_residual(int n);

/// Something the paper's claims say should not happen, reported rather than
/// thrown so a census run can finish.
struct Anomaly {
    std::string kind;   // ReductionFailure, ConstructionFailure, NonCoherentTrace, MissingGluingEdge
    std::string detail;
    std::optional<RegularGraph> graph;
    std::optional<Spine> spine;
};

struct CensusRecord {
    CanonicalCode graph_code;
    CanonicalCode spine_code;
    int n = 0;
    int cell_count = 0;
    Spine spine;
};

struct CensusOptions {
    EnumerationLimits limits;
    ReductionOptions reduction;
    int jobs = 1;
};

struct CensusResult {
    int n = 0;
    std::size_t source_graphs = 0;   // |A_{n-1}|
    std::vector<CensusRecord> records;
    std::vector<Anomaly> anomalies;
};

/// One-cell spines on n vertices built from every graph of A_{n-1}: reduce to
/// at most two cells, pick a gluing edge, insert a loop vertex. Deduplicated
/// by canonical spine code and sorted by it.
CensusResult census_one_cell(int n, const CensusOptions& options = {});

struct BoundsRow {
    int n = 0;
    std::optional<std::size_t> count_A;
    std::optional<std::size_t> count_C;
    std::optional<double> ln_A;
    std::optional<double> ln_C;
    double bollobas_ln = 0;
    /// ln|A_{n-1}|, or its Bollobas surrogate beyond the enumeration limit
    std::optional<double> lower_ln_Mn;
    bool lower_estimated = false;
    /// ln|C_n| + n ln 18 when |C_n| is known, else ln|A_n| + n (1 + ln 270)
    std::optional<double> upper_ln_Mn_theorem;
    std::string upper_route;
    bool upper_estimated = false;
    /// n ln n + n ln 180 and n ln n + n ln(2/(3e)), leading terms only
    double upper_ln_Mn_intro = 0;
    double lower_ln_Mn_intro = 0;
    /// ln(|C_n| / |A_n|) against n (1 + ln 15), where both are exact
    std::optional<double> ln_C_over_A;
    double ln_C_over_A_bound = 0;
    std::optional<bool> ln_C_over_A_ok;

    bool ordered() const {
        return !lower_ln_Mn || !upper_ln_Mn_theorem || *lower_ln_Mn <= *upper_ln_Mn_theorem;
    }
};

inline constexpr double kTheoremUpperConstant = 6.598421958998375;   // 1 + ln 270
inline constexpr double kIntroUpperConstant = 5.19295685089021;      // ln 180
inline constexpr double kIntroLowerConstant = -1.4054651081081646;   // ln 2 - ln 3 - 1

struct BoundsOptions {
    EnumerationLimits limits;
    int jobs = 1;
};

std::vector<BoundsRow> bounds_table(int n_from, int n_to, const BoundsOptions& options = {});

} // namespace spinecensus

#endif
