#ifndef SPINECENSUS_REDUCTION_HPP
#define SPINECENSUS_REDUCTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinecensus/spine.hpp"

namespace spinecensus {

namespace rules {
inline constexpr const char* kThreeCellEdge = "three-cell-edge";
inline constexpr const char* kAntiparallel = "antiparallel";
inline constexpr const char* kSearch = "search";
inline constexpr const char* kExhaustive = "exhaustive";
std::string vertex_case(int which);
} // namespace rules

/// Rotating `edge` `turns` times (1 or 2).
struct Rotation {
    int edge;
    int turns;
    std::string rule;
};

/// An edge whose rotation lowers the cell count. Preference: an edge whose
/// three page-arcs lie in three cells, then a two-cell edge whose same-cell
/// arcs run antiparallel, then any other decreasing rotation.
std::optional<Rotation> find_reducing_rotation(const Spine& s);

/// A rotation of `edge` by `turns`, or, when `vertex` is set, a flip of that
/// vertex's chirality (only the exhaustive fallback flips).
struct ReductionStep {
    int edge;
    int turns;
    int before;
    int after;
    std::string rule;
    int vertex = -1;

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

struct ReductionOptions {
    int bfs_depth = 6;
    std::size_t bfs_node_budget = 200'000;
    /// Gluing assignments tried by the last-resort sweep (9^n for n vertices).
    std::uint64_t exhaustive_budget = 5'000'000;
    /// Decorations tried by the chirality-changing sweep (18^n).
    std::uint64_t decoration_budget = 2'000'000;
    int max_transfer_moves = 256;
};

struct ReductionResult {
    Spine spine;
    ReductionTrace trace;
    int cell_count;
};

/// All chiralities +1, all gluings 0.
Spine seed_spine(const RegularGraph& g);

/// Applies the recorded rotations to `seed`.
Spine replay(const Spine& seed, const ReductionTrace& trace);

/// Rotates the seed spine of `g` towards few cells: greedy decreasing
/// rotations, then (simple graphs) vertex-case transfer moves, breadth-first
/// search over rotation sequences, a sweep of all gluings, and finally a sweep
/// of all decorations. Stops at two cells or fewer on simple graphs; otherwise
/// at the least count found. Throws ReductionFailure when g is simple and more
/// than two cells remain.
ReductionResult minimize_cells(const RegularGraph& g, const ReductionOptions& options = {});

/// Same procedure from an arbitrary starting spine; replay the trace from
/// `start`.
ReductionResult minimize_cells(const Spine& start, const ReductionOptions& options = {});

enum class CutRule {
    /// every strand leaving a lower-side end arrives at an upper-side end
    ThroughStrands,
    /// through strands, and the induced arc permutation is not a 3-cycle
    ThroughNonCyclic,
};

/// Cuts `edge` and follows the three boundary strands from the ends on the
/// lower-dart side. Throws UnknownEdgeError.
bool is_cutable(const Spine& s, int edge, CutRule rule = CutRule::ThroughStrands);

/// An edge qualifying for loop insertion: on a one-cell spine, one passed by
/// the cell in both directions; on a two-cell spine, one meeting both cells.
std::optional<int> find_gluing_edge(const Spine& s);

/// Subdivides `edge` with a new vertex carrying a loop, choosing the new
/// vertex's chirality and the three new gluings so that the result has a
/// single cell. Throws PreconditionError or ConstructionFailure.
Spine insert_loop_vertex(const Spine& s, int edge);

struct ExhaustiveResult {
    int min_cells;
    Spine witness;
    std::uint64_t decorations;
};

inline constexpr std::uint64_t kDefaultDecorationBudget = 2'000'000;

/// Number of decorations 2^n 3^(2n); saturates at UINT64_MAX.
std::uint64_t decoration_count(int vertex_count);

/// Calls `visit(chirality, gluing, cells)` for every decoration, chirality
/// major, both in little-endian counter order. Throws LimitError above budget.
void for_each_decoration(const RegularGraph& g, std::uint64_t budget,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&, int)>& visit);

/// True minimum over all decorations, with the first decoration reaching it.
ExhaustiveResult exhaustive_min_cells(const RegularGraph& g, std::uint64_t budget = kDefaultDecorationBudget);

/// Which minimal-spine properties a spine breaks: an edge in three cells, a
/// two-cell edge with antiparallel same-cell arcs, a vertex meeting three or
/// more cells.
struct LemmaViolations {
    bool three_cell_edge = false;
    bool antiparallel_arcs = false;
    bool crowded_vertex = false;

    bool any() const { return three_cell_edge || antiparallel_arcs || crowded_vertex; }
};

LemmaViolations check_lemmas(const Spine& s);

struct LemmaSweep {
    int min_cells = 0;
    std::uint64_t decorations = 0;
    std::uint64_t minimal_decorations = 0;
    std::uint64_t three_cell_edge = 0;
    std::uint64_t antiparallel_arcs = 0;
    std::uint64_t crowded_vertex = 0;
    /// A non-minimal spine with a crowded vertex, if the sweep met one.
    std::optional<Spine> negative_control;

    std::uint64_t violations() const { return three_cell_edge + antiparallel_arcs + crowded_vertex; }
};

/// Checks every decoration that reaches the exhaustive minimum.
LemmaSweep sweep_lemmas(const RegularGraph& g, std::uint64_t budget = kDefaultDecorationBudget);

} // namespace spinecensus

#endif
