#ifndef SPINECENSUS_SPINE_HPP
#define SPINECENSUS_SPINE_HPP

#include <array>
#include <span>
#include <vector>

#include "spinecensus/graph.hpp"

namespace spinecensus {

/// An oriented special spine, described by its singularity graph and a
/// decoration: a chirality (+1 or -1) per vertex and a gluing parameter in
/// Z/3 per edge.
///
/// Every dart carries three slots, one for each corner {i, j} of its vertex
/// that contains it (i = the dart's local position). Slot r of a dart at
/// position i points at the r-th smallest position j != i. The cyclic order of
/// the three slots is ascending when chirality * (-1)^i is +1 and descending
/// otherwise; that is the boundary orientation of face i of a tetrahedron with
/// the given orientation. Gluing parameter g sends cyclic position k at the
/// lower dart of an edge to cyclic position (g - k) mod 3 at the upper dart.
class Spine {
public:
    /// Throws DisconnectedError or ShapeError.
    static Spine build(RegularGraph graph, std::vector<int> chirality, std::vector<int> gluing);

    const RegularGraph& graph() const { return graph_; }
    const std::vector<int>& chirality() const { return chirality_; }
    const std::vector<int>& gluing() const { return gluing_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }

    /// Same spine with one gluing parameter replaced; `value` must be in 0..2.
    Spine with_gluing(int edge, int value) const;

    friend bool operator==(const Spine&, const Spine&) = default;

private:
    Spine(RegularGraph graph, std::vector<int> chirality, std::vector<int> gluing)
        : graph_(std::move(graph)), chirality_(std::move(chirality)), gluing_(std::move(gluing)) {}

    RegularGraph graph_;
    std::vector<int> chirality_;
    std::vector<int> gluing_;
};

Spine build_spine(RegularGraph graph, std::vector<int> chirality, std::vector<int> gluing);

namespace slots {

inline constexpr int kPerDart = 3;

inline int id(int dart, int rank) { return kPerDart * dart + rank; }
inline int dart(int slot) { return slot / kPerDart; }
inline int rank(int slot) { return slot % kPerDart; }

/// Local position that slot `rank` of a dart at `position` points at.
int target_position(int position, int rank);
/// Inverse of target_position.
int rank_of(int position, int target);
/// Cyclic position of a slot rank under the orientation convention.
int cyclic_position(int position, int chirality, int rank);
int rank_at_cyclic(int position, int chirality, int cyclic);

} // namespace slots

/// Corner involution: slot (d, towards d') <-> slot (d', towards d).
std::vector<int> corner_map(const RegularGraph& g);
/// Edge involution induced by the gluing parameters.
std::vector<int> edge_slot_map(const Spine& s);
/// Boundary-line successor on the 12n directed states: enter a vertex through
/// a slot, pass the corner, cross the next edge.
std::vector<int> successor_map(const Spine& s);
/// Direction reversal; conjugating the successor by it gives its inverse.
std::vector<int> reversal_map(const Spine& s);

/// One page-arc traversal: `direction` is +1 when moving from the edge's lower
/// dart towards its upper dart, `page` is the slot rank on the lower side.
struct PageTraversal {
    int edge;
    int direction;
    int page;

    friend bool operator==(const PageTraversal&, const PageTraversal&) = default;
};

struct ArcMembership {
    int cell;
    int direction;

    friend bool operator==(const ArcMembership&, const ArcMembership&) = default;
};

/// 2-cells as reversal-paired successor orbits. Each cell is stored once, in
/// the direction of the orbit holding the smaller state index, starting from
/// that state.
struct CellDecomposition {
    std::vector<std::vector<PageTraversal>> cells;
    /// Indexed by edge * 3 + page.
    std::vector<ArcMembership> arcs;
    int directed_orbits = 0;

    int cell_count() const { return static_cast<int>(cells.size()); }
    const ArcMembership& arc(int edge, int page) const { return arcs[3 * edge + page]; }
};

/// Throws NonCoherentTraceError if an orbit is its own reversal.
CellDecomposition trace_cells(const Spine& s);

/// Cell count only.
int count_cells(const Spine& s);

/// Advances gluing(edge) by one. Throws UnknownEdgeError.
Spine rotate_edge(const Spine& s, int edge);

using EdgeProfile = std::array<ArcMembership, 3>;

EdgeProfile edge_cell_profile(const Spine& s, const CellDecomposition& d, int edge);

/// Number of distinct cells among the page-arcs of the four edges at a vertex.
int vertex_cell_count(const Spine& s, const CellDecomposition& d, int vertex);

/// Canonical code of the spine's polyhedron: darts, pairing and slot
/// bijections up to relabeling of vertices and of darts within a vertex.
CanonicalCode canonical_spine(const Spine& s);

/// Recovers a decoration from a slot bijection; chirality of vertex 0 is +1.
/// Throws ValidationError if the bijections admit no consistent orientation.
Spine spine_from_slot_map(RegularGraph graph, std::span<const int> edge_slots);

/// Same polyhedron with vertices and local dart positions renamed (see the
/// graph overload); the decoration is recomputed.
Spine relabel(const Spine& s, std::span<const int> vertex_map,
              std::span<const std::array<int, 4>> local_maps);

} // namespace spinecensus

#endif
