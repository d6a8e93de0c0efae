#ifndef SPINECENSUS_GRAPH_HPP
#define SPINECENSUS_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spinecensus {

using DartPair = std::pair<int, int>;

/// Total-order key; two objects get equal codes iff they are isomorphic.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    static CanonicalCode from_hex(const std::string& text);

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        return a.bytes <=> b.bytes;
    }
};

/// A 4-regular multigraph given by darts. Dart d sits at vertex d / 4 in local
/// position d % 4; `partner` is a fixed-point-free involution whose orbits are
/// the edges. A loop is an edge whose two darts share a vertex.
///
/// Edges are numbered by ascending lower dart, and are oriented from the lower
/// dart towards its partner.
class RegularGraph {
public:
    static constexpr int kDegree = 4;

    /// Validates and builds. Throws SelfPairError or DegreeError.
    static RegularGraph build(int vertex_count, std::span<const DartPair> pairs);

    int vertex_count() const { return vertex_count_; }
    int dart_count() const { return kDegree * vertex_count_; }
    int edge_count() const { return static_cast<int>(edge_lower_.size()); }

    int partner(int dart) const { return partner_[dart]; }
    static int vertex_of(int dart) { return dart / kDegree; }
    static int position_of(int dart) { return dart % kDegree; }
    static int dart_at(int vertex, int position) { return kDegree * vertex + position; }

    int edge_of(int dart) const { return edge_of_dart_[dart]; }
    int lower_dart(int edge) const { return edge_lower_[edge]; }
    int upper_dart(int edge) const { return partner_[edge_lower_[edge]]; }
    bool is_loop(int edge) const;

    /// Pairs (lower, upper) in edge order.
    std::vector<DartPair> pairs() const;

    /// multiplicity(u, v) for u != v counts parallel edges; multiplicity(v, v)
    /// counts loops at v.
    std::vector<std::vector<int>> multiplicity_matrix() const;

    bool is_simple() const;

    friend bool operator==(const RegularGraph& a, const RegularGraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.partner_ == b.partner_;
    }

private:
    int vertex_count_ = 0;
    std::vector<int> partner_;
    std::vector<int> edge_lower_;
    std::vector<int> edge_of_dart_;
};

RegularGraph build_graph(int vertex_count, std::span<const DartPair> pairs);

/// Builds a graph from a symmetric multiplicity matrix (diagonal = loop count).
/// Darts are handed out per vertex in order: loops first, then edges to
/// increasing neighbours.
RegularGraph graph_from_multiplicities(const std::vector<std::vector<int>>& matrix);

bool is_connected(const RegularGraph& g);

CanonicalCode canonical_form(const RegularGraph& g);

/// Applies a vertex permutation (new index of old vertex v is vertex_map[v])
/// and per-vertex local dart permutations (old position p moves to
/// local_maps[v][p]). Used for relabeling fuzz.
RegularGraph relabel(const RegularGraph& g, std::span<const int> vertex_map,
                     std::span<const std::array<int, 4>> local_maps);

struct EnumerationLimits {
    int simple_max_n = 8;
    int multigraph_max_n = 6;
};

/// Connected simple 4-regular graphs on n vertices, one per isomorphism class,
/// sorted by canonical code.
std::vector<RegularGraph> enumerate_A(int n, const EnumerationLimits& limits = {});

/// Connected 4-regular multigraphs (loops count 2) on n vertices, one per
/// isomorphism class, sorted by canonical code.
std::vector<RegularGraph> enumerate_C(int n, const EnumerationLimits& limits = {});

} // namespace spinecensus

#endif
