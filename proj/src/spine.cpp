#include "spinecensus/spine.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "spinecensus/errors.hpp"

namespace spinecensus {

namespace slots {

int target_position(int position, int rank) {
    return rank < position ? rank : rank + 1;
}

int rank_of(int position, int target) {
    return target < position ? target : target - 1;
}

namespace {
bool ascending(int position, int chirality) {
    return (position % 2 == 0) == (chirality > 0);
}
} // namespace

int cyclic_position(int position, int chirality, int rank) {
    return ascending(position, chirality) ? rank : 2 - rank;
}

int rank_at_cyclic(int position, int chirality, int cyclic) {
    return ascending(position, chirality) ? cyclic : 2 - cyclic;
}

} // namespace slots

Spine Spine::build(RegularGraph graph, std::vector<int> chirality, std::vector<int> gluing) {
    if (static_cast<int>(chirality.size()) != graph.vertex_count()) {
        throw ShapeError("expected " + std::to_string(graph.vertex_count()) +
                         " chirality entries, got " + std::to_string(chirality.size()));
    }
    if (static_cast<int>(gluing.size()) != graph.edge_count()) {
        throw ShapeError("expected " + std::to_string(graph.edge_count()) +
                         " gluing entries, got " + std::to_string(gluing.size()));
    }
    for (int c : chirality) {
        if (c != 1 && c != -1) throw ShapeError("chirality entries must be +1 or -1");
    }
    for (int g : gluing) {
        if (g < 0 || g > 2) throw ShapeError("gluing entries must lie in 0..2");
    }
    if (!is_connected(graph)) throw DisconnectedError("singularity graph is not connected");
    return Spine(std::move(graph), std::move(chirality), std::move(gluing));
}

Spine Spine::with_gluing(int edge, int value) const {
    if (edge < 0 || edge >= edge_count()) throw UnknownEdgeError("edge " + std::to_string(edge));
    if (value < 0 || value > 2) throw ShapeError("gluing entries must lie in 0..2");
    Spine out = *this;
    out.gluing_[edge] = value;
    return out;
}

Spine build_spine(RegularGraph graph, std::vector<int> chirality, std::vector<int> gluing) {
    return Spine::build(std::move(graph), std::move(chirality), std::move(gluing));
}

std::vector<int> corner_map(const RegularGraph& g) {
    std::vector<int> c(slots::kPerDart * g.dart_count());
    for (int d = 0; d < g.dart_count(); ++d) {
        const int v = RegularGraph::vertex_of(d);
        const int i = RegularGraph::position_of(d);
        for (int r = 0; r < slots::kPerDart; ++r) {
            const int j = slots::target_position(i, r);
            c[slots::id(d, r)] = slots::id(RegularGraph::dart_at(v, j), slots::rank_of(j, i));
        }
    }
    return c;
}

std::vector<int> edge_slot_map(const Spine& s) {
    const auto& g = s.graph();
    std::vector<int> e(slots::kPerDart * g.dart_count());
    for (int edge = 0; edge < g.edge_count(); ++edge) {
        const int lo = g.lower_dart(edge);
        const int hi = g.upper_dart(edge);
        const int lo_pos = RegularGraph::position_of(lo);
        const int hi_pos = RegularGraph::position_of(hi);
        const int lo_chi = s.chirality()[RegularGraph::vertex_of(lo)];
        const int hi_chi = s.chirality()[RegularGraph::vertex_of(hi)];
        for (int r = 0; r < slots::kPerDart; ++r) {
            const int k = slots::cyclic_position(lo_pos, lo_chi, r);
            const int k2 = ((s.gluing()[edge] - k) % 3 + 3) % 3;
            const int r2 = slots::rank_at_cyclic(hi_pos, hi_chi, k2);
            e[slots::id(lo, r)] = slots::id(hi, r2);
            e[slots::id(hi, r2)] = slots::id(lo, r);
        }
    }
    return e;
}

std::vector<int> successor_map(const Spine& s) {
    const auto c = corner_map(s.graph());
    const auto e = edge_slot_map(s);
    std::vector<int> next(c.size());
    for (std::size_t x = 0; x < c.size(); ++x) next[x] = e[c[x]];
    return next;
}

std::vector<int> reversal_map(const Spine& s) {
    return corner_map(s.graph());
}

namespace {

PageTraversal traversal_of(const RegularGraph& g, const std::vector<int>& edge_slots, int state) {
    const int d = slots::dart(state);
    const int edge = g.edge_of(d);
    if (d == g.lower_dart(edge)) return {edge, -1, slots::rank(state)};
    return {edge, +1, slots::rank(edge_slots[state])};
}

} // namespace

CellDecomposition trace_cells(const Spine& s) {
    const auto& g = s.graph();
    const auto c = corner_map(g);
    const auto e = edge_slot_map(s);
    const int states = static_cast<int>(c.size());

    CellDecomposition out;
    out.arcs.assign(3 * g.edge_count(), ArcMembership{-1, 0});
    std::vector<int> orbit_of(states, -1);
    int orbit_count = 0;
    std::size_t total_length = 0;

    for (int start = 0; start < states; ++start) {
        if (orbit_of[start] != -1) continue;
        const int cell = out.cell_count();
        std::vector<PageTraversal> boundary;
        for (int x = start; orbit_of[x] == -1; x = e[c[x]]) {
            orbit_of[x] = orbit_count;
            boundary.push_back(traversal_of(g, e, x));
        }
        const int forward = orbit_count++;
        const int reverse_start = c[start];
        if (orbit_of[reverse_start] == forward) {
            throw NonCoherentTraceError("boundary orbit through state " + std::to_string(start) +
                                        " is its own reversal");
        }
        for (int x = reverse_start; orbit_of[x] == -1; x = e[c[x]]) orbit_of[x] = orbit_count;
        ++orbit_count;
        for (const auto& t : boundary) out.arcs[3 * t.edge + t.page] = {cell, t.direction};
        total_length += boundary.size();
        out.cells.push_back(std::move(boundary));
    }
    out.directed_orbits = orbit_count;
    if (total_length != static_cast<std::size_t>(6 * g.vertex_count())) {
        throw NonCoherentTraceError("cell boundaries do not cover every page-arc exactly once");
    }
    return out;
}

int count_cells(const Spine& s) {
    const auto next = successor_map(s);
    std::vector<char> seen(next.size(), 0);
    int orbits = 0;
    for (std::size_t x = 0; x < next.size(); ++x) {
        if (seen[x]) continue;
        ++orbits;
        for (int y = static_cast<int>(x); !seen[y]; y = next[y]) seen[y] = 1;
    }
    return orbits / 2;
}

Spine rotate_edge(const Spine& s, int edge) {
    if (edge < 0 || edge >= s.edge_count()) {
        throw UnknownEdgeError("edge " + std::to_string(edge) + " not in spine with " +
                               std::to_string(s.edge_count()) + " edges");
    }
    return s.with_gluing(edge, (s.gluing()[edge] + 1) % 3);
}

EdgeProfile edge_cell_profile(const Spine& s, const CellDecomposition& d, int edge) {
    if (edge < 0 || edge >= s.edge_count()) throw UnknownEdgeError("edge " + std::to_string(edge));
    return {d.arc(edge, 0), d.arc(edge, 1), d.arc(edge, 2)};
}

int vertex_cell_count(const Spine& s, const CellDecomposition& d, int vertex) {
    std::vector<int> seen;
    for (int p = 0; p < RegularGraph::kDegree; ++p) {
        const int edge = s.graph().edge_of(RegularGraph::dart_at(vertex, p));
        for (int page = 0; page < 3; ++page) seen.push_back(d.arc(edge, page).cell);
    }
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

namespace {

// Breadth-first relabeling from a start vertex with a chosen local order. The
// slot bijections propagate the local order to every other vertex.
std::vector<std::uint8_t> encode_from(const RegularGraph& g, const std::vector<int>& edge_slots,
                                      int start, const std::array<int, 4>& start_order) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<std::array<int, 4>> order(n);   // order[v][new position] = old dart
    std::vector<int> new_position(g.dart_count(), -1);
    std::vector<int> queue;
    queue.reserve(n);

    auto assign = [&](int v, const std::array<int, 4>& darts) {
        label[v] = static_cast<int>(queue.size());
        order[v] = darts;
        for (int p = 0; p < 4; ++p) new_position[darts[p]] = p;
        queue.push_back(v);
    };
    assign(start, start_order);

    // slot of `from` pointing at dart `to` (same vertex)
    auto slot_towards = [](int from, int to) {
        return slots::id(from, slots::rank_of(RegularGraph::position_of(from), RegularGraph::position_of(to)));
    };
    auto slot_target_dart = [](int slot) {
        const int d = slots::dart(slot);
        return RegularGraph::dart_at(RegularGraph::vertex_of(d),
                                     slots::target_position(RegularGraph::position_of(d), slots::rank(slot)));
    };

    std::vector<std::uint8_t> code;
    code.reserve(2 + 20 * n);
    code.push_back(static_cast<std::uint8_t>(n >> 8));
    code.push_back(static_cast<std::uint8_t>(n & 0xff));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int p = 0; p < 4; ++p) {
            const int d = order[v][p];
            const int mate = g.partner(d);
            const int w = RegularGraph::vertex_of(mate);
            if (label[w] == -1) {
                std::array<int, 4> darts{mate, -1, -1, -1};
                int next = 1;
                for (int q = 0; q < 4; ++q) {
                    if (q == p) continue;
                    darts[next++] = slot_target_dart(edge_slots[slot_towards(d, order[v][q])]);
                }
                assign(w, darts);
            }
            const int mate_id = 4 * label[w] + new_position[mate];
            code.push_back(static_cast<std::uint8_t>(mate_id >> 8));
            code.push_back(static_cast<std::uint8_t>(mate_id & 0xff));
            for (int q = 0; q < 4; ++q) {
                if (q == p) continue;
                const int image = slot_target_dart(edge_slots[slot_towards(d, order[v][q])]);
                code.push_back(static_cast<std::uint8_t>(new_position[image]));
            }
        }
    }
    return code;
}

} // namespace

CanonicalCode canonical_spine(const Spine& s) {
    const auto& g = s.graph();
    const auto edge_slots = edge_slot_map(s);
    std::optional<std::vector<std::uint8_t>> best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::array<int, 4> local{0, 1, 2, 3};
        do {
            std::array<int, 4> darts;
            for (int p = 0; p < 4; ++p) darts[p] = RegularGraph::dart_at(v, local[p]);
            auto code = encode_from(g, edge_slots, v, darts);
            if (!best || code < *best) best = std::move(code);
        } while (std::next_permutation(local.begin(), local.end()));
    }
    return CanonicalCode{std::move(*best)};
}

Spine spine_from_slot_map(RegularGraph graph, std::span<const int> edge_slots) {
    const int n = graph.vertex_count();
    if (static_cast<int>(edge_slots.size()) != slots::kPerDart * graph.dart_count()) {
        throw ValidationError("slot map has the wrong size");
    }
    if (!is_connected(graph)) throw DisconnectedError("singularity graph is not connected");

    // Gluing parameter making slot maps of `edge` consistent with the given
    // chiralities at both ends, if any.
    auto fit = [&](int edge, int lo_chi, int hi_chi) -> std::optional<int> {
        const int lo = graph.lower_dart(edge);
        const int hi = graph.upper_dart(edge);
        std::optional<int> g;
        for (int r = 0; r < 3; ++r) {
            const int image = edge_slots[slots::id(lo, r)];
            if (slots::dart(image) != hi) return std::nullopt;
            const int k = slots::cyclic_position(RegularGraph::position_of(lo), lo_chi, r);
            const int k2 = slots::cyclic_position(RegularGraph::position_of(hi), hi_chi, slots::rank(image));
            const int value = (k + k2) % 3;
            if (g && *g != value) return std::nullopt;
            g = value;
        }
        return g;
    };

    std::vector<int> chirality(n, 0);
    chirality[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int p = 0; p < 4; ++p) {
            const int d = RegularGraph::dart_at(v, p);
            const int edge = graph.edge_of(d);
            const int lo_vertex = RegularGraph::vertex_of(graph.lower_dart(edge));
            const int hi_vertex = RegularGraph::vertex_of(graph.upper_dart(edge));
            const int other = lo_vertex == v ? hi_vertex : lo_vertex;
            if (chirality[other] != 0) continue;
            for (int candidate : {1, -1}) {
                const int lo_chi = lo_vertex == v ? chirality[v] : candidate;
                const int hi_chi = lo_vertex == v ? candidate : chirality[v];
                if (fit(edge, lo_chi, hi_chi)) {
                    chirality[other] = candidate;
                    stack.push_back(other);
                    break;
                }
            }
            if (chirality[other] == 0) {
                throw ValidationError("edge " + std::to_string(edge) + " admits no oriented gluing");
            }
        }
    }
    std::vector<int> gluing(graph.edge_count());
    for (int edge = 0; edge < graph.edge_count(); ++edge) {
        auto g = fit(edge, chirality[RegularGraph::vertex_of(graph.lower_dart(edge))],
                     chirality[RegularGraph::vertex_of(graph.upper_dart(edge))]);
        if (!g) throw ValidationError("slot maps are not orientation-consistent at edge " + std::to_string(edge));
        gluing[edge] = *g;
    }
    return Spine::build(std::move(graph), std::move(chirality), std::move(gluing));
}

Spine relabel(const Spine& s, std::span<const int> vertex_map,
              std::span<const std::array<int, 4>> local_maps) {
    const auto& g = s.graph();
    auto image = [&](int d) {
        const int v = RegularGraph::vertex_of(d);
        return RegularGraph::dart_at(vertex_map[v], local_maps[v][RegularGraph::position_of(d)]);
    };
    auto slot_image = [&](int slot) {
        const int d = slots::dart(slot);
        const int target = RegularGraph::dart_at(
            RegularGraph::vertex_of(d), slots::target_position(RegularGraph::position_of(d), slots::rank(slot)));
        const int nd = image(d);
        return slots::id(nd, slots::rank_of(RegularGraph::position_of(nd), RegularGraph::position_of(image(target))));
    };
    RegularGraph moved = relabel(g, vertex_map, local_maps);
    const auto old_slots = edge_slot_map(s);
    std::vector<int> new_slots(old_slots.size());
    for (std::size_t x = 0; x < old_slots.size(); ++x) {
        new_slots[slot_image(static_cast<int>(x))] = slot_image(old_slots[x]);
    }
    return spine_from_slot_map(std::move(moved), new_slots);
}

} // namespace spinecensus
