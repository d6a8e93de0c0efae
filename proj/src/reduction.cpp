#include "spinecensus/reduction.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "cell_count.hpp"
#include "spinecensus/errors.hpp"

namespace spinecensus {

std::string rules::vertex_case(int which) {
    return "vertex-case-" + std::to_string(which);
}

namespace {

Spine rotated(const Spine& s, int edge, int turns) {
    return s.with_gluing(edge, (s.gluing()[edge] + turns) % 3);
}

int distinct_cells(const EdgeProfile& p) {
    int distinct = 1;
    if (p[1].cell != p[0].cell) ++distinct;
    if (p[2].cell != p[0].cell && p[2].cell != p[1].cell) ++distinct;
    return distinct;
}

bool has_antiparallel_pair(const EdgeProfile& p) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (p[i].cell == p[j].cell && p[i].direction != p[j].direction) return true;
        }
    }
    return false;
}

std::optional<int> decreasing_turns(const Spine& s, int edge, int before) {
    for (int turns = 1; turns <= 2; ++turns) {
        if (count_cells(rotated(s, edge, turns)) < before) return turns;
    }
    return std::nullopt;
}

// Which cell the page-arc at a slot belongs to.
int slot_cell(const RegularGraph& g, const CellDecomposition& d, const std::vector<int>& edge_slots, int slot) {
    const int dart = slots::dart(slot);
    const int edge = g.edge_of(dart);
    const int page = dart == g.lower_dart(edge) ? slots::rank(slot) : slots::rank(edge_slots[slot]);
    return d.arc(edge, page).cell;
}

int corner_cell(const RegularGraph& g, const CellDecomposition& d, const std::vector<int>& edge_slots,
                int from, int to) {
    return slot_cell(g, d, edge_slots,
                     slots::id(from, slots::rank_of(RegularGraph::position_of(from), RegularGraph::position_of(to))));
}

std::set<int> cells_on_edge(const CellDecomposition& d, int edge) {
    return {d.arc(edge, 0).cell, d.arc(edge, 1).cell, d.arc(edge, 2).cell};
}

std::vector<std::vector<int>> arc_sets(const CellDecomposition& d) {
    std::vector<std::vector<int>> out;
    for (const auto& cell : d.cells) {
        std::vector<int> arcs;
        for (const auto& t : cell) arcs.push_back(3 * t.edge + t.page);
        std::sort(arcs.begin(), arcs.end());
        out.push_back(std::move(arcs));
    }
    return out;
}

// Vertex configuration at O from the proof that minimal spines have at most
// two cells: OA lies in both distinguished cells, OC in only one of them.
// Returns 1..4, or 0 when the configuration does not match.
struct VertexConfig {
    int which = 0;
    int dart_b = -1;
};

VertexConfig classify(const RegularGraph& g, const CellDecomposition& d, const std::vector<int>& edge_slots,
                      int dart_a, int dart_c) {
    const int v = RegularGraph::vertex_of(dart_a);
    std::vector<int> rest;
    for (int p = 0; p < 4; ++p) {
        const int x = RegularGraph::dart_at(v, p);
        if (x != dart_a && x != dart_c) rest.push_back(x);
    }
    const auto on_a = cells_on_edge(d, g.edge_of(dart_a));
    const auto on_c = cells_on_edge(d, g.edge_of(dart_c));
    if (on_a.size() != 2 || on_c.size() != 1 || !on_a.count(*on_c.begin())) return {};
    const int single = *on_c.begin();
    const int other = *on_a.begin() == single ? *std::next(on_a.begin()) : *on_a.begin();
    int b = rest[0], dd = rest[1];
    if (corner_cell(g, d, edge_slots, dart_a, b) != other) std::swap(b, dd);
    if (corner_cell(g, d, edge_slots, dart_a, b) != other) return {};
    const bool aod_other = corner_cell(g, d, edge_slots, dart_a, dd) == other;
    const bool bod_other = corner_cell(g, d, edge_slots, b, dd) == other;
    int which = aod_other ? (bod_other ? 4 : 2) : (bod_other ? 3 : 1);
    return {which, b};
}

class Minimizer {
public:
    Minimizer(const Spine& start, const ReductionOptions& options)
        : graph_(start.graph()), options_(options), current_(start), cells_(count_cells(current_)) {}

    ReductionResult run() {
        int transfers = 0;
        for (;;) {
            while (auto move = find_reducing_rotation(current_)) apply(move->edge, move->turns, move->rule);
            if (cells_ <= 2 && graph_.is_simple()) break;
            if (cells_ <= 1) break;
            if (graph_.is_simple() && transfers < options_.max_transfer_moves) {
                if (auto move = transfer_move()) {
                    ++transfers;
                    apply(move->edge, move->turns, move->rule);
                    continue;
                }
            }
            if (breadth_first()) continue;
            if (sweep_gluings()) continue;
            if (sweep_decorations()) continue;
            break;
        }
        if (graph_.is_simple() && cells_ > 2) {
            throw ReductionFailure("simple graph on " + std::to_string(graph_.vertex_count()) +
                                   " vertices stuck at " + std::to_string(cells_) + " cells");
        }
        return {current_, trace_, cells_};
    }

private:
    void apply(int edge, int turns, const std::string& rule) {
        Spine next = rotated(current_, edge, turns);
        const int after = count_cells(next);
        trace_.steps.push_back({edge, turns, cells_, after, rule});
        current_ = std::move(next);
        cells_ = after;
        visited_.insert(current_.gluing());
    }

    // Moves double-cell membership one step along a shortest path out of the
    // vertex set U whose edges all lie in two chosen cells, without touching
    // the remaining cells.
    std::optional<Rotation> transfer_move() {
        const auto d = trace_cells(current_);
        const int c = d.cell_count();
        if (c <= 2) return std::nullopt;
        const auto edge_slots = edge_slot_map(current_);
        const auto before_sets = arc_sets(d);
        const int n = graph_.vertex_count();

        for (int f1 = 0; f1 < c; ++f1) {
            for (int f2 = f1 + 1; f2 < c; ++f2) {
                std::vector<char> in_u(n, 1);
                for (int v = 0; v < n; ++v) {
                    for (int p = 0; p < 4 && in_u[v]; ++p) {
                        for (int cell : cells_on_edge(d, graph_.edge_of(RegularGraph::dart_at(v, p)))) {
                            if (cell != f1 && cell != f2) in_u[v] = 0;
                        }
                    }
                }
                const int u_size = static_cast<int>(std::count(in_u.begin(), in_u.end(), 1));
                if (u_size == 0 || u_size == n) continue;

                std::vector<int> dist(n, -1);
                std::deque<int> queue;
                for (int v = 0; v < n; ++v) {
                    if (!in_u[v]) {
                        dist[v] = 0;
                        queue.push_back(v);
                    }
                }
                while (!queue.empty()) {
                    const int v = queue.front();
                    queue.pop_front();
                    for (int p = 0; p < 4; ++p) {
                        const int w = RegularGraph::vertex_of(graph_.partner(RegularGraph::dart_at(v, p)));
                        if (dist[w] == -1) {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                std::vector<int> order;
                for (int v = 0; v < n; ++v) {
                    if (in_u[v]) order.push_back(v);
                }
                std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });

                std::vector<std::vector<int>> keep;
                for (int cell = 0; cell < c; ++cell) {
                    if (cell != f1 && cell != f2) keep.push_back(before_sets[cell]);
                }

                for (int o : order) {
                    for (int pa = 0; pa < 4; ++pa) {
                        const int dart_a = RegularGraph::dart_at(o, pa);
                        for (int pc = 0; pc < 4; ++pc) {
                            const int dart_c = RegularGraph::dart_at(o, pc);
                            if (pc == pa) continue;
                            const int w = RegularGraph::vertex_of(graph_.partner(dart_c));
                            if (dist[w] != dist[o] - 1) continue;
                            const auto config = classify(graph_, d, edge_slots, dart_a, dart_c);
                            if (config.which == 0 || config.which == 4) continue;
                            const int edge = config.which == 1 ? graph_.edge_of(config.dart_b) : graph_.edge_of(dart_a);
                            for (int turns = 1; turns <= 2; ++turns) {
                                Spine candidate = rotated(current_, edge, turns);
                                if (visited_.count(candidate.gluing())) continue;
                                const auto nd = trace_cells(candidate);
                                if (nd.cell_count() > c) continue;
                                const auto after_sets = arc_sets(nd);
                                bool untouched = std::all_of(keep.begin(), keep.end(), [&](const auto& s) {
                                    return std::find(after_sets.begin(), after_sets.end(), s) != after_sets.end();
                                });
                                if (!untouched) continue;
                                bool progress = cells_on_edge(nd, graph_.edge_of(dart_c)).size() == 2;
                                if (!progress) {
                                    const auto next = classify(graph_, nd, edge_slot_map(candidate), dart_a, dart_c);
                                    progress = (config.which == 2 && next.which == 1) ||
                                               (config.which == 1 && next.which == 3);
                                }
                                if (progress) return Rotation{edge, turns, rules::vertex_case(config.which)};
                            }
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    bool breadth_first() {
        struct Node {
            std::vector<int> gluing;
            int parent;
            int edge;
            int turns;
            int depth;
        };
        detail::DecorationCounter counter(graph_);
        const auto& chirality = current_.chirality();
        std::vector<Node> nodes{{current_.gluing(), -1, -1, 0, 0}};
        std::set<std::vector<int>> seen{current_.gluing()};
        for (std::size_t head = 0; head < nodes.size(); ++head) {
            if (nodes[head].depth >= options_.bfs_depth) break;
            for (int edge = 0; edge < graph_.edge_count(); ++edge) {
                for (int turns = 1; turns <= 2; ++turns) {
                    auto gluing = nodes[head].gluing;
                    gluing[edge] = (gluing[edge] + turns) % 3;
                    if (!seen.insert(gluing).second) continue;
                    const int cells = counter.count(chirality, gluing);
                    nodes.push_back({std::move(gluing), static_cast<int>(head), edge, turns, nodes[head].depth + 1});
                    if (cells < cells_) {
                        std::vector<std::pair<int, int>> path;
                        for (int at = static_cast<int>(nodes.size()) - 1; nodes[at].parent != -1; at = nodes[at].parent) {
                            path.emplace_back(nodes[at].edge, nodes[at].turns);
                        }
                        std::reverse(path.begin(), path.end());
                        for (auto [e, t] : path) apply(e, t, rules::kSearch);
                        return true;
                    }
                    if (nodes.size() >= options_.bfs_node_budget) return false;
                }
            }
        }
        return false;
    }

    // Every gluing assignment with the seed chirality, if within budget.
    bool sweep_gluings() {
        const int edges = graph_.edge_count();
        std::uint64_t total = 1;
        for (int e = 0; e < edges; ++e) {
            total *= 3;
            if (total > options_.exhaustive_budget) return false;
        }
        detail::DecorationCounter counter(graph_);
        std::vector<int> gluing(edges, 0);
        std::vector<int> best;
        int best_cells = cells_;
        for (std::uint64_t i = 0; i < total; ++i) {
            const int cells = counter.count(current_.chirality(), gluing);
            if (cells < best_cells) {
                best_cells = cells;
                best = gluing;
            }
            for (int e = 0; e < edges && ++gluing[e] == 3; ++e) gluing[e] = 0;
        }
        if (best.empty()) return false;
        for (int e = 0; e < edges; ++e) {
            const int turns = (best[e] - current_.gluing()[e] + 3) % 3;
            if (turns != 0) apply(e, turns, rules::kExhaustive);
        }
        return true;
    }

    // All decorations; chirality changes are recorded as flips.
    bool sweep_decorations() {
        if (decoration_count(graph_.vertex_count()) > options_.decoration_budget) return false;
        const auto best = exhaustive_min_cells(graph_, options_.decoration_budget);
        if (best.min_cells >= cells_) return false;
        for (int v = 0; v < graph_.vertex_count(); ++v) {
            if (best.witness.chirality()[v] != current_.chirality()[v]) flip(v);
        }
        for (int e = 0; e < graph_.edge_count(); ++e) {
            const int turns = (best.witness.gluing()[e] - current_.gluing()[e] + 3) % 3;
            if (turns != 0) apply(e, turns, rules::kExhaustive);
        }
        return true;
    }

    void flip(int vertex) {
        auto chirality = current_.chirality();
        chirality[vertex] = -chirality[vertex];
        Spine next = Spine::build(graph_, std::move(chirality), current_.gluing());
        const int after = count_cells(next);
        trace_.steps.push_back({-1, 0, cells_, after, rules::kExhaustive, vertex});
        current_ = std::move(next);
        cells_ = after;
    }

    RegularGraph graph_;
    ReductionOptions options_;
    Spine current_;
    int cells_;
    ReductionTrace trace_;
    std::set<std::vector<int>> visited_;
};

} // namespace

std::optional<Rotation> find_reducing_rotation(const Spine& s) {
    const auto d = trace_cells(s);
    const int before = d.cell_count();
    if (before <= 1) return std::nullopt;
    for (int edge = 0; edge < s.edge_count(); ++edge) {
        if (distinct_cells(edge_cell_profile(s, d, edge)) == 3) {
            if (auto turns = decreasing_turns(s, edge, before)) return Rotation{edge, *turns, rules::kThreeCellEdge};
        }
    }
    for (int edge = 0; edge < s.edge_count(); ++edge) {
        const auto p = edge_cell_profile(s, d, edge);
        if (distinct_cells(p) == 2 && has_antiparallel_pair(p)) {
            if (auto turns = decreasing_turns(s, edge, before)) return Rotation{edge, *turns, rules::kAntiparallel};
        }
    }
    for (int edge = 0; edge < s.edge_count(); ++edge) {
        if (auto turns = decreasing_turns(s, edge, before)) return Rotation{edge, *turns, rules::kSearch};
    }
    return std::nullopt;
}

Spine seed_spine(const RegularGraph& g) {
    return Spine::build(g, std::vector<int>(g.vertex_count(), 1), std::vector<int>(g.edge_count(), 0));
}

Spine replay(const Spine& seed, const ReductionTrace& trace) {
    Spine s = seed;
    for (const auto& step : trace.steps) {
        if (step.vertex >= 0) {
            auto chirality = s.chirality();
            chirality[step.vertex] = -chirality[step.vertex];
            s = Spine::build(s.graph(), std::move(chirality), s.gluing());
            continue;
        }
        for (int t = 0; t < step.turns; ++t) s = rotate_edge(s, step.edge);
    }
    return s;
}

ReductionResult minimize_cells(const RegularGraph& g, const ReductionOptions& options) {
    return Minimizer(seed_spine(g), options).run();
}

ReductionResult minimize_cells(const Spine& start, const ReductionOptions& options) {
    return Minimizer(start, options).run();
}

bool is_cutable(const Spine& s, int edge, CutRule rule) {
    if (edge < 0 || edge >= s.edge_count()) throw UnknownEdgeError("edge " + std::to_string(edge));
    const auto& g = s.graph();
    const auto corner = corner_map(g);
    const auto edge_slots = edge_slot_map(s);
    const int lo = g.lower_dart(edge);
    const int hi = g.upper_dart(edge);
    std::array<int, 3> arc_reached{};
    for (int r = 0; r < 3; ++r) {
        int y = corner[slots::id(lo, r)];
        while (slots::dart(y) != lo && slots::dart(y) != hi) y = corner[edge_slots[y]];
        if (slots::dart(y) != hi) return false;
        arc_reached[r] = slots::rank(edge_slots[y]);
    }
    if (rule == CutRule::ThroughNonCyclic) {
        const bool three_cycle = arc_reached[0] != 0 && arc_reached[1] != 1 && arc_reached[2] != 2;
        return !three_cycle;
    }
    return true;
}

std::optional<int> find_gluing_edge(const Spine& s) {
    const auto d = trace_cells(s);
    if (d.cell_count() > 2) return std::nullopt;
    for (int edge = 0; edge < s.edge_count(); ++edge) {
        const auto p = edge_cell_profile(s, d, edge);
        if (d.cell_count() == 1 ? has_antiparallel_pair(p) : distinct_cells(p) == 2) return edge;
    }
    return std::nullopt;
}

Spine insert_loop_vertex(const Spine& s, int edge) {
    if (edge < 0 || edge >= s.edge_count()) throw UnknownEdgeError("edge " + std::to_string(edge));
    const auto d = trace_cells(s);
    const auto profile = edge_cell_profile(s, d, edge);
    const bool qualifies = d.cell_count() == 1 ? has_antiparallel_pair(profile)
                         : d.cell_count() == 2 ? distinct_cells(profile) == 2
                                               : false;
    if (!qualifies) {
        throw PreconditionError("edge " + std::to_string(edge) + " does not qualify for loop insertion on a " +
                                std::to_string(d.cell_count()) + "-cell spine");
    }
    const auto& g = s.graph();
    const int n = g.vertex_count();
    const int lo = g.lower_dart(edge);
    const int hi = g.upper_dart(edge);
    const int w0 = RegularGraph::dart_at(n, 0);
    std::vector<DartPair> pairs;
    for (auto [a, b] : g.pairs()) {
        if (a != lo) pairs.emplace_back(a, b);
    }
    pairs.emplace_back(lo, w0);
    pairs.emplace_back(hi, w0 + 1);
    pairs.emplace_back(w0 + 2, w0 + 3);
    RegularGraph grown = RegularGraph::build(n + 1, pairs);

    std::map<int, int> old_gluing;  // by lower dart
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e != edge) old_gluing[g.lower_dart(e)] = s.gluing()[e];
    }
    const int lo_edge = grown.edge_of(lo);
    const int hi_edge = grown.edge_of(hi);
    const int loop_edge = grown.edge_of(w0 + 2);

    std::vector<int> chirality = s.chirality();
    chirality.push_back(1);
    std::vector<int> gluing(grown.edge_count(), 0);
    for (int e = 0; e < grown.edge_count(); ++e) {
        auto it = old_gluing.find(grown.lower_dart(e));
        if (it != old_gluing.end() && e != lo_edge) gluing[e] = it->second;
    }
    detail::DecorationCounter counter(grown);
    for (int chi : {1, -1}) {
        chirality[n] = chi;
        for (int a = 0; a < 27; ++a) {
            gluing[lo_edge] = a % 3;
            gluing[hi_edge] = (a / 3) % 3;
            gluing[loop_edge] = a / 9;
            if (counter.count(chirality, gluing) == 1) {
                return Spine::build(std::move(grown), std::move(chirality), std::move(gluing));
            }
        }
    }
    throw ConstructionFailure("no choice of loop-vertex decoration yields one cell at edge " + std::to_string(edge));
}

std::uint64_t decoration_count(int vertex_count) {
    std::uint64_t total = 1;
    for (int v = 0; v < vertex_count; ++v) {
        if (total > std::numeric_limits<std::uint64_t>::max() / 18) return std::numeric_limits<std::uint64_t>::max();
        total *= 18;
    }
    return total;
}

void for_each_decoration(const RegularGraph& g, std::uint64_t budget,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&, int)>& visit) {
    const std::uint64_t total = decoration_count(g.vertex_count());
    if (total > budget) {
        throw LimitError(std::to_string(total) + " decorations exceed the budget of " + std::to_string(budget));
    }
    if (!is_connected(g)) throw DisconnectedError("singularity graph is not connected");
    const int n = g.vertex_count();
    const int edges = g.edge_count();
    detail::DecorationCounter counter(g);
    std::vector<int> chirality(n, 1);
    std::vector<int> gluing(edges, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int v = 0; v < n; ++v) chirality[v] = (mask >> v) & 1 ? -1 : 1;
        std::fill(gluing.begin(), gluing.end(), 0);
        for (;;) {
            visit(chirality, gluing, counter.count(chirality, gluing));
            int e = 0;
            for (; e < edges && ++gluing[e] == 3; ++e) gluing[e] = 0;
            if (e == edges) break;
        }
    }
}

ExhaustiveResult exhaustive_min_cells(const RegularGraph& g, std::uint64_t budget) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> best_chirality, best_gluing;
    std::uint64_t seen = 0;
    for_each_decoration(g, budget, [&](const auto& chirality, const auto& gluing, int cells) {
        ++seen;
        if (cells < best) {
            best = cells;
            best_chirality = chirality;
            best_gluing = gluing;
        }
    });
    return {best, Spine::build(g, best_chirality, best_gluing), seen};
}

LemmaViolations check_lemmas(const Spine& s) {
    const auto d = trace_cells(s);
    LemmaViolations out;
    for (int edge = 0; edge < s.edge_count(); ++edge) {
        const auto p = edge_cell_profile(s, d, edge);
        const int distinct = distinct_cells(p);
        if (distinct == 3) out.three_cell_edge = true;
        if (distinct == 2 && has_antiparallel_pair(p)) out.antiparallel_arcs = true;
    }
    for (int v = 0; v < s.vertex_count(); ++v) {
        if (vertex_cell_count(s, d, v) > 2) out.crowded_vertex = true;
    }
    return out;
}

LemmaSweep sweep_lemmas(const RegularGraph& g, std::uint64_t budget) {
    LemmaSweep out;
    out.min_cells = std::numeric_limits<int>::max();
    for_each_decoration(g, budget, [&](const auto&, const auto&, int cells) {
        ++out.decorations;
        out.min_cells = std::min(out.min_cells, cells);
    });
    for_each_decoration(g, budget, [&](const auto& chirality, const auto& gluing, int cells) {
        if (cells != out.min_cells) {
            if (!out.negative_control && cells >= 3) {
                Spine s = Spine::build(g, chirality, gluing);
                if (check_lemmas(s).crowded_vertex) out.negative_control = std::move(s);
            }
            return;
        }
        ++out.minimal_decorations;
        const auto v = check_lemmas(Spine::build(g, chirality, gluing));
        out.three_cell_edge += v.three_cell_edge;
        out.antiparallel_arcs += v.antiparallel_arcs;
        out.crowded_vertex += v.crowded_vertex;
    });
    return out;
}

} // namespace spinecensus
