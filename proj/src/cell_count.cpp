#include "cell_count.hpp"

#include <algorithm>

#include "spinecensus/spine.hpp"

namespace spinecensus::detail {

DecorationCounter::DecorationCounter(const RegularGraph& g)
    : graph_(g), corner_(corner_map(g)), edge_(corner_.size()), seen_(corner_.size()) {}

int DecorationCounter::count(std::span<const int> chirality, std::span<const int> gluing) {
    for (int edge = 0; edge < graph_.edge_count(); ++edge) {
        const int lo = graph_.lower_dart(edge);
        const int hi = graph_.upper_dart(edge);
        const int lo_pos = RegularGraph::position_of(lo);
        const int hi_pos = RegularGraph::position_of(hi);
        const int lo_chi = chirality[RegularGraph::vertex_of(lo)];
        const int hi_chi = chirality[RegularGraph::vertex_of(hi)];
        for (int r = 0; r < 3; ++r) {
            const int k = slots::cyclic_position(lo_pos, lo_chi, r);
            const int r2 = slots::rank_at_cyclic(hi_pos, hi_chi, (gluing[edge] - k + 3) % 3);
            edge_[slots::id(lo, r)] = slots::id(hi, r2);
            edge_[slots::id(hi, r2)] = slots::id(lo, r);
        }
    }
    std::fill(seen_.begin(), seen_.end(), 0);
    int orbits = 0;
    for (std::size_t x = 0; x < seen_.size(); ++x) {
        if (seen_[x]) continue;
        ++orbits;
        for (int y = static_cast<int>(x); !seen_[y]; y = edge_[corner_[y]]) seen_[y] = 1;
    }
    return orbits / 2;
}

} // namespace spinecensus::detail
