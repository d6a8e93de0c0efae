#ifndef SPINECENSUS_SRC_CELL_COUNT_HPP
#define SPINECENSUS_SRC_CELL_COUNT_HPP

#include <span>
#include <vector>

#include "spinecensus/graph.hpp"

namespace spinecensus::detail {

/// Cell counting for sweeps over many decorations of one graph, without
/// building Spine values.
class DecorationCounter {
public:
    explicit DecorationCounter(const RegularGraph& g);

    int count(std::span<const int> chirality, std::span<const int> gluing);

private:
    const RegularGraph& graph_;
    std::vector<int> corner_;
    std::vector<int> edge_;
    std::vector<char> seen_;
};

} // namespace spinecensus::detail

#endif
