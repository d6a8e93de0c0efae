#ifndef SPINECENSUS_TESTS_SUPPORT_HPP
#define SPINECENSUS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "spinecensus/graph.hpp"
#include "spinecensus/spine.hpp"

namespace testing {

inline std::vector<spinecensus::DartPair> k5_pairs() {
    // vertex v, position p: the p-th other vertex in ascending order
    std::vector<spinecensus::DartPair> pairs;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) pairs.emplace_back(4 * u + (v - 1), 4 * v + u);
    return pairs;
}

inline spinecensus::RegularGraph k5() {
    auto pairs = k5_pairs();
    return spinecensus::build_graph(5, pairs);
}

inline spinecensus::RegularGraph two_loops() {
    const std::vector<spinecensus::DartPair> pairs{{0, 1}, {2, 3}};
    return spinecensus::build_graph(1, pairs);
}

inline spinecensus::Spine random_spine(const spinecensus::RegularGraph& g, std::mt19937_64& rng) {
    std::vector<int> chirality(g.vertex_count());
    std::vector<int> gluing(g.edge_count());
    for (auto& c : chirality) c = rng() % 2 ? 1 : -1;
    for (auto& x : gluing) x = static_cast<int>(rng() % 3);
    return spinecensus::build_spine(g, chirality, gluing);
}

struct Relabeling {
    std::vector<int> vertex_map;
    std::vector<std::array<int, 4>> local_maps;
};

inline Relabeling random_relabeling(int n, std::mt19937_64& rng) {
    Relabeling r;
    r.vertex_map.resize(n);
    std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
    std::shuffle(r.vertex_map.begin(), r.vertex_map.end(), rng);
    r.local_maps.resize(n);
    for (auto& m : r.local_maps) {
        m = {0, 1, 2, 3};
        std::shuffle(m.begin(), m.end(), rng);
    }
    return r;
}

// Every connected multigraph with up to `max_n` vertices, from the library.
std::vector<spinecensus::RegularGraph> small_multigraphs(int max_n);

} // namespace testing

#endif
