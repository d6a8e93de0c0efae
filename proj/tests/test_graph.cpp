#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spinecensus/errors.hpp"
#include "spinecensus/graph.hpp"
#include "support.hpp"

using namespace spinecensus;

TEST_CASE("K5 builds as a simple connected graph") {
    auto g = testing::k5();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 10);
    CHECK(g.is_simple());
    CHECK(is_connected(g));
    for (int d = 0; d < g.dart_count(); ++d) {
        CHECK(g.partner(g.partner(d)) == d);
        CHECK(g.partner(d) != d);
    }
    for (int e = 0; e < g.edge_count(); ++e) CHECK(g.lower_dart(e) < g.upper_dart(e));
}

TEST_CASE("build rejects malformed pairings") {
    const std::vector<DartPair> self{{0, 0}, {1, 2}};
    CHECK_THROWS_AS(build_graph(1, self), SelfPairError);
    const std::vector<DartPair> short_pairs{{0, 1}};
    CHECK_THROWS_AS(build_graph(1, short_pairs), DegreeError);
    const std::vector<DartPair> twice{{0, 1}, {1, 2}};
    CHECK_THROWS_AS(build_graph(1, twice), DegreeError);
    const std::vector<DartPair> outside{{0, 1}, {2, 9}};
    CHECK_THROWS_AS(build_graph(1, outside), DegreeError);
    CHECK_THROWS_AS(build_graph(0, {}), DegreeError);
}

TEST_CASE("graph_from_multiplicities") {
    auto g = graph_from_multiplicities({{2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.is_loop(0));
    CHECK(g.multiplicity_matrix() == std::vector<std::vector<int>>{{2}});
    auto h = graph_from_multiplicities({{0, 4}, {4, 0}});
    CHECK(!h.is_simple());
    CHECK(h.multiplicity_matrix()[0][1] == 4);
    CHECK_THROWS_AS(graph_from_multiplicities({{3}}), DegreeError);
}

TEST_CASE("disconnected graphs are detected") {
    const std::vector<DartPair> pairs{{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    CHECK(!is_connected(build_graph(2, pairs)));
}

TEST_CASE("canonical code survives random relabeling") {
    std::mt19937_64 rng(11);
    std::vector<RegularGraph> pool = testing::small_multigraphs(4);
    for (int n = 5; n <= 8; ++n)
        for (auto& g : enumerate_A(n)) pool.push_back(g);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& g = pool[trial % pool.size()];
        auto r = testing::random_relabeling(g.vertex_count(), rng);
        auto h = relabel(g, r.vertex_map, r.local_maps);
        REQUIRE(canonical_form(h) == canonical_form(g));
    }
}

TEST_CASE("canonical codes separate the classes of C_4") {
    auto classes = enumerate_C(4);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            CHECK(oracle::min_matrix_key(classes[i].multiplicity_matrix()) !=
                  oracle::min_matrix_key(classes[j].multiplicity_matrix()));
}

TEST_CASE("canonical code hex round trip") {
    auto code = canonical_form(testing::k5());
    CHECK(CanonicalCode::from_hex(code.hex()) == code);
    CHECK_THROWS_AS(CanonicalCode::from_hex("abc"), ValidationError);
    CHECK_THROWS_AS(CanonicalCode::from_hex("zz"), ValidationError);
}

TEST_CASE("enumerate_A matches the adjacency-matrix oracle") {
    CHECK(enumerate_A(4).empty());
    CHECK(enumerate_A(5).size() == 1);
    for (int n = 5; n <= 7; ++n) {
        auto graphs = enumerate_A(n);
        CHECK(graphs.size() == oracle::count_simple(n));
        for (auto& g : graphs) {
            CHECK(g.is_simple());
            CHECK(is_connected(g));
        }
    }
    CHECK(enumerate_A(8).size() == 6);
}

TEST_CASE("enumerate_A(5) is K5") {
    auto graphs = enumerate_A(5);
    REQUIRE(graphs.size() == 1);
    CHECK(canonical_form(graphs[0]) == canonical_form(testing::k5()));
}

TEST_CASE("enumerate_C matches the dart-pairing oracle") {
    for (int n = 1; n <= 3; ++n) CHECK(enumerate_C(n).size() == oracle::count_multi(n));
    CHECK(enumerate_C(1).size() == 1);
    CHECK(enumerate_C(2).size() == 2);
    CHECK(enumerate_C(3).size() == 4);
}

TEST_CASE("enumeration output is sorted and respects limits") {
    auto graphs = enumerate_C(4);
    for (std::size_t i = 1; i < graphs.size(); ++i)
        CHECK(canonical_form(graphs[i - 1]) < canonical_form(graphs[i]));
    CHECK_THROWS_AS(enumerate_A(9), LimitError);
    CHECK_THROWS_AS(enumerate_C(7), LimitError);
    CHECK_THROWS_AS(enumerate_C(3, EnumerationLimits{8, 2}), LimitError);
}
