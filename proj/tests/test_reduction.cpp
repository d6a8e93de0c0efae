#include <random>

#include "doctest.h"
#include "spinecensus/errors.hpp"
#include "spinecensus/reduction.hpp"
#include "support.hpp"

using namespace spinecensus;

TEST_CASE("seed spine and replay") {
    auto g = testing::k5();
    auto seed = seed_spine(g);
    for (int c : seed.chirality()) CHECK(c == 1);
    for (int x : seed.gluing()) CHECK(x == 0);
    auto result = minimize_cells(g);
    CHECK(replay(seed, result.trace) == result.spine);
    CHECK(result.cell_count == count_cells(result.spine));
    for (auto& step : result.trace.steps) CHECK(step.after < step.before);
}

TEST_CASE("a reducing rotation lowers the cell count") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = testing::random_spine(testing::k5(), rng);
        auto r = find_reducing_rotation(s);
        if (!r) continue;
        auto t = s;
        for (int k = 0; k < r->turns; ++k) t = rotate_edge(t, r->edge);
        CHECK(count_cells(t) < count_cells(s));
        if (r->rule == rules::kThreeCellEdge) {
            auto d = trace_cells(s);
            auto p = edge_cell_profile(s, d, r->edge);
            CHECK(p[0].cell != p[1].cell);
            CHECK(p[1].cell != p[2].cell);
            CHECK(p[0].cell != p[2].cell);
        }
    }
}

TEST_CASE("minimize reaches two cells on every small simple graph") {
    for (int n = 5; n <= 7; ++n) {
        for (auto& g : enumerate_A(n)) {
            auto result = minimize_cells(g);
            CHECK(result.cell_count <= 2);
            CHECK(replay(seed_spine(g), result.trace) == result.spine);
        }
    }
}

TEST_CASE("minimize matches the exhaustive minimum on small multigraphs") {
    for (auto& g : testing::small_multigraphs(3)) {
        auto exhaustive = exhaustive_min_cells(g);
        auto result = minimize_cells(g);
        if (exhaustive.min_cells <= 2) CHECK(result.cell_count == exhaustive.min_cells);
        else CHECK(result.cell_count >= exhaustive.min_cells);
        CHECK(replay(seed_spine(g), result.trace) == result.spine);
    }
}

TEST_CASE("one vertex with two loops needs two cells") {
    auto g = testing::two_loops();
    CHECK(exhaustive_min_cells(g).min_cells == 2);
    CHECK(minimize_cells(g).cell_count == 2);
    CHECK(decoration_count(1) == 18);
    CHECK(decoration_count(2) == 324);
}

TEST_CASE("a stuck greedy start is rescued by a vertex-case transfer") {
    auto graphs = enumerate_A(7);
    REQUIRE(graphs.size() == 2);
    auto start = build_spine(graphs[1], {-1, -1, 1, -1, 1, -1, -1}, {0, 2, 1, 0, 2, 1, 0, 0, 1, 1, 0, 0, 0, 0});
    CHECK(count_cells(start) == 3);
    auto result = minimize_cells(start);
    CHECK(result.cell_count <= 2);
    bool transfer = false;
    for (auto& step : result.trace.steps) transfer |= step.rule.rfind("vertex-case", 0) == 0;
    CHECK(transfer);
    CHECK(replay(start, result.trace) == result.spine);
}

TEST_CASE("random starts on simple graphs reduce and replay") {
    std::mt19937_64 rng(37);
    for (int n = 5; n <= 8; ++n) {
        for (auto& g : enumerate_A(n)) {
            for (int trial = 0; trial < 20; ++trial) {
                auto s = testing::random_spine(g, rng);
                auto result = minimize_cells(s);
                CHECK(result.cell_count <= 2);
                CHECK(replay(s, result.trace) == result.spine);
            }
        }
    }
}

TEST_CASE("exhaustive sweep budget and ordering") {
    auto g = testing::two_loops();
    CHECK_THROWS_AS(exhaustive_min_cells(g, 10), LimitError);
    std::vector<std::vector<int>> seen;
    for_each_decoration(g, 18, [&](const std::vector<int>& chi, const std::vector<int>& glu, int) {
        seen.push_back({chi[0], glu[0], glu[1]});
    });
    REQUIRE(seen.size() == 18);
    CHECK(seen[0] == std::vector<int>{1, 0, 0});
    CHECK(seen[1] == std::vector<int>{1, 1, 0});
    CHECK(seen[9] == std::vector<int>{-1, 0, 0});
}

TEST_CASE("lemma predicates hold at every minimum for n <= 2") {
    for (auto& g : testing::small_multigraphs(2)) {
        auto sweep = sweep_lemmas(g);
        CHECK(sweep.violations() == 0);
        CHECK(sweep.minimal_decorations > 0);
        CHECK(sweep.decorations == decoration_count(g.vertex_count()));
    }
}

TEST_CASE("crowded vertices are detected on non-minimal spines") {
    std::mt19937_64 rng(41);
    bool found = false;
    for (int trial = 0; trial < 500 && !found; ++trial) {
        auto s = testing::random_spine(testing::k5(), rng);
        auto d = trace_cells(s);
        for (int v = 0; v < s.vertex_count(); ++v) found |= vertex_cell_count(s, d, v) >= 3;
        if (found) CHECK(check_lemmas(s).crowded_vertex);
    }
    CHECK(found);
}

TEST_CASE("loop insertion yields one cell") {
    for (int n = 5; n <= 7; ++n) {
        for (auto& g : enumerate_A(n)) {
            auto reduced = minimize_cells(g).spine;
            auto edge = find_gluing_edge(reduced);
            REQUIRE(edge.has_value());
            auto grown = insert_loop_vertex(reduced, *edge);
            CHECK(grown.vertex_count() == n + 1);
            CHECK(count_cells(grown) == 1);
            CHECK(grown.graph().edge_count() == reduced.graph().edge_count() + 2);
        }
    }
}

TEST_CASE("loop insertion preconditions") {
    auto s = seed_spine(testing::k5());
    CHECK_THROWS_AS(insert_loop_vertex(s, -1), UnknownEdgeError);
    CHECK_THROWS_AS(is_cutable(s, 99), UnknownEdgeError);
    if (count_cells(s) > 2) CHECK_THROWS_AS(insert_loop_vertex(s, 0), PreconditionError);
}

TEST_CASE("cut rules") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = testing::random_spine(testing::k5(), rng);
        for (int e = 0; e < s.edge_count(); ++e)
            if (is_cutable(s, e, CutRule::ThroughNonCyclic)) CHECK(is_cutable(s, e, CutRule::ThroughStrands));
    }
}
