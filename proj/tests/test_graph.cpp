#include <doctest.h>

#include <algorithm>
#include <random>

#include "hlag/graph.hpp"

using namespace hlag;

TEST_CASE("graph document parsing and canonicalization") {
    RUniformGraph g = RUniformGraph::parse(R"({"r":3,"n":4,"edges":[[1,2,3],[1,2,4]]})");
    CHECK(g.edge_count() == 2);
    CHECK(g.r() == 3);
    CHECK(g.vertex_count() == 4);

    RUniformGraph sorted = RUniformGraph::parse(R"({"r":3,"n":4,"edges":[[2,1,3]]})");
    CHECK(sorted.edges()[0] == VertexSet{1, 2, 3});

    // duplicates collapse
    RUniformGraph dup = RUniformGraph::parse(R"({"r":3,"n":4,"edges":[[1,2,3],[3,2,1]]})");
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_WITH_AS(RUniformGraph::parse(R"({"r":3,"n":4,"edges":[[1,2,5]]})"),
                         doctest::Contains("out of range"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(RUniformGraph::parse(R"({"r":3,"n":4,"edges":[[1,2]]})"),
                         doctest::Contains("arity"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(RUniformGraph::parse(R"({"r":3,"n":4,"edges":[[1,2,2]]})"),
                         doctest::Contains("repeated"), std::invalid_argument);
    CHECK_THROWS_AS(RUniformGraph::parse("not json"), std::invalid_argument);
    CHECK_THROWS_AS(RUniformGraph::parse(R"({"n":4,"edges":[]})"), std::invalid_argument);
}

TEST_CASE("document round-trip keeps colex order") {
    RUniformGraph g = RUniformGraph::colex_initial_segment(3, 8);
    RUniformGraph back = RUniformGraph::parse(g.to_json_text());
    CHECK(back == g);
    for (std::size_t i = 1; i < g.edges().size(); ++i)
        CHECK(colex_compare(g.edges()[i - 1], g.edges()[i]) == std::strong_ordering::less);
}

TEST_CASE("colex initial segments") {
    RUniformGraph c4 = RUniformGraph::colex_initial_segment(3, 4);
    CHECK(c4 == RUniformGraph::complete(4, 3));

    RUniformGraph c8 = RUniformGraph::colex_initial_segment(3, 8);
    std::vector<VertexSet> expected = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                                       {1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {1, 4, 5}};
    CHECK(c8.edges() == expected);
    CHECK(c8.vertex_count() == 5);

    RUniformGraph pairs = RUniformGraph::colex_initial_segment(2, 3);
    CHECK(pairs == RUniformGraph::complete(3, 2));

    CHECK_THROWS_AS(RUniformGraph::colex_initial_segment(3, 0), std::invalid_argument);
}

TEST_CASE("initial segment of C(l,r) edges is the complete graph") {
    for (int r = 2; r <= 5; ++r)
        for (int l = r; l <= 10; ++l)
            CHECK(RUniformGraph::colex_initial_segment(r, binomial(l, r)) ==
                  RUniformGraph::complete(l, r));
}

TEST_CASE("complete graph sizes") {
    CHECK(RUniformGraph::complete(4, 3).edge_count() == 4);
    CHECK(RUniformGraph::complete(3, 3).edge_count() == 1);
    CHECK(RUniformGraph::complete(5, 2).edge_count() == 10);
    CHECK_THROWS_AS(RUniformGraph::complete(2, 3), std::invalid_argument);
}

TEST_CASE("links") {
    RUniformGraph c8 = RUniformGraph::colex_initial_segment(3, 8);
    CHECK(link(c8, {5}) == std::vector<VertexSet>{{1, 2}, {1, 3}, {2, 3}, {1, 4}});
    CHECK(link(c8, {4, 5}) == std::vector<VertexSet>{{1}});
    CHECK(link(RUniformGraph::complete(4, 3), {1}) ==
          std::vector<VertexSet>{{2, 3}, {2, 4}, {3, 4}});
    CHECK_THROWS_AS(link(c8, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(link(c8, VertexSet{}), std::invalid_argument);
}

TEST_CASE("link differences") {
    RUniformGraph c8 = RUniformGraph::colex_initial_segment(3, 8);
    CHECK(link_difference(c8, 1, 4) == std::vector<VertexSet>{{2, 5}, {3, 5}});
    CHECK(link_difference(RUniformGraph::complete(4, 3), 1, 2).empty());
    CHECK(link_difference(c8, 5, 4).empty());
    CHECK_THROWS_AS(link_difference(c8, 2, 2), std::invalid_argument);
}

TEST_CASE("left-compression recognition") {
    CHECK(is_left_compressed(RUniformGraph::colex_initial_segment(3, 8)));
    CHECK(is_left_compressed(RUniformGraph::complete(4, 3)));
    RUniformGraph bad(3, 5, {{1, 2, 4}, {1, 3, 5}});
    CHECK_FALSE(is_left_compressed(bad));
    // every colex initial segment is a dominance down-set
    for (std::uint64_t m = 1; m <= 20; ++m)
        CHECK(is_left_compressed(RUniformGraph::colex_initial_segment(3, m)));
}

TEST_CASE("compression to the left-compressed fixpoint") {
    RUniformGraph g(3, 5, {{1, 2, 4}, {1, 3, 5}});
    RUniformGraph c = compress(g);
    CHECK(c.edges() == std::vector<VertexSet>{{1, 2, 3}, {1, 2, 4}});
    CHECK(is_left_compressed(c));

    RUniformGraph c8 = RUniformGraph::colex_initial_segment(3, 8);
    CHECK(compress(c8) == c8);
    RUniformGraph k4 = RUniformGraph::complete(4, 3);
    CHECK(compress(k4) == k4);
}

TEST_CASE("compression properties on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);  // 4..7
        int r = 2 + static_cast<int>(rng() % 2);  // 2..3
        std::vector<VertexSet> edges;
        for (const auto& e : all_subsets(n, r))
            if (rng() % 3 == 0) edges.push_back(e);
        if (edges.empty()) continue;
        RUniformGraph g(r, n, edges);
        RUniformGraph c = compress(g);
        CHECK(c.edge_count() == g.edge_count());
        CHECK(is_left_compressed(c));
        CHECK(compress(c) == c);  // idempotent
        // left-compressed means all backward link differences vanish
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK(link_difference(c, j, i).empty());
    }
}

TEST_CASE("maximum clique order") {
    CHECK(max_clique_order(RUniformGraph::colex_initial_segment(3, 8)) == 4);
    CHECK(max_clique_order(RUniformGraph::complete(5, 3)) == 5);
    CHECK(max_clique_order(RUniformGraph(3, 3, {{1, 2, 3}})) == 3);
    CHECK(max_clique_order(RUniformGraph(3, 6, {})) == 2);  // vacuous convention
    CHECK(max_clique_order(RUniformGraph(2, 4, {{1, 2}, {3, 4}})) == 2);
}

TEST_CASE("clique order via top edge criterion on left-compressed graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<VertexSet> edges;
        for (const auto& e : all_subsets(n, 3))
            if (rng() % 2 == 0) edges.push_back(e);
        if (edges.empty()) continue;
        RUniformGraph c = compress(RUniformGraph(3, n, edges));
        int direct = max_clique_order(c);
        int by_top = 2;  // r-1
        for (int t = 3; t <= n; ++t) {
            VertexSet top = {t - 2, t - 1, t};
            if (c.has_edge(top)) by_top = t;
        }
        CHECK(direct == by_top);
    }
}

TEST_CASE("max_cliques returns every maximum clique") {
    RUniformGraph g(2, 5, {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {4, 5}});
    auto cliques = max_cliques(g);
    REQUIRE(cliques.size() == 1);
    CHECK(cliques[0] == VertexSet{1, 2, 3});
    auto complete = max_cliques(RUniformGraph::complete(4, 2));
    REQUIRE(complete.size() == 1);
    CHECK(complete[0] == VertexSet{1, 2, 3, 4});
}
