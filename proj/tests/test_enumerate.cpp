#include <doctest.h>

#include <algorithm>
#include <set>

#include "hlag/enumerate.hpp"
#include "hlag/graph.hpp"

using namespace hlag;

namespace {

std::set<std::vector<std::uint64_t>> rank_signatures(const std::vector<RUniformGraph>& graphs) {
    std::set<std::vector<std::uint64_t>> out;
    for (const auto& g : graphs) out.insert(g.edge_ranks());
    return out;
}

// Independent reference: filter all m-subsets of [l]^{(r)} by the
// left-compression predicate.
std::set<std::vector<std::uint64_t>> brute_force_left_compressed(int r, int l, std::uint64_t m) {
    std::vector<VertexSet> ground = all_subsets(l, r);
    std::set<std::vector<std::uint64_t>> out;
    std::vector<int> pick(m);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == m) {
            std::vector<VertexSet> edges;
            for (std::size_t i = 0; i < m; ++i) edges.push_back(ground[pick[i]]);
            RUniformGraph g(r, l, edges);
            if (is_left_compressed(g)) out.insert(g.edge_ranks());
            return;
        }
        for (std::size_t i = start; i < ground.size(); ++i) {
            pick[depth] = static_cast<int>(i);
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

TEST_CASE("enumeration at tiny scale") {
    auto two_edges = enumerate_left_compressed_all({3, 4, 2, CliqueFilter::Ignore});
    REQUIRE(two_edges.size() == 1);
    CHECK(two_edges[0].edges() == std::vector<VertexSet>{{1, 2, 3}, {1, 2, 4}});

    auto four_edges = enumerate_left_compressed_all({3, 4, 4, CliqueFilter::Ignore});
    REQUIRE(four_edges.size() == 1);
    CHECK(four_edges[0] == RUniformGraph(3, 4, RUniformGraph::complete(4, 3).edges()));

    // forbidding the 4-clique on [5] means the edge 234 never appears
    auto clique_free = enumerate_left_compressed_all({3, 5, 4, CliqueFilter::Forbid});
    CHECK(!clique_free.empty());
    for (const auto& g : clique_free) CHECK_FALSE(g.has_edge({2, 3, 4}));
}

TEST_CASE("enumeration is complete against the brute-force filter") {
    for (int l : {4, 5}) {
        for (std::uint64_t m = 1; m <= binomial(l, 3); ++m) {
            auto stream = enumerate_left_compressed_all({3, l, m, CliqueFilter::Ignore});
            auto reference = brute_force_left_compressed(3, l, m);
            CHECK(rank_signatures(stream).size() == stream.size());  // no duplicates
            CHECK(rank_signatures(stream) == reference);
        }
    }
}

TEST_CASE("every emitted graph is left-compressed and the filters agree with cliques") {
    for (std::uint64_t m = 4; m <= 7; ++m) {
        auto required = enumerate_left_compressed_all({3, 5, m, CliqueFilter::Require});
        for (const auto& g : required) {
            CHECK(is_left_compressed(g));
            CHECK(max_clique_order(g) >= 4);
        }
        auto forbidden = enumerate_left_compressed_all({3, 5, m, CliqueFilter::Forbid});
        for (const auto& g : forbidden) {
            CHECK(is_left_compressed(g));
            CHECK(max_clique_order(g) < 4);
        }
        auto all = enumerate_left_compressed_all({3, 5, m, CliqueFilter::Ignore});
        CHECK(all.size() == required.size() + forbidden.size());
    }
}

TEST_CASE("enumeration order is deterministic and colex-graded") {
    auto stream = enumerate_left_compressed_all({3, 6, 5, CliqueFilter::Ignore});
    auto again = enumerate_left_compressed_all({3, 6, 5, CliqueFilter::Ignore});
    REQUIRE(stream.size() == again.size());
    for (std::size_t i = 0; i < stream.size(); ++i) CHECK(stream[i] == again[i]);
    for (std::size_t i = 1; i < stream.size(); ++i)
        CHECK(stream[i - 1].edge_ranks() < stream[i].edge_ranks());
}

TEST_CASE("scale guard refuses out-of-scope requests") {
    CHECK_THROWS_AS((void)enumerate_left_compressed_all({3, 9, 30, CliqueFilter::Ignore}),
                    std::domain_error);
    CHECK_THROWS_AS((void)enumerate_left_compressed_all({4, 8, 5, CliqueFilter::Ignore}),
                    std::domain_error);
    CHECK_THROWS_AS((void)enumerate_left_compressed_all({5, 7, 5, CliqueFilter::Ignore}),
                    std::domain_error);
    CHECK_NOTHROW((void)enumerate_left_compressed_all({4, 6, 6, CliqueFilter::Ignore}));
}

TEST_CASE("early stop from the visitor") {
    std::size_t seen = 0;
    enumerate_left_compressed({3, 6, 4, CliqueFilter::Ignore}, [&](const RUniformGraph&) {
        ++seen;
        return seen < 2;
    });
    CHECK(seen == 2);
}
