#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hlag/enumerate.hpp"
#include "hlag/graph.hpp"
#include "hlag/parallel.hpp"
#include "hlag/solver.hpp"

using namespace hlag;

// The maximum Lagrangian over all graphs with m edges equals the maximum
// over the left-compressed ones. Exhaustive over edge subsets of [6]^{(3)};
// the full stream gets the default solver, the big sweep a lighter one
// (an undershoot there can only hide violations, never invent one).
TEST_CASE("left-compressed graphs attain the per-size maximum") {
    const int n = 6;
    std::vector<VertexSet> ground = all_subsets(n, 3);
    SolverConfig light;
    light.restarts = 2;
    light.max_iterations = 3000;

    for (std::uint64_t m = 1; m <= 8; ++m) {
        double compressed_best = 0.0;
        for (const auto& g : enumerate_left_compressed_all({3, n, m, CliqueFilter::Ignore}))
            compressed_best = std::max(compressed_best, maximize(g).value);

        // all C(20, m) edge subsets
        std::vector<std::vector<int>> picks;
        std::vector<int> pick(m);
        auto gen = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
            if (depth == m) {
                picks.push_back(pick);
                return;
            }
            for (std::size_t i = start; i < ground.size(); ++i) {
                pick[depth] = static_cast<int>(i);
                self(self, i + 1, depth + 1);
            }
        };
        gen(gen, 0, 0);

        std::vector<double> values(picks.size());
        parallel_for_index(picks.size(), [&](std::size_t i) {
            std::vector<VertexSet> edges;
            edges.reserve(m);
            for (int idx : picks[i]) edges.push_back(ground[idx]);
            values[i] = maximize(RUniformGraph(3, n, edges), light).value;
        });
        double overall_best = *std::max_element(values.begin(), values.end());

        CHECK(overall_best <= compressed_best + 1e-6);
        CHECK(overall_best >= compressed_best - 1e-9);  // the stream is included
    }
}
