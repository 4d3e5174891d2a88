#pragma once

#include <vector>

namespace hlag {

// Maximum matching in a bipartite graph by augmenting paths, O(V*E).
// Sources and targets are indexed 0..n-1 / 0..m-1; adjacency lists are
// per-source. Deterministic for a fixed adjacency order.
struct BipartiteMatcher {
    std::vector<std::vector<int>> adj;
    std::vector<int> matched_source;  // per target, -1 if free
    std::vector<int> matched_target;  // per source, -1 if free
    std::vector<int> visited;
    int stamp = 0;

    BipartiteMatcher(int sources, int targets)
        : adj(sources), matched_source(targets, -1), matched_target(sources, -1),
          visited(sources, 0) {}

    void add_edge(int source, int target) { adj[source].push_back(target); }

    bool augment(int s) {
        visited[s] = stamp;
        for (int t : adj[s]) {
            if (matched_source[t] == -1) {
                matched_source[t] = s;
                matched_target[s] = t;
                return true;
            }
        }
        for (int t : adj[s]) {
            int other = matched_source[t];
            if (visited[other] != stamp && augment(other)) {
                matched_source[t] = s;
                matched_target[s] = t;
                return true;
            }
        }
        return false;
    }

    int solve() {
        int size = 0;
        for (int s = 0; s < static_cast<int>(adj.size()); ++s) {
            ++stamp;
            if (matched_target[s] == -1 && augment(s)) ++size;
        }
        return size;
    }
};

}  // namespace hlag
