#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlag/combinatorics.hpp"

namespace hlag {

// An r-uniform graph on vertex set {1..n}. Edges are strictly increasing
// r-tuples, deduplicated, kept in colex order. Instances are immutable
// after construction, so they can be shared freely across threads.
class RUniformGraph {
  public:
    // Canonicalizes: sorts each edge, validates, dedups, orders by colex.
    // Throws std::invalid_argument naming the offending edge.
    RUniformGraph(int r, int n, std::vector<VertexSet> edges);

    // Parses the canonical graph document:
    //   {"r": int, "n": int, "edges": [[int,...],...]}
    static RUniformGraph parse(const std::string& text);

    // C_{r,m}: the first m r-sets in colex order; n is the largest vertex used.
    static RUniformGraph colex_initial_segment(int r, std::uint64_t m);

    // [t]^{(r)}: all C(t,r) r-subsets of {1..t}. Requires t >= r.
    static RUniformGraph complete(int t, int r);

    int r() const { return r_; }
    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const std::vector<std::uint64_t>& edge_ranks() const { return ranks_; }

    bool has_edge(const VertexSet& e) const;
    bool has_edge_rank(std::uint64_t rank) const;

    // Canonical document, edges in colex order.
    std::string to_json_text(int indent = -1) const;

    bool operator==(const RUniformGraph& o) const {
        return r_ == o.r_ && n_ == o.n_ && ranks_ == o.ranks_;
    }

  private:
    int r_;
    int n_;
    std::vector<VertexSet> edges_;     // colex order
    std::vector<std::uint64_t> ranks_; // colex ranks of edges_, ascending
};

// E_S = { T : T disjoint from S, T union S is an edge }, |S| in {1,2};
// the result is colex-sorted (r-|S|)-sets.
std::vector<VertexSet> link(const RUniformGraph& g, const VertexSet& s);

// E_{i\j} = { A : A+i is an edge, A+j is not, A disjoint from {i,j} }.
std::vector<VertexSet> link_difference(const RUniformGraph& g, Vertex i, Vertex j);

// True iff replacing any vertex of any edge by a smaller non-member
// always lands on an edge (downward closed under coordinatewise decrease).
bool is_left_compressed(const RUniformGraph& g);

// Repeated pair compressions (i<j, lexicographic sweeps) to a fixpoint.
// Preserves the edge count; the result is left-compressed.
RUniformGraph compress(const RUniformGraph& g);

// Order of a maximum clique (largest t whose t-set induces all C(t,r)
// edges), found by backtracking. Edgeless graphs report r-1: any (r-1)-set
// is vacuously complete, which keeps clique-containment checks monotone.
int max_clique_order(const RUniformGraph& g);

// Vertex sets of maximum cliques, in discovery (colex-ish DFS) order,
// truncated to at most `cap` sets.
std::vector<VertexSet> max_cliques(const RUniformGraph& g, std::size_t cap = 32);

// True iff some t vertices induce a complete sub-r-graph.
bool has_clique_of_order(const RUniformGraph& g, int t);

}  // namespace hlag
