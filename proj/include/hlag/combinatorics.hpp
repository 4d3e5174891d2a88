#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace hlag {

// Vertices are 1-based throughout; a VertexSet is strictly increasing.
using Vertex = int;
using VertexSet = std::vector<Vertex>;

// Binomial coefficient C(n, k). Throws std::overflow_error if the value
// does not fit in uint64.
std::uint64_t binomial(int n, int k);

// Colex order on equal-size sets: A < B iff max(A triangle B) lies in B.
// Throws std::invalid_argument on size mismatch.
std::strong_ordering colex_compare(const VertexSet& a, const VertexSet& b);

// 1-based position of A in the colex ordering of all |A|-subsets of
// {1,2,...}. rank({1,...,r}) == 1.
std::uint64_t colex_rank(const VertexSet& a);

// Inverse of colex_rank: the k-th r-set in colex order, k >= 1.
VertexSet colex_unrank(int r, std::uint64_t k);

// True iff the set is strictly increasing with all elements >= lo.
bool is_strictly_increasing(const VertexSet& a, Vertex lo = 1);

// All k-subsets of {1..n} in colex order.
std::vector<VertexSet> all_subsets(int n, int k);

}  // namespace hlag
