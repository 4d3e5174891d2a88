#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hlag/graph.hpp"

namespace hlag {

enum class CliqueFilter { Ignore, Require, Forbid };

// Request for the stream of left-compressed r-graphs on the vertex set
// {1..l} with exactly m edges. The clique filter keeps or drops graphs
// containing a complete r-graph on l-1 vertices.
struct EnumerationSpec {
    int r = 3;
    int l = 5;
    std::uint64_t m = 1;
    CliqueFilter clique_filter = CliqueFilter::Ignore;
};

// Emits every left-compressed r-graph matching the spec exactly once, in a
// deterministic order (lexicographic on the colex-rank sequences of the
// edge sets). Left-compressed edge sets are exactly the down-sets of the
// coordinatewise dominance order, and each down-set is grown along its
// colex-sorted edge list, so no deduplication is needed. The visitor may
// return false to stop early. Out-of-scale requests are refused with
// std::domain_error rather than attempted.
void enumerate_left_compressed(const EnumerationSpec& spec,
                               const std::function<bool(const RUniformGraph&)>& visit);

std::vector<RUniformGraph> enumerate_left_compressed_all(const EnumerationSpec& spec);

std::uint64_t count_left_compressed(const EnumerationSpec& spec);

// True when the spec is within the supported desk scale.
bool enumeration_in_scale(const EnumerationSpec& spec);

}  // namespace hlag
