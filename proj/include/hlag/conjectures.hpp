#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlag/enumerate.hpp"
#include "hlag/graph.hpp"
#include "hlag/rational.hpp"
#include "hlag/solver.hpp"

namespace hlag {

enum class Verdict { Holds, Counterexample, Inconclusive };

std::string verdict_name(Verdict v);

// Numeric gates for claiming equality with or strict separation from the
// benchmark Lagrangian. A strict conclusion additionally requires the
// stationarity residual gate; a counterexample is only ever declared after
// an exact rational certificate.
struct MarginPolicy {
    double equality_tol = 1e-6;
    double strict_margin = 1e-6;
    double kkt_gate = 1e-8;
};

// One (r, l, m) cell of a verification run.
struct VerdictCell {
    int r = 0;
    int l = 0;
    std::uint64_t m = 0;
    Verdict verdict = Verdict::Holds;
    double margin = 0.0;
    std::uint64_t graphs_examined = 0;
    std::optional<std::string> witness_json;  // graph document of the offending graph
    std::optional<std::string> note;

    std::string to_json_text() const;
};

struct ConjectureVerdict {
    Verdict verdict = Verdict::Holds;
    double margin = 0.0;
    std::uint64_t graphs_examined = 0;
    std::vector<VerdictCell> cells;
};

// Equality conjecture on clique-carrying graphs: every left-compressed
// r-graph on [l] with m edges containing the complete r-graph on [l-1]
// has the benchmark Lagrangian. Cell margin is the worst |value-benchmark|.
ConjectureVerdict conjecture1_check(int r, int l, std::uint64_t m_lo, std::uint64_t m_hi,
                                    const SolverConfig& cfg = {},
                                    const MarginPolicy& policy = {});

// Strict-inequality conjecture on clique-free 3-graphs; cell margin is the
// smallest benchmark-value gap. Also reports, per cell, the largest number
// of missing [l-1]-triples among enumerated graphs (deficiency diagnostic).
ConjectureVerdict conjecture2_check(int l, std::uint64_t m_lo, std::uint64_t m_hi,
                                    const SolverConfig& cfg = {},
                                    const MarginPolicy& policy = {});

// Largest-Lagrangian conjecture: among all r-graphs with m edges (left-
// compressed representatives suffice), the colex initial segment attains
// the maximum. With vertex_cap set, the search is over graphs on that many
// vertices. Margin is best_over_stream - value(C_{r,m}) (<= tol when it holds).
ConjectureVerdict frankl_furedi_check(int r, std::uint64_t m,
                                      std::optional<int> vertex_cap = std::nullopt,
                                      const SolverConfig& cfg = {},
                                      const MarginPolicy& policy = {});

// Hypothesis and conclusion of the counting theorem: when the free
// (r-1)-sets below l outnumber 2^{r-3} times the pair link of {l-1, l},
// the Lagrangian matches the benchmark (clique present) or stays strictly
// below it (clique absent).
struct Theorem2aResult {
    bool hypothesis_holds = false;
    std::uint64_t free_sets = 0;       // |[l-2]^{(r-1)} \ E_l|
    std::uint64_t pair_link_size = 0;  // |E_{(l-1)l}|
    bool clique_present = false;
    Verdict conclusion = Verdict::Holds;  // meaningful only when the hypothesis holds
    double value = 0.0;
    double benchmark = 0.0;
    double margin = 0.0;
};

Theorem2aResult theorem_2a_check(const RUniformGraph& g, int l, const SolverConfig& cfg = {},
                                 const MarginPolicy& policy = {});

// Injection from the pair link of {l-1, l} into the free (r-1)-sets below
// l, respecting the interleaving constraint j_k <= i_{k+1}. Found by
// augmenting-path matching; for r=3 the constraint is vacuous, so existence
// is exactly the cardinality comparison.
struct MatchingCertificate {
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    bool complete = false;
    std::uint64_t source_count = 0;
    std::uint64_t target_count = 0;
};

MatchingCertificate theorem3_matching(const RUniformGraph& g, int l);

// Edge-budget theorem: any graph with a clique on l-1 vertices and at most
// C(l-1,r) + 2(l-r) edges has the benchmark Lagrangian. Verified over the
// left-compressed stream on [l]; sample_budget = 0 means exhaustive,
// otherwise the first `sample_budget` graphs per edge count are taken.
ConjectureVerdict theorem39_check(int r, int l, std::uint64_t sample_budget = 0,
                                  const SolverConfig& cfg = {},
                                  const MarginPolicy& policy = {});

// The sharpness construction one edge past the conjectured range: the colex
// segment with C(l-1,r) + C(l-2,r-1) + 1 edges and the two-level weighting
// whose value exceeds the benchmark. Both values are exact rationals and
// the strict inequality is certified exactly on construction.
struct SharpnessExample {
    RUniformGraph graph;
    std::vector<Rational> weights;
    Rational value;
    Rational benchmark;
};

SharpnessExample remark_counterexample(int r, int l);

}  // namespace hlag
