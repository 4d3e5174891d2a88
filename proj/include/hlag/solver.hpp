#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlag/graph.hpp"
#include "hlag/rational.hpp"
#include "hlag/weighting.hpp"

namespace hlag {

// Knobs for maximize(). Defaults are tuned for desk-scale graphs; the seed
// fixes the random restarts so reports reproduce bit-for-bit.
struct SolverConfig {
    int restarts = 64;
    long max_iterations = 20000;
    double convergence_tol = 1e-14;   // stop when the value change per step drops below this
    double support_threshold = 1e-9;  // weights below this count as zero
    std::uint64_t seed = 42;
};

// First-order diagnostics at a weighting: per-vertex link values, the worst
// stationarity residual |link_i - r*value| over the support, whether every
// support pair lies in a common edge, and whether weights are non-increasing.
struct KktReport {
    std::vector<double> link_values;
    double max_residual = 0.0;
    bool pair_coverage_ok = true;
    bool monotone_ok = true;
    double value = 0.0;
    VertexSet support;
};

struct LagrangianEstimate {
    double value = 0.0;
    SimplexWeighting weighting;
    VertexSet support;
    long iterations = 0;
    bool converged = false;
    KktReport kkt;
    int restarts_used = 0;

    // {"value","weights","support","kkt_residual","converged","restarts_used"}
    std::string to_json_text() const;
};

// Diagnostics for the structural identities satisfied by optimal weightings
// of left-compressed graphs: the pair-link difference identity, weight
// monotonicity, and the top-weight bracket x_1 <= x_{l-1}+x_l <= 2 x_{l-1}.
struct StructuralChecks {
    double pair_identity_violation = 0.0;  // max |(x_i-x_j) L(E_ij) - L(E_i\j)| over support pairs
    double monotone_violation = 0.0;       // max increase between consecutive weights
    bool bracket_checked = false;
    double bracket_lower_violation = 0.0;  // max(0, x_1 - (x_{l-1}+x_l))
    double bracket_upper_violation = 0.0;  // max(0, (x_{l-1}+x_l) - 2 x_{l-1})

    bool all_ok(double tol) const {
        return pair_identity_violation <= tol && monotone_violation <= tol &&
               bracket_lower_violation <= tol && bracket_upper_violation <= tol;
    }
};

// Edge polynomial: sum over edges of the product of their vertex weights.
// Accepts any nonnegative vector of matching dimension (not necessarily on
// the simplex); the empty graph evaluates to 0.
double evaluate(const RUniformGraph& g, const std::vector<double>& x);
double evaluate(const RUniformGraph& g, const SimplexWeighting& x);

// Exact evaluation for rational weights.
Rational evaluate_exact(const RUniformGraph& g, const std::vector<Rational>& x);

// Per-vertex link values (the gradient of the edge polynomial):
// entry i-1 is the value of the link of vertex i.
std::vector<double> link_values(const RUniformGraph& g, const std::vector<double>& x);

// Pair-link value of {i,j}; the empty product counts as 1, so for r=2 this
// is 1 or 0 depending on whether ij is an edge.
double pair_link_value(const RUniformGraph& g, Vertex i, Vertex j, const std::vector<double>& x);

// Value of a plain set family at x (each member contributes its product).
double family_value(const std::vector<VertexSet>& family, const std::vector<double>& x);

// Lagrangian of the complete r-graph on t vertices: C(t,r)/t^r, attained by
// the uniform weighting. For r=2 this is (1/2)(1-1/t).
double complete_lagrangian(int t, int r);
Rational complete_lagrangian_exact(int t, int r);

// One multiplicative-ascent step x_i <- x_i * link_i / (r * value). Monotone
// in the edge polynomial. Throws std::domain_error when the value is zero
// (the caller should restart elsewhere).
SimplexWeighting baum_eagon_step(const RUniformGraph& g, const SimplexWeighting& x);

// Best weighting found by monotone multiplicative ascent with Newton
// polishing, started from the uniform point, uniform prefixes (for
// left-compressed inputs), maximum-clique supports, and seeded random
// points. The returned value is attained by the returned weighting, so it
// is a certified lower bound on the Lagrangian; kkt.max_residual measures
// stationarity. Throws std::invalid_argument on an empty edge set.
LagrangianEstimate maximize(const RUniformGraph& g, const SolverConfig& cfg = {});

// Exhaustive lattice lower bound: max of the edge polynomial over all
// weightings (k_1/N,...,k_n/N) with nonnegative integers summing to N.
double brute_force_oracle(const RUniformGraph& g, int denominator);

// First-order condition check at an arbitrary simplex point; vertices with
// weight <= support_cutoff are excluded from the residual and coverage.
KktReport verify_frankl_rodl(const RUniformGraph& g, const SimplexWeighting& x,
                             double support_cutoff = 1e-9);

// Structural identities at x for a left-compressed graph. The bracket check
// runs only when the graph lives on [l] and contains the complete r-graph
// on [l-1]. Throws std::invalid_argument when g is not left-compressed.
StructuralChecks structural_weight_checks(const RUniformGraph& g, const SimplexWeighting& x,
                                          int l, double support_cutoff = 1e-9);

// Exact certificate helper: rounds x to a common power-of-two denominator,
// re-evaluates exactly, and reports whether the exact value still exceeds
// `bound`. Used before ever declaring a counterexample.
bool certify_value_exceeds(const RUniformGraph& g, const std::vector<double>& x,
                           const Rational& bound, Rational* witness_value = nullptr);

}  // namespace hlag
