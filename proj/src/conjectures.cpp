#include "hlag/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hlag/matching.hpp"
#include "hlag/parallel.hpp"

namespace hlag {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string VerdictCell::to_json_text() const {
    nlohmann::json doc;
    doc["r"] = r;
    doc["l"] = l;
    doc["m"] = m;
    doc["verdict"] = verdict_name(verdict);
    doc["margin"] = margin;
    doc["graphs_examined"] = graphs_examined;
    if (witness_json) doc["witness"] = nlohmann::json::parse(*witness_json);
    if (note) doc["note"] = *note;
    return doc.dump();
}

namespace {

Verdict worse(Verdict a, Verdict b) {
    auto severity = [](Verdict v) {
        switch (v) {
            case Verdict::Counterexample: return 2;
            case Verdict::Inconclusive: return 1;
            case Verdict::Holds: return 0;
        }
        return 1;
    };
    return severity(a) >= severity(b) ? a : b;
}

// Solver error must never manufacture a counterexample: an apparent
// violation is upgraded from Inconclusive only by an exact certificate.
Verdict classify_equality(const RUniformGraph& g, const LagrangianEstimate& est, double bench,
                          const Rational& bench_exact, const MarginPolicy& policy) {
    double gap = est.value - bench;
    if (std::fabs(gap) <= policy.equality_tol && est.kkt.max_residual <= policy.kkt_gate)
        return Verdict::Holds;
    if (gap > policy.equality_tol &&
        certify_value_exceeds(g, est.weighting.weights, bench_exact))
        return Verdict::Counterexample;
    return Verdict::Inconclusive;
}

Verdict classify_strict_below(const RUniformGraph& g, const LagrangianEstimate& est, double bench,
                              const Rational& bench_exact, const MarginPolicy& policy) {
    double margin = bench - est.value;
    if (margin > policy.strict_margin && est.kkt.max_residual <= policy.kkt_gate)
        return Verdict::Holds;
    if (est.value > bench && certify_value_exceeds(g, est.weighting.weights, bench_exact))
        return Verdict::Counterexample;
    return Verdict::Inconclusive;
}

std::vector<LagrangianEstimate> maximize_all(const std::vector<RUniformGraph>& graphs,
                                             const SolverConfig& cfg) {
    std::vector<LagrangianEstimate> out(graphs.size());
    parallel_for_index(graphs.size(), [&](std::size_t i) { out[i] = maximize(graphs[i], cfg); });
    return out;
}

void fold_cell(ConjectureVerdict& agg, VerdictCell cell) {
    agg.verdict = worse(agg.verdict, cell.verdict);
    agg.graphs_examined += cell.graphs_examined;
    agg.cells.push_back(std::move(cell));
}

// Aggregate margin: the worst |deviation| for equality-style runs, the
// smallest protective gap for strict-inequality runs; vacuous cells are
// skipped.
void finish_margin(ConjectureVerdict& agg, bool margin_is_min) {
    bool first = true;
    for (const auto& cell : agg.cells) {
        if (cell.graphs_examined == 0) continue;
        if (first) {
            agg.margin = cell.margin;
            first = false;
        } else {
            agg.margin = margin_is_min ? std::min(agg.margin, cell.margin)
                                       : std::max(agg.margin, cell.margin);
        }
    }
    if (first) agg.margin = 0.0;
}

}  // namespace

ConjectureVerdict conjecture1_check(int r, int l, std::uint64_t m_lo, std::uint64_t m_hi,
                                    const SolverConfig& cfg, const MarginPolicy& policy) {
    if (l < r + 2) throw std::invalid_argument("conjecture1_check: need l >= r+2");
    std::uint64_t lo_bound = binomial(l - 1, r);
    std::uint64_t hi_bound = lo_bound + binomial(l - 2, r - 1);
    if (m_lo < lo_bound || m_hi > hi_bound || m_lo > m_hi)
        throw std::invalid_argument("conjecture1_check: edge-count range outside the conjectured window");
    double bench = complete_lagrangian(l - 1, r);
    Rational bench_exact = complete_lagrangian_exact(l - 1, r);

    ConjectureVerdict agg;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        auto graphs = enumerate_left_compressed_all({r, l, m, CliqueFilter::Require});
        auto estimates = maximize_all(graphs, cfg);
        VerdictCell cell;
        cell.r = r;
        cell.l = l;
        cell.m = m;
        cell.graphs_examined = graphs.size();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            Verdict v = classify_equality(graphs[i], estimates[i], bench, bench_exact, policy);
            cell.margin = std::max(cell.margin, std::fabs(estimates[i].value - bench));
            if (v != Verdict::Holds && cell.verdict == Verdict::Holds)
                cell.witness_json = graphs[i].to_json_text();
            cell.verdict = worse(cell.verdict, v);
        }
        fold_cell(agg, std::move(cell));
    }
    finish_margin(agg, /*margin_is_min=*/false);
    return agg;
}

ConjectureVerdict conjecture2_check(int l, std::uint64_t m_lo, std::uint64_t m_hi,
                                    const SolverConfig& cfg, const MarginPolicy& policy) {
    const int r = 3;
    if (l < r + 2 || l > 7)
        throw std::invalid_argument("conjecture2_check: need r+2 <= l <= 7");
    std::uint64_t lo_bound = binomial(l - 1, 3);
    std::uint64_t hi_bound = lo_bound + binomial(l - 2, 2);
    if (m_lo < lo_bound || m_hi > hi_bound || m_lo > m_hi)
        throw std::invalid_argument("conjecture2_check: edge-count range outside the conjectured window");
    double bench = complete_lagrangian(l - 1, 3);
    Rational bench_exact = complete_lagrangian_exact(l - 1, 3);
    // Deficiency lemma range: the sharper window of the strict-inequality theorem.
    std::uint64_t deficiency_hi = hi_bound - static_cast<std::uint64_t>(l - 2);

    ConjectureVerdict agg;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        auto graphs = enumerate_left_compressed_all({r, l, m, CliqueFilter::Forbid});
        auto estimates = maximize_all(graphs, cfg);
        VerdictCell cell;
        cell.r = r;
        cell.l = l;
        cell.m = m;
        cell.graphs_examined = graphs.size();
        if (graphs.empty()) {
            cell.note = "vacuous: no clique-free left-compressed graphs of this size";
            fold_cell(agg, std::move(cell));
            continue;
        }
        cell.margin = bench - estimates[0].value;
        std::size_t argmax = 0;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            Verdict v = classify_strict_below(graphs[i], estimates[i], bench, bench_exact, policy);
            cell.margin = std::min(cell.margin, bench - estimates[i].value);
            if (estimates[i].value > estimates[argmax].value) argmax = i;
            if (v != Verdict::Holds && cell.verdict == Verdict::Holds)
                cell.witness_json = graphs[i].to_json_text();
            cell.verdict = worse(cell.verdict, v);
        }
        if (m <= deficiency_hi) {
            // How many [l-1]-triples the best clique-free graph is missing,
            // against the deficiency bound l-2.
            std::uint64_t missing = 0;
            for (std::uint64_t rank = 1; rank <= binomial(l - 1, 3); ++rank)
                if (!graphs[argmax].has_edge_rank(rank)) ++missing;
            cell.note = "missing_base_triples_of_argmax=" + std::to_string(missing) +
                        " bound=" + std::to_string(l - 2);
        }
        fold_cell(agg, std::move(cell));
    }
    finish_margin(agg, /*margin_is_min=*/true);
    return agg;
}

ConjectureVerdict frankl_furedi_check(int r, std::uint64_t m, std::optional<int> vertex_cap,
                                      const SolverConfig& cfg, const MarginPolicy& policy) {
    if (m < 1) throw std::invalid_argument("frankl_furedi_check: need m >= 1");
    bool in_scale = false;
    if (r == 3) in_scale = m <= 12 || (vertex_cap && *vertex_cap <= 7);
    if (r == 2) in_scale = m <= 10 || (vertex_cap && *vertex_cap <= 9);
    if (!in_scale)
        throw std::domain_error("frankl_furedi_check: parameters outside the supported desk scale");

    // A left-compressed graph with m edges uses no vertex beyond m+r-1.
    int l = vertex_cap ? *vertex_cap : static_cast<int>(m) + r - 1;
    l = std::min<int>(l, static_cast<int>(m) + r - 1);
    l = std::max(l, r);
    if (m > binomial(l, r))
        throw std::invalid_argument("frankl_furedi_check: no graph on that many vertices has m edges");

    LagrangianEstimate colex_est = maximize(RUniformGraph::colex_initial_segment(r, m), cfg);

    auto graphs = enumerate_left_compressed_all({r, l, m, CliqueFilter::Ignore});
    auto estimates = maximize_all(graphs, cfg);
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < estimates.size(); ++i)
        if (estimates[i].value > estimates[argmax].value) argmax = i;

    VerdictCell cell;
    cell.r = r;
    cell.l = l;
    cell.m = m;
    cell.graphs_examined = graphs.size();
    double best = estimates.empty() ? 0.0 : estimates[argmax].value;
    cell.margin = best - colex_est.value;
    if (cell.margin <= policy.equality_tol) {
        cell.verdict = Verdict::Holds;
    } else {
        // Both sides are numeric, so a violation cannot be certified exactly.
        cell.verdict = Verdict::Inconclusive;
        cell.witness_json = graphs[argmax].to_json_text();
        cell.note = "best stream value exceeds the colex segment numerically";
    }
    ConjectureVerdict agg;
    fold_cell(agg, std::move(cell));
    finish_margin(agg, /*margin_is_min=*/false);
    return agg;
}

Theorem2aResult theorem_2a_check(const RUniformGraph& g, int l, const SolverConfig& cfg,
                                 const MarginPolicy& policy) {
    if (g.r() < 3) throw std::invalid_argument("theorem_2a_check: requires r >= 3");
    if (g.vertex_count() != l)
        throw std::invalid_argument("theorem_2a_check: graph must live on [l]");
    if (l < g.r() + 2) throw std::invalid_argument("theorem_2a_check: need l >= r+2");
    if (!is_left_compressed(g))
        throw std::invalid_argument("theorem_2a_check: graph is not left-compressed");
    const int r = g.r();

    Theorem2aResult res;
    auto link_l = link(g, {l});
    std::uint64_t in_lower = 0;
    for (const auto& a : link_l)
        if (a.back() <= l - 2) ++in_lower;
    res.free_sets = binomial(l - 2, r - 1) - in_lower;
    res.pair_link_size = link(g, {l - 1, l}).size();
    res.hypothesis_holds =
        res.free_sets >= (static_cast<std::uint64_t>(1) << (r - 3)) * res.pair_link_size;

    VertexSet top(r);
    for (int k = 0; k < r; ++k) top[k] = l - r + k;
    res.clique_present = g.has_edge(top);
    res.benchmark = complete_lagrangian(l - 1, r);

    LagrangianEstimate est = maximize(g, cfg);
    res.value = est.value;
    if (res.clique_present)
        res.margin = std::fabs(est.value - res.benchmark);
    else
        res.margin = res.benchmark - est.value;
    if (res.hypothesis_holds) {
        Rational bench_exact = complete_lagrangian_exact(l - 1, r);
        res.conclusion = res.clique_present
                             ? classify_equality(g, est, res.benchmark, bench_exact, policy)
                             : classify_strict_below(g, est, res.benchmark, bench_exact, policy);
    }
    return res;
}

MatchingCertificate theorem3_matching(const RUniformGraph& g, int l) {
    if (g.r() < 3) throw std::invalid_argument("theorem3_matching: requires r >= 3");
    if (g.vertex_count() != l)
        throw std::invalid_argument("theorem3_matching: graph must live on [l]");
    if (l < g.r() + 2) throw std::invalid_argument("theorem3_matching: need l >= r+2");
    if (!is_left_compressed(g))
        throw std::invalid_argument("theorem3_matching: graph is not left-compressed");
    const int r = g.r();

    std::vector<VertexSet> sources = link(g, {l - 1, l});
    auto link_l = link(g, {l});
    std::vector<VertexSet> targets;
    for (const auto& a : all_subsets(l - 2, r - 1)) {
        bool in_link = std::any_of(link_l.begin(), link_l.end(),
                                   [&](const VertexSet& b) { return b == a; });
        if (!in_link) targets.push_back(a);
    }

    MatchingCertificate cert;
    cert.source_count = sources.size();
    cert.target_count = targets.size();
    if (sources.empty()) {
        cert.complete = true;
        return cert;
    }

    BipartiteMatcher matcher(static_cast<int>(sources.size()), static_cast<int>(targets.size()));
    for (std::size_t s = 0; s < sources.size(); ++s) {
        for (std::size_t t = 0; t < targets.size(); ++t) {
            bool ok = true;
            for (int k = 1; k <= r - 3; ++k) {
                if (targets[t][k - 1] > sources[s][k]) {  // j_k <= i_{k+1}
                    ok = false;
                    break;
                }
            }
            if (ok) matcher.add_edge(static_cast<int>(s), static_cast<int>(t));
        }
    }
    int matched = matcher.solve();
    cert.complete = matched == static_cast<int>(sources.size());
    if (cert.complete) {
        for (std::size_t s = 0; s < sources.size(); ++s)
            cert.pairs.emplace_back(sources[s], targets[matcher.matched_target[s]]);
    }
    return cert;
}

ConjectureVerdict theorem39_check(int r, int l, std::uint64_t sample_budget,
                                  const SolverConfig& cfg, const MarginPolicy& policy) {
    if (l < r + 2) throw std::invalid_argument("theorem39_check: need l >= r+2");
    if (2 * static_cast<std::uint64_t>(l - r) > binomial(l - 2, r - 1))
        throw std::invalid_argument(
            "theorem39_check: parameter pair excluded (edge budget exceeds the conjectured window; "
            "see 2(l-r) <= C(l-2,r-1))");
    std::uint64_t m_lo = binomial(l - 1, r);
    std::uint64_t m_hi = m_lo + 2 * static_cast<std::uint64_t>(l - r);
    double bench = complete_lagrangian(l - 1, r);
    Rational bench_exact = complete_lagrangian_exact(l - 1, r);

    ConjectureVerdict agg;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        std::vector<RUniformGraph> graphs;
        bool truncated = false;
        enumerate_left_compressed({r, l, m, CliqueFilter::Require}, [&](const RUniformGraph& g) {
            if (sample_budget > 0 && graphs.size() >= sample_budget) {
                truncated = true;
                return false;
            }
            graphs.push_back(g);
            return true;
        });
        auto estimates = maximize_all(graphs, cfg);
        VerdictCell cell;
        cell.r = r;
        cell.l = l;
        cell.m = m;
        cell.graphs_examined = graphs.size();
        if (truncated) cell.note = "sampled: first " + std::to_string(sample_budget) + " graphs";
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            Verdict v = classify_equality(graphs[i], estimates[i], bench, bench_exact, policy);
            cell.margin = std::max(cell.margin, std::fabs(estimates[i].value - bench));
            if (v != Verdict::Holds && cell.verdict == Verdict::Holds)
                cell.witness_json = graphs[i].to_json_text();
            cell.verdict = worse(cell.verdict, v);
        }
        fold_cell(agg, std::move(cell));
    }
    finish_margin(agg, /*margin_is_min=*/false);
    return agg;
}

SharpnessExample remark_counterexample(int r, int l) {
    if (r < 2) throw std::invalid_argument("remark_counterexample: need r >= 2");
    if (l < r + 2) throw std::invalid_argument("remark_counterexample: need l >= r+2");

    std::vector<VertexSet> edges = all_subsets(l - 1, r);
    for (const auto& a : all_subsets(l - 2, r - 1)) {
        VertexSet e = a;
        e.push_back(l);
        edges.push_back(std::move(e));
    }
    VertexSet chain;
    for (int v = 1; v <= r - 2; ++v) chain.push_back(v);
    chain.push_back(l - 1);
    chain.push_back(l);
    edges.push_back(std::move(chain));

    RUniformGraph graph(r, l, std::move(edges));
    std::vector<Rational> weights;
    weights.reserve(l);
    for (int v = 1; v <= l - 2; ++v) weights.emplace_back(1, l - 1);
    weights.emplace_back(1, 2 * (l - 1));
    weights.emplace_back(1, 2 * (l - 1));

    SharpnessExample ex{std::move(graph), std::move(weights), Rational(0), Rational(0)};
    ex.value = evaluate_exact(ex.graph, ex.weights);
    ex.benchmark = complete_lagrangian_exact(l - 1, r);
    if (!(ex.value > ex.benchmark))
        throw std::logic_error("remark_counterexample: exact comparison failed unexpectedly");
    return ex;
}

}  // namespace hlag
