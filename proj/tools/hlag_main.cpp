#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlag/conjectures.hpp"
#include "hlag/enumerate.hpp"
#include "hlag/graph.hpp"
#include "hlag/parallel.hpp"
#include "hlag/report.hpp"
#include "hlag/solver.hpp"
#include "hlag/version.hpp"

namespace {

using hlag::RUniformGraph;
using hlag::Verdict;

constexpr int kExitHolds = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Inline graph sources shared by several subcommands: a document file,
// --colex r m, or --complete t [r] (with --r as fallback uniformity).
struct GraphFlags {
    std::string path;
    std::vector<int> colex;
    std::vector<int> complete;
    int uniformity = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph", path, "graph document (JSON file)");
        cmd->add_option("--colex", colex, "colex initial segment: r m")->expected(2);
        cmd->add_option("--complete", complete, "complete graph: t [r]")->expected(1, 2);
        cmd->add_option("--r", uniformity, "uniformity for --complete t");
    }

    RUniformGraph resolve() const {
        int given = (!path.empty()) + (!colex.empty()) + (!complete.empty());
        if (given != 1)
            throw CLI::ValidationError("graph source", "pass exactly one of --graph, --colex, --complete");
        if (!colex.empty()) return RUniformGraph::colex_initial_segment(colex[0], colex[1]);
        if (!complete.empty()) {
            int t = complete[0];
            int r = complete.size() > 1 ? complete[1] : uniformity;
            if (r == 0) throw CLI::ValidationError("--complete", "uniformity missing: use --complete t r or --r");
            return RUniformGraph::complete(t, r);
        }
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open graph file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return RUniformGraph::parse(buf.str());
    }
};

struct SolverFlags {
    hlag::SolverConfig cfg;
    hlag::MarginPolicy policy;

    void attach(CLI::App* cmd) {
        cmd->add_option("--restarts", cfg.restarts, "random restarts (default 64)");
        cmd->add_option("--max-iterations", cfg.max_iterations, "ascent iteration cap (default 20000)");
        cmd->add_option("--tol", cfg.convergence_tol, "per-step value-change stop (default 1e-14)");
        cmd->add_option("--support-threshold", cfg.support_threshold,
                        "weights below this count as zero (default 1e-9)");
        cmd->add_option("--seed", cfg.seed, "random-start seed (default 42)");
        cmd->add_option("--equality-tol", policy.equality_tol,
                        "accepted |value-benchmark| for equality (default 1e-6)");
        cmd->add_option("--strict-margin", policy.strict_margin,
                        "required benchmark-value gap for strict claims (default 1e-6)");
        cmd->add_option("--kkt-gate", policy.kkt_gate,
                        "stationarity residual gate (default 1e-8)");
    }

    nlohmann::json config_json() const {
        return {{"restarts", cfg.restarts},
                {"max_iterations", cfg.max_iterations},
                {"convergence_tol", cfg.convergence_tol},
                {"support_threshold", cfg.support_threshold},
                {"seed", cfg.seed},
                {"equality_tol", policy.equality_tol},
                {"strict_margin", policy.strict_margin},
                {"kkt_gate", policy.kkt_gate},
                {"threads", hlag::default_thread_count()}};
    }
};

nlohmann::json graph_json(const RUniformGraph& g) {
    return nlohmann::json::parse(g.to_json_text());
}

nlohmann::json cell_json(const hlag::VerdictCell& cell) {
    return nlohmann::json::parse(cell.to_json_text());
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::Holds: return kExitHolds;
        case Verdict::Counterexample: return kExitCounterexample;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

void emit(const hlag::RunReport& report, const std::string& out_path) {
    if (out_path.empty())
        report.write(std::cout);
    else
        report.write_file(out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangians of uniform hypergraphs: solver, enumeration and verification"};
    app.set_version_flag("--version", std::string(hlag::kVersion));
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the JSONL report here instead of stdout")
        ->capture_default_str();

    // ---- lambda ------------------------------------------------------
    auto* lambda_cmd = app.add_subcommand("lambda", "maximize the edge polynomial over the simplex");
    GraphFlags lambda_graph;
    SolverFlags lambda_solver;
    lambda_graph.attach(lambda_cmd);
    lambda_solver.attach(lambda_cmd);

    // ---- colex -------------------------------------------------------
    auto* colex_cmd = app.add_subcommand("colex", "emit the colex initial segment C_{r,m}");
    std::vector<int> colex_args;
    colex_cmd->add_option("rm", colex_args, "r m")->expected(2);

    // ---- compress ----------------------------------------------------
    auto* compress_cmd = app.add_subcommand("compress", "left-compress a graph to its fixpoint");
    GraphFlags compress_graph;
    compress_graph.attach(compress_cmd);

    // ---- clique ------------------------------------------------------
    auto* clique_cmd = app.add_subcommand("clique", "maximum clique order by backtracking");
    GraphFlags clique_graph;
    clique_graph.attach(clique_cmd);

    // ---- links -------------------------------------------------------
    auto* links_cmd = app.add_subcommand("links", "link of a vertex or pair, or a link difference");
    GraphFlags links_graph;
    links_graph.attach(links_cmd);
    std::vector<int> link_set;
    std::vector<int> diff_pair;
    links_cmd->add_option("--link", link_set, "vertex (or pair) whose link to emit")->expected(1, 2);
    links_cmd->add_option("--diff", diff_pair, "i j: emit the link difference E_{i\\j}")->expected(2);

    // ---- verify ------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->require_subcommand(1);
    SolverFlags verify_solver;

    auto* conj1_cmd = verify_cmd->add_subcommand("conj1", "equality on clique-carrying graphs");
    int c1_r = 3, c1_l = 0;
    std::optional<std::uint64_t> c1_lo, c1_hi;
    conj1_cmd->add_option("--r", c1_r, "uniformity (default 3)");
    conj1_cmd->add_option("--l", c1_l, "vertex count")->required();
    conj1_cmd->add_option("--m-from", c1_lo, "first edge count (default window start)");
    conj1_cmd->add_option("--m-to", c1_hi, "last edge count (default window end)");
    verify_solver.attach(conj1_cmd);

    auto* conj2_cmd = verify_cmd->add_subcommand("conj2", "strict inequality on clique-free 3-graphs");
    int c2_l = 0;
    std::optional<std::uint64_t> c2_lo, c2_hi;
    conj2_cmd->add_option("--l", c2_l, "vertex count")->required();
    conj2_cmd->add_option("--m-from", c2_lo, "first edge count (default window start)");
    conj2_cmd->add_option("--m-to", c2_hi, "last edge count (default window end)");
    verify_solver.attach(conj2_cmd);

    auto* ff_cmd = verify_cmd->add_subcommand("ff", "colex segment has the largest Lagrangian");
    int ff_r = 3;
    std::uint64_t ff_m = 0;
    std::optional<int> ff_cap;
    ff_cmd->add_option("--r", ff_r, "uniformity (default 3)");
    ff_cmd->add_option("--m", ff_m, "edge count")->required();
    ff_cmd->add_option("--vertex-cap", ff_cap, "restrict the search to graphs on this many vertices");
    verify_solver.attach(ff_cmd);

    auto* thm2a_cmd = verify_cmd->add_subcommand("thm2a", "counting hypothesis and its conclusion");
    GraphFlags thm2a_graph;
    int thm2a_l = 0;
    thm2a_graph.attach(thm2a_cmd);
    thm2a_cmd->add_option("--l", thm2a_l, "vertex count")->required();
    verify_solver.attach(thm2a_cmd);

    auto* thm3_cmd = verify_cmd->add_subcommand("thm3", "injection certificate for the pair link");
    GraphFlags thm3_graph;
    int thm3_l = 0;
    thm3_graph.attach(thm3_cmd);
    thm3_cmd->add_option("--l", thm3_l, "vertex count")->required();
    verify_solver.attach(thm3_cmd);

    auto* thm39_cmd = verify_cmd->add_subcommand("thm39", "edge-budget equality theorem");
    int t39_r = 3, t39_l = 0;
    std::uint64_t t39_budget = 0;
    thm39_cmd->add_option("--r", t39_r, "uniformity (default 3)");
    thm39_cmd->add_option("--l", t39_l, "vertex count")->required();
    thm39_cmd->add_option("--budget", t39_budget, "sample budget per edge count (0 = exhaustive)");
    verify_solver.attach(thm39_cmd);

    // ---- counterexample ----------------------------------------------
    auto* cex_cmd = app.add_subcommand("counterexample",
                                       "sharpness construction one edge past the window");
    int cex_r = 3, cex_l = 0;
    cex_cmd->add_option("--r", cex_r, "uniformity (default 3)");
    cex_cmd->add_option("--l", cex_l, "vertex count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints the message or help text
        return rc == 0 ? 0 : kExitUsage;
    }

    hlag::RunReport report;
    int exit_code = kExitHolds;

    try {
        if (*lambda_cmd) {
            RUniformGraph g = lambda_graph.resolve();
            report.command = "lambda";
            report.config = lambda_solver.config_json();
            auto t0 = std::chrono::steady_clock::now();
            hlag::LagrangianEstimate est = hlag::maximize(g, lambda_solver.cfg);
            nlohmann::json payload = nlohmann::json::parse(est.to_json_text());
            payload["graph"] = graph_json(g);
            report.items.push_back({"lambda", payload, ms_since(t0)});
            std::cerr << "lambda = " << est.value << " (kkt residual " << est.kkt.max_residual
                      << ", support size " << est.support.size() << ")\n";
        } else if (*colex_cmd) {
            report.command = "colex";
            report.config = nlohmann::json::object();
            auto t0 = std::chrono::steady_clock::now();
            RUniformGraph g = RUniformGraph::colex_initial_segment(colex_args[0], colex_args[1]);
            report.items.push_back({"colex", graph_json(g), ms_since(t0)});
        } else if (*compress_cmd) {
            RUniformGraph g = compress_graph.resolve();
            report.command = "compress";
            report.config = nlohmann::json::object();
            auto t0 = std::chrono::steady_clock::now();
            RUniformGraph out = hlag::compress(g);
            nlohmann::json payload;
            payload["input"] = graph_json(g);
            payload["output"] = graph_json(out);
            payload["already_left_compressed"] = g == out;
            report.items.push_back({"compress", payload, ms_since(t0)});
        } else if (*clique_cmd) {
            RUniformGraph g = clique_graph.resolve();
            report.command = "clique";
            report.config = nlohmann::json::object();
            auto t0 = std::chrono::steady_clock::now();
            int order = hlag::max_clique_order(g);
            nlohmann::json payload;
            payload["graph"] = graph_json(g);
            payload["max_clique_order"] = order;
            report.items.push_back({"clique", payload, ms_since(t0)});
            std::cerr << "max clique order = " << order << "\n";
        } else if (*links_cmd) {
            RUniformGraph g = links_graph.resolve();
            report.command = "links";
            report.config = nlohmann::json::object();
            if (link_set.empty() == diff_pair.empty())
                throw CLI::ValidationError("links", "pass exactly one of --link or --diff");
            auto t0 = std::chrono::steady_clock::now();
            nlohmann::json payload;
            payload["graph"] = graph_json(g);
            if (!link_set.empty()) {
                hlag::VertexSet s(link_set.begin(), link_set.end());
                std::sort(s.begin(), s.end());
                payload["vertices"] = s;
                payload["link"] = hlag::link(g, s);
            } else {
                payload["vertices"] = diff_pair;
                payload["link_difference"] = hlag::link_difference(g, diff_pair[0], diff_pair[1]);
            }
            report.items.push_back({"links", payload, ms_since(t0)});
        } else if (*verify_cmd) {
            report.config = verify_solver.config_json();
            Verdict overall = Verdict::Holds;
            auto add_cells = [&](const hlag::ConjectureVerdict& v, const std::string& prefix,
                                 double wall_ms) {
                for (const auto& cell : v.cells) {
                    std::string key = prefix + " r=" + std::to_string(cell.r) +
                                      " l=" + std::to_string(cell.l) + " m=" + std::to_string(cell.m);
                    report.items.push_back({key, cell_json(cell), wall_ms / v.cells.size()});
                    std::cerr << key << ": " << hlag::verdict_name(cell.verdict)
                              << " margin=" << cell.margin << " graphs=" << cell.graphs_examined
                              << "\n";
                }
                overall = (exit_code_for(v.verdict) > exit_code_for(overall)) ? v.verdict : overall;
            };
            if (*conj1_cmd) {
                report.command = "verify conj1";
                std::uint64_t lo = c1_lo.value_or(hlag::binomial(c1_l - 1, c1_r));
                std::uint64_t hi =
                    c1_hi.value_or(hlag::binomial(c1_l - 1, c1_r) + hlag::binomial(c1_l - 2, c1_r - 1));
                for (std::uint64_t m = lo; m <= hi; ++m) {
                    auto t0 = std::chrono::steady_clock::now();
                    auto v = hlag::conjecture1_check(c1_r, c1_l, m, m, verify_solver.cfg,
                                                     verify_solver.policy);
                    add_cells(v, "conj1", ms_since(t0));
                }
            } else if (*conj2_cmd) {
                report.command = "verify conj2";
                std::uint64_t lo = c2_lo.value_or(hlag::binomial(c2_l - 1, 3));
                std::uint64_t hi =
                    c2_hi.value_or(hlag::binomial(c2_l - 1, 3) + hlag::binomial(c2_l - 2, 2));
                for (std::uint64_t m = lo; m <= hi; ++m) {
                    auto t0 = std::chrono::steady_clock::now();
                    auto v = hlag::conjecture2_check(c2_l, m, m, verify_solver.cfg,
                                                     verify_solver.policy);
                    add_cells(v, "conj2", ms_since(t0));
                }
            } else if (*ff_cmd) {
                report.command = "verify ff";
                auto t0 = std::chrono::steady_clock::now();
                auto v = hlag::frankl_furedi_check(ff_r, ff_m, ff_cap, verify_solver.cfg,
                                                   verify_solver.policy);
                add_cells(v, "ff", ms_since(t0));
            } else if (*thm2a_cmd) {
                report.command = "verify thm2a";
                RUniformGraph g = thm2a_graph.resolve();
                auto t0 = std::chrono::steady_clock::now();
                auto res = hlag::theorem_2a_check(g, thm2a_l, verify_solver.cfg, verify_solver.policy);
                nlohmann::json payload;
                payload["graph"] = graph_json(g);
                payload["l"] = thm2a_l;
                payload["hypothesis_holds"] = res.hypothesis_holds;
                payload["free_sets"] = res.free_sets;
                payload["pair_link_size"] = res.pair_link_size;
                payload["clique_present"] = res.clique_present;
                payload["value"] = res.value;
                payload["benchmark"] = res.benchmark;
                payload["margin"] = res.margin;
                payload["verdict"] = res.hypothesis_holds ? hlag::verdict_name(res.conclusion)
                                                          : "inapplicable";
                report.items.push_back({"thm2a", payload, ms_since(t0)});
                if (res.hypothesis_holds)
                    overall = (exit_code_for(res.conclusion) > exit_code_for(overall))
                                  ? res.conclusion
                                  : overall;
                std::cerr << "thm2a: hypothesis " << (res.hypothesis_holds ? "holds" : "fails")
                          << ", value=" << res.value << " benchmark=" << res.benchmark << "\n";
            } else if (*thm3_cmd) {
                report.command = "verify thm3";
                RUniformGraph g = thm3_graph.resolve();
                auto t0 = std::chrono::steady_clock::now();
                auto cert = hlag::theorem3_matching(g, thm3_l);
                nlohmann::json payload;
                payload["graph"] = graph_json(g);
                payload["l"] = thm3_l;
                payload["source_count"] = cert.source_count;
                payload["target_count"] = cert.target_count;
                payload["complete"] = cert.complete;
                payload["pairs"] = nlohmann::json::array();
                for (const auto& [s, t] : cert.pairs)
                    payload["pairs"].push_back({{"source", s}, {"target", t}});
                report.items.push_back({"thm3", payload, ms_since(t0)});
                std::cerr << "thm3: injection " << (cert.complete ? "exists" : "absent") << " ("
                          << cert.source_count << " -> " << cert.target_count << ")\n";
            } else if (*thm39_cmd) {
                report.command = "verify thm39";
                auto t0 = std::chrono::steady_clock::now();
                auto v = hlag::theorem39_check(t39_r, t39_l, t39_budget, verify_solver.cfg,
                                               verify_solver.policy);
                add_cells(v, "thm39", ms_since(t0));
            }
            exit_code = exit_code_for(overall);
        } else if (*cex_cmd) {
            report.command = "counterexample";
            report.config = nlohmann::json::object();
            auto t0 = std::chrono::steady_clock::now();
            hlag::SharpnessExample ex = hlag::remark_counterexample(cex_r, cex_l);
            nlohmann::json payload;
            payload["graph"] = graph_json(ex.graph);
            payload["value"] = ex.value.to_string();
            payload["benchmark"] = ex.benchmark.to_string();
            payload["value_double"] = ex.value.to_double();
            payload["benchmark_double"] = ex.benchmark.to_double();
            payload["weights"] = nlohmann::json::array();
            for (const auto& w : ex.weights) payload["weights"].push_back(w.to_string());
            payload["exceeds_benchmark"] = true;  // certified exactly on construction
            report.items.push_back({"counterexample", payload, ms_since(t0)});
            std::cerr << ex.value.to_string() << " > " << ex.benchmark.to_string() << "\n";
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        emit(report, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
