#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hlag/conjectures.hpp"
#include "hlag/enumerate.hpp"
#include "hlag/graph.hpp"
#include "hlag/solver.hpp"
#include "hlag/version.hpp"
#include "hlag/weighting.hpp"

namespace py = pybind11;

namespace {

hlag::SolverConfig make_config(int restarts, long max_iterations, double tol,
                               double support_threshold, std::uint64_t seed) {
    hlag::SolverConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iterations = max_iterations;
    cfg.convergence_tol = tol;
    cfg.support_threshold = support_threshold;
    cfg.seed = seed;
    return cfg;
}

py::dict estimate_dict(const hlag::LagrangianEstimate& est) {
    py::dict d;
    d["value"] = est.value;
    d["weights"] = est.weighting.weights;
    d["support"] = est.support;
    d["kkt_residual"] = est.kkt.max_residual;
    d["pair_coverage_ok"] = est.kkt.pair_coverage_ok;
    d["converged"] = est.converged;
    d["iterations"] = est.iterations;
    d["restarts_used"] = est.restarts_used;
    return d;
}

py::dict verdict_dict(const hlag::ConjectureVerdict& v) {
    py::dict d;
    d["verdict"] = hlag::verdict_name(v.verdict);
    d["margin"] = v.margin;
    d["graphs_examined"] = v.graphs_examined;
    py::list cells;
    for (const auto& cell : v.cells) {
        py::dict c;
        c["r"] = cell.r;
        c["l"] = cell.l;
        c["m"] = cell.m;
        c["verdict"] = hlag::verdict_name(cell.verdict);
        c["margin"] = cell.margin;
        c["graphs_examined"] = cell.graphs_examined;
        if (cell.witness_json) c["witness"] = *cell.witness_json;
        if (cell.note) c["note"] = *cell.note;
        cells.append(c);
    }
    d["cells"] = cells;
    return d;
}

hlag::CliqueFilter parse_filter(const std::string& name) {
    if (name == "ignore") return hlag::CliqueFilter::Ignore;
    if (name == "require") return hlag::CliqueFilter::Require;
    if (name == "forbid") return hlag::CliqueFilter::Forbid;
    throw std::invalid_argument("clique filter must be ignore, require or forbid");
}

}  // namespace

PYBIND11_MODULE(hlag, m) {
    m.doc() = "Lagrangians of uniform hypergraphs: exact combinatorics, simplex "
              "optimization and desk-scale verification";
    m.attr("__version__") = hlag::kVersion;

    py::class_<hlag::RUniformGraph>(m, "Graph")
        .def(py::init<int, int, std::vector<hlag::VertexSet>>(), py::arg("r"), py::arg("n"),
             py::arg("edges"))
        .def_static("parse", &hlag::RUniformGraph::parse, py::arg("text"))
        .def_static("colex_initial_segment", &hlag::RUniformGraph::colex_initial_segment,
                    py::arg("r"), py::arg("m"))
        .def_static("complete", &hlag::RUniformGraph::complete, py::arg("t"), py::arg("r"))
        .def_property_readonly("r", &hlag::RUniformGraph::r)
        .def_property_readonly("n", &hlag::RUniformGraph::vertex_count)
        .def_property_readonly("edges",
                               [](const hlag::RUniformGraph& g) { return g.edges(); })
        .def("has_edge", &hlag::RUniformGraph::has_edge, py::arg("edge"))
        .def("to_json", [](const hlag::RUniformGraph& g) { return g.to_json_text(); })
        .def("__eq__", [](const hlag::RUniformGraph& a, const hlag::RUniformGraph& b) { return a == b; })
        .def("__len__", &hlag::RUniformGraph::edge_count)
        .def("__repr__", [](const hlag::RUniformGraph& g) {
            return "Graph(r=" + std::to_string(g.r()) + ", n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("colex_compare",
          [](const hlag::VertexSet& a, const hlag::VertexSet& b) {
              auto c = hlag::colex_compare(a, b);
              return c < 0 ? -1 : (c > 0 ? 1 : 0);
          },
          py::arg("a"), py::arg("b"));
    m.def("colex_rank", &hlag::colex_rank, py::arg("subset"));
    m.def("colex_unrank", &hlag::colex_unrank, py::arg("r"), py::arg("rank"));
    m.def("link", &hlag::link, py::arg("graph"), py::arg("vertices"));
    m.def("link_difference", &hlag::link_difference, py::arg("graph"), py::arg("i"), py::arg("j"));
    m.def("is_left_compressed", &hlag::is_left_compressed, py::arg("graph"));
    m.def("compress", &hlag::compress, py::arg("graph"));
    m.def("max_clique_order", &hlag::max_clique_order, py::arg("graph"));

    m.def("evaluate",
          [](const hlag::RUniformGraph& g, const std::vector<double>& x) {
              return hlag::evaluate(g, x);
          },
          py::arg("graph"), py::arg("weights"));
    m.def("link_values", &hlag::link_values, py::arg("graph"), py::arg("weights"));
    m.def("complete_lagrangian", &hlag::complete_lagrangian, py::arg("t"), py::arg("r"));
    m.def("brute_force_oracle", &hlag::brute_force_oracle, py::arg("graph"), py::arg("denominator"));
    m.def("baum_eagon_step",
          [](const hlag::RUniformGraph& g, const std::vector<double>& x) {
              return hlag::baum_eagon_step(g, hlag::SimplexWeighting::normalized(x)).weights;
          },
          py::arg("graph"), py::arg("weights"));

    m.def("maximize",
          [](const hlag::RUniformGraph& g, int restarts, long max_iterations, double tol,
             double support_threshold, std::uint64_t seed) {
              return estimate_dict(hlag::maximize(
                  g, make_config(restarts, max_iterations, tol, support_threshold, seed)));
          },
          py::arg("graph"), py::arg("restarts") = 64, py::arg("max_iterations") = 20000,
          py::arg("tol") = 1e-14, py::arg("support_threshold") = 1e-9, py::arg("seed") = 42);

    m.def("enumerate_left_compressed",
          [](int r, int l, std::uint64_t m, const std::string& filter) {
              return hlag::enumerate_left_compressed_all({r, l, m, parse_filter(filter)});
          },
          py::arg("r"), py::arg("l"), py::arg("m"), py::arg("clique_filter") = "ignore");

    m.def("verify_conjecture1",
          [](int r, int l, std::uint64_t m_lo, std::uint64_t m_hi) {
              return verdict_dict(hlag::conjecture1_check(r, l, m_lo, m_hi));
          },
          py::arg("r"), py::arg("l"), py::arg("m_lo"), py::arg("m_hi"));
    m.def("verify_conjecture2",
          [](int l, std::uint64_t m_lo, std::uint64_t m_hi) {
              return verdict_dict(hlag::conjecture2_check(l, m_lo, m_hi));
          },
          py::arg("l"), py::arg("m_lo"), py::arg("m_hi"));
    m.def("verify_frankl_furedi",
          [](int r, std::uint64_t m, std::optional<int> cap) {
              return verdict_dict(hlag::frankl_furedi_check(r, m, cap));
          },
          py::arg("r"), py::arg("m"), py::arg("vertex_cap") = std::nullopt);
    m.def("theorem39_check",
          [](int r, int l, std::uint64_t budget) {
              return verdict_dict(hlag::theorem39_check(r, l, budget));
          },
          py::arg("r"), py::arg("l"), py::arg("sample_budget") = 0);

    m.def("remark_counterexample",
          [](int r, int l) {
              hlag::SharpnessExample ex = hlag::remark_counterexample(r, l);
              py::dict d;
              d["graph"] = ex.graph;
              d["value"] = ex.value.to_string();
              d["benchmark"] = ex.benchmark.to_string();
              d["value_float"] = ex.value.to_double();
              d["benchmark_float"] = ex.benchmark.to_double();
              py::list ws;
              for (const auto& w : ex.weights) ws.append(w.to_string());
              d["weights"] = ws;
              return d;
          },
          py::arg("r"), py::arg("l"));

    m.def("theorem3_matching",
          [](const hlag::RUniformGraph& g, int l) {
              hlag::MatchingCertificate cert = hlag::theorem3_matching(g, l);
              py::dict d;
              d["complete"] = cert.complete;
              d["source_count"] = cert.source_count;
              d["target_count"] = cert.target_count;
              py::list pairs;
              for (const auto& [s, t] : cert.pairs) pairs.append(py::make_tuple(s, t));
              d["pairs"] = pairs;
              return d;
          },
          py::arg("graph"), py::arg("l"));
}
