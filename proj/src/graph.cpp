#include "hlag/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace hlag {

namespace {

std::string edge_to_string(const VertexSet& e) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

RUniformGraph::RUniformGraph(int r, int n, std::vector<VertexSet> edges) : r_(r), n_(n) {
    if (r < 2) throw std::invalid_argument("graph: uniformity r must be >= 2");
    if (n < 0) throw std::invalid_argument("graph: vertex count must be >= 0");
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("graph: edge " + edge_to_string(e) + " has arity " +
                                        std::to_string(e.size()) + ", expected " + std::to_string(r));
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n)
                throw std::invalid_argument("graph: edge " + edge_to_string(e) + ": vertex " +
                                            std::to_string(e[i]) + " out of range 1.." + std::to_string(n));
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("graph: edge " + edge_to_string(e) + ": repeated vertex " +
                                            std::to_string(e[i]));
        }
    }
    std::vector<std::pair<std::uint64_t, VertexSet>> keyed;
    keyed.reserve(edges.size());
    for (auto& e : edges) keyed.emplace_back(colex_rank(e), std::move(e));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    edges_.reserve(keyed.size());
    ranks_.reserve(keyed.size());
    for (auto& [rank, e] : keyed) {
        ranks_.push_back(rank);
        edges_.push_back(std::move(e));
    }
}

RUniformGraph RUniformGraph::parse(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("r") || !doc.contains("n") || !doc.contains("edges"))
        throw std::invalid_argument("malformed graph document: need object with r, n, edges");
    if (!doc["r"].is_number_integer() || !doc["n"].is_number_integer() || !doc["edges"].is_array())
        throw std::invalid_argument("malformed graph document: r, n must be integers and edges an array");
    int r = doc["r"].get<int>();
    int n = doc["n"].get<int>();
    std::vector<VertexSet> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array())
            throw std::invalid_argument("malformed graph document: edge entries must be arrays");
        VertexSet e;
        for (const auto& v : item) {
            if (!v.is_number_integer())
                throw std::invalid_argument("malformed graph document: vertices must be integers");
            e.push_back(v.get<int>());
        }
        edges.push_back(std::move(e));
    }
    return RUniformGraph(r, n, std::move(edges));
}

RUniformGraph RUniformGraph::colex_initial_segment(int r, std::uint64_t m) {
    if (r < 2) throw std::invalid_argument("colex_initial_segment: r must be >= 2");
    if (m < 1) throw std::invalid_argument("colex_initial_segment: m must be >= 1");
    std::vector<VertexSet> edges;
    edges.reserve(m);
    for (std::uint64_t k = 1; k <= m; ++k) edges.push_back(colex_unrank(r, k));
    int n = edges.back().back();  // colex orders by largest element
    return RUniformGraph(r, n, std::move(edges));
}

RUniformGraph RUniformGraph::complete(int t, int r) {
    if (t < r) throw std::invalid_argument("complete: need t >= r");
    return colex_initial_segment(r, binomial(t, r));
}

bool RUniformGraph::has_edge(const VertexSet& e) const {
    if (static_cast<int>(e.size()) != r_ || !is_strictly_increasing(e)) return false;
    return has_edge_rank(colex_rank(e));
}

bool RUniformGraph::has_edge_rank(std::uint64_t rank) const {
    return std::binary_search(ranks_.begin(), ranks_.end(), rank);
}

std::string RUniformGraph::to_json_text(int indent) const {
    nlohmann::json doc;
    doc["r"] = r_;
    doc["n"] = n_;
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : edges_) doc["edges"].push_back(e);
    return doc.dump(indent);
}

std::vector<VertexSet> link(const RUniformGraph& g, const VertexSet& s) {
    if (s.size() != 1 && s.size() != 2)
        throw std::invalid_argument("link: vertex subset must have size 1 or 2");
    if (!is_strictly_increasing(s) || s.back() > g.vertex_count())
        throw std::invalid_argument("link: vertex subset out of range");
    std::vector<VertexSet> out;
    for (const auto& e : g.edges()) {
        if (!std::includes(e.begin(), e.end(), s.begin(), s.end())) continue;
        VertexSet t;
        t.reserve(e.size() - s.size());
        std::set_difference(e.begin(), e.end(), s.begin(), s.end(), std::back_inserter(t));
        out.push_back(std::move(t));
    }
    // Edges are colex-sorted and removing a fixed set preserves colex order.
    return out;
}

std::vector<VertexSet> link_difference(const RUniformGraph& g, Vertex i, Vertex j) {
    if (i == j) throw std::invalid_argument("link_difference: vertices must differ");
    if (i < 1 || j < 1 || i > g.vertex_count() || j > g.vertex_count())
        throw std::invalid_argument("link_difference: vertex out of range");
    std::vector<VertexSet> out;
    for (const auto& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        if (std::binary_search(e.begin(), e.end(), j)) continue;
        VertexSet a;
        a.reserve(e.size() - 1);
        for (Vertex v : e)
            if (v != i) a.push_back(v);
        VertexSet with_j(a);
        with_j.insert(std::upper_bound(with_j.begin(), with_j.end(), j), j);
        if (!g.has_edge(with_j)) out.push_back(std::move(a));
    }
    return out;
}

bool is_left_compressed(const RUniformGraph& g) {
    for (const auto& e : g.edges()) {
        for (Vertex j : e) {
            for (Vertex i = 1; i < j; ++i) {
                if (std::binary_search(e.begin(), e.end(), i)) continue;
                VertexSet f;
                f.reserve(e.size());
                for (Vertex v : e)
                    if (v != j) f.push_back(v);
                f.insert(std::upper_bound(f.begin(), f.end(), i), i);
                if (!g.has_edge(f)) return false;
            }
        }
    }
    return true;
}

RUniformGraph compress(const RUniformGraph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> edges = g.edges();
    bool changed_in_sweep = true;
    while (changed_in_sweep) {
        changed_in_sweep = false;
        for (Vertex i = 1; i <= n; ++i) {
            for (Vertex j = i + 1; j <= n; ++j) {
                std::unordered_set<std::uint64_t> present;
                present.reserve(edges.size() * 2);
                for (const auto& e : edges) present.insert(colex_rank(e));
                bool moved = false;
                for (auto& e : edges) {
                    if (!std::binary_search(e.begin(), e.end(), j)) continue;
                    if (std::binary_search(e.begin(), e.end(), i)) continue;
                    VertexSet f;
                    f.reserve(e.size());
                    for (Vertex v : e)
                        if (v != j) f.push_back(v);
                    f.insert(std::upper_bound(f.begin(), f.end(), i), i);
                    if (present.count(colex_rank(f))) continue;
                    e = std::move(f);
                    moved = true;
                }
                if (moved) changed_in_sweep = true;
            }
        }
    }
    return RUniformGraph(g.r(), n, std::move(edges));
}

namespace {

struct CliqueSearch {
    const RUniformGraph* g;
    int r;
    int best;
    std::size_t cap;
    std::vector<VertexSet> found;

    bool extends_clique(const VertexSet& s, Vertex u) const {
        // New r-sets all contain u; check every (r-1)-subset of s with u.
        if (static_cast<int>(s.size()) < r - 1) return true;
        std::vector<int> pick(r - 1);
        return for_each_subset(s, 0, 0, pick, u);
    }

    bool for_each_subset(const VertexSet& s, std::size_t start, int depth,
                         std::vector<int>& pick, Vertex u) const {
        if (depth == r - 1) {
            VertexSet e(pick.begin(), pick.end());
            e.insert(std::upper_bound(e.begin(), e.end(), u), u);
            return g->has_edge(e);
        }
        for (std::size_t idx = start; idx < s.size(); ++idx) {
            pick[depth] = s[idx];
            if (!for_each_subset(s, idx + 1, depth + 1, pick, u)) return false;
        }
        return true;
    }

    void dfs(VertexSet& s, const std::vector<Vertex>& cand) {
        if (static_cast<int>(s.size()) > best) {
            best = static_cast<int>(s.size());
            found.clear();
        }
        if (static_cast<int>(s.size()) == best && found.size() < cap) found.push_back(s);
        for (std::size_t idx = 0; idx < cand.size(); ++idx) {
            if (static_cast<int>(s.size() + (cand.size() - idx)) < best) break;
            Vertex v = cand[idx];
            std::vector<Vertex> next;
            s.push_back(v);
            for (std::size_t k = idx + 1; k < cand.size(); ++k)
                if (extends_clique(s, cand[k])) next.push_back(cand[k]);
            dfs(s, next);
            s.pop_back();
        }
    }
};

}  // namespace

int max_clique_order(const RUniformGraph& g) {
    if (g.edge_count() == 0) return g.r() - 1;
    CliqueSearch search{&g, g.r(), g.r() - 1, 1, {}};
    VertexSet s;
    std::vector<Vertex> cand(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) cand[v - 1] = v;
    search.dfs(s, cand);
    return search.best;
}

std::vector<VertexSet> max_cliques(const RUniformGraph& g, std::size_t cap) {
    if (g.edge_count() == 0) return {};
    CliqueSearch search{&g, g.r(), g.r() - 1, cap, {}};
    VertexSet s;
    std::vector<Vertex> cand(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) cand[v - 1] = v;
    search.dfs(s, cand);
    return search.found;
}

bool has_clique_of_order(const RUniformGraph& g, int t) {
    if (t <= g.r() - 1) return g.vertex_count() >= t || t <= 0;
    return max_clique_order(g) >= t;
}

}  // namespace hlag
