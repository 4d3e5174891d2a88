#include "hlag/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace hlag {

namespace {

void check_dimension(const RUniformGraph& g, std::size_t dim) {
    if (dim != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("weight vector dimension " + std::to_string(dim) +
                                    " does not match vertex count " +
                                    std::to_string(g.vertex_count()));
}

double product_over(const VertexSet& s, const std::vector<double>& x) {
    double p = 1.0;
    for (Vertex v : s) p *= x[v - 1];
    return p;
}

}  // namespace

double evaluate(const RUniformGraph& g, const std::vector<double>& x) {
    check_dimension(g, x.size());
    double total = 0.0;
    for (const auto& e : g.edges()) total += product_over(e, x);
    return total;
}

double evaluate(const RUniformGraph& g, const SimplexWeighting& x) {
    return evaluate(g, x.weights);
}

Rational evaluate_exact(const RUniformGraph& g, const std::vector<Rational>& x) {
    check_dimension(g, x.size());
    Rational total(0);
    for (const auto& e : g.edges()) {
        Rational term(1);
        for (Vertex v : e) term = term * x[v - 1];
        total = total + term;
    }
    return total;
}

std::vector<double> link_values(const RUniformGraph& g, const std::vector<double>& x) {
    check_dimension(g, x.size());
    std::vector<double> out(x.size(), 0.0);
    const int r = g.r();
    std::vector<double> prefix(r + 1), suffix(r + 1);
    for (const auto& e : g.edges()) {
        prefix[0] = 1.0;
        for (int k = 0; k < r; ++k) prefix[k + 1] = prefix[k] * x[e[k] - 1];
        suffix[r] = 1.0;
        for (int k = r - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * x[e[k] - 1];
        for (int k = 0; k < r; ++k) out[e[k] - 1] += prefix[k] * suffix[k + 1];
    }
    return out;
}

double pair_link_value(const RUniformGraph& g, Vertex i, Vertex j, const std::vector<double>& x) {
    check_dimension(g, x.size());
    if (i == j) throw std::invalid_argument("pair_link_value: vertices must differ");
    double total = 0.0;
    for (const auto& e : g.edges()) {
        if (!std::binary_search(e.begin(), e.end(), i)) continue;
        if (!std::binary_search(e.begin(), e.end(), j)) continue;
        double p = 1.0;
        for (Vertex v : e)
            if (v != i && v != j) p *= x[v - 1];
        total += p;
    }
    return total;
}

double family_value(const std::vector<VertexSet>& family, const std::vector<double>& x) {
    double total = 0.0;
    for (const auto& s : family) total += product_over(s, x);
    return total;
}

double complete_lagrangian(int t, int r) {
    if (t < r) throw std::invalid_argument("complete_lagrangian: need t >= r");
    double denom = 1.0;
    for (int k = 0; k < r; ++k) denom *= static_cast<double>(t);
    return static_cast<double>(binomial(t, r)) / denom;
}

Rational complete_lagrangian_exact(int t, int r) {
    if (t < r) throw std::invalid_argument("complete_lagrangian: need t >= r");
    __int128 denom = 1;
    for (int k = 0; k < r; ++k) denom *= t;
    return Rational::from_parts(static_cast<__int128>(binomial(t, r)), denom);
}

SimplexWeighting baum_eagon_step(const RUniformGraph& g, const SimplexWeighting& x) {
    double value = evaluate(g, x.weights);
    if (value <= 0.0)
        throw std::domain_error("baum_eagon_step: edge polynomial is zero at this point");
    std::vector<double> lv = link_values(g, x.weights);
    std::vector<double> next(x.weights.size());
    const double denom = g.r() * value;
    double sum = 0.0;
    for (std::size_t k = 0; k < next.size(); ++k) {
        next[k] = x.weights[k] * lv[k] / denom;
        sum += next[k];
    }
    for (double& v : next) v /= sum;
    SimplexWeighting out;
    out.weights = std::move(next);
    return out;
}

// ---------------------------------------------------------------------------
// maximize internals
// ---------------------------------------------------------------------------

namespace {

struct AscentResult {
    std::vector<double> x;
    double value = 0.0;
    long iterations = 0;
    bool converged = false;
};

// Multiplicative ascent until the per-step value change drops below tol.
void ascend(const RUniformGraph& g, std::vector<double>& x, double& value, long budget,
            double tol, long& iterations, bool& converged) {
    const int r = g.r();
    for (long it = 0; it < budget; ++it) {
        if (value <= 0.0) return;
        std::vector<double> lv = link_values(g, x);
        const double denom = r * value;
        double sum = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            x[k] *= lv[k] / denom;
            sum += x[k];
        }
        for (double& v : x) v /= sum;
        double next = evaluate(g, x);
        ++iterations;
        if (std::fabs(next - value) < tol) {
            value = next;
            converged = true;
            return;
        }
        value = next;
    }
}

// Solves the square system a*delta = rhs in place; returns false if a pivot
// degenerates (singular KKT system, e.g. a flat family of optima).
bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
        if (std::fabs(a[pivot][col]) < 1e-12) return false;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            double f = a[row][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        double v = rhs[col];
        for (std::size_t k = col + 1; k < n; ++k) v -= a[col][k] * rhs[k];
        rhs[col] = v / a[col][col];
    }
    return true;
}

// Newton iteration on the stationarity system {link_i = mu on S, sum = 1}.
// Returns true and updates x when it converges inside the simplex on a
// (possibly shrunken) support.
bool newton_polish(const RUniformGraph& g, std::vector<double>& x, double support_threshold) {
    VertexSet support;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] > support_threshold) support.push_back(static_cast<Vertex>(k + 1));

    for (int attempt = 0; attempt < 4; ++attempt) {
        if (support.empty()) return false;
        std::vector<double> y(x.size(), 0.0);
        {
            double mass = 0.0;
            for (Vertex v : support) mass += x[v - 1];
            if (mass <= 0.0) return false;
            for (Vertex v : support) y[v - 1] = x[v - 1] / mass;
        }
        const std::size_t k = support.size();
        double mu = g.r() * evaluate(g, y);
        bool converged = false;
        bool shrink = false;
        for (int it = 0; it < 50; ++it) {
            std::vector<double> lv = link_values(g, y);
            std::vector<double> rhs(k + 1);
            double fmax = 0.0;
            for (std::size_t a = 0; a < k; ++a) {
                rhs[a] = -(lv[support[a] - 1] - mu);
                fmax = std::max(fmax, std::fabs(rhs[a]));
            }
            double sum = 0.0;
            for (Vertex v : support) sum += y[v - 1];
            rhs[k] = -(sum - 1.0);
            fmax = std::max(fmax, std::fabs(rhs[k]));
            if (fmax < 1e-13) {
                converged = true;
                break;
            }
            std::vector<std::vector<double>> jac(k + 1, std::vector<double>(k + 1, 0.0));
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = 0; b < k; ++b)
                    if (a != b) jac[a][b] = pair_link_value(g, support[a], support[b], y);
                jac[a][k] = -1.0;
                jac[k][a] = 1.0;
            }
            if (!solve_dense(jac, rhs)) return false;
            for (std::size_t a = 0; a < k; ++a) y[support[a] - 1] += rhs[a];
            mu += rhs[k];
            bool bad = false;
            for (Vertex v : support) {
                if (y[v - 1] < -1e-6 || !std::isfinite(y[v - 1])) return false;  // wrong support, give up
                if (y[v - 1] < 0.0) bad = true;
            }
            if (bad) {
                // Drop the most negative coordinate and retry on the rest.
                Vertex drop = support.front();
                double worst = 1.0;
                for (Vertex v : support)
                    if (y[v - 1] < worst) {
                        worst = y[v - 1];
                        drop = v;
                    }
                support.erase(std::find(support.begin(), support.end(), drop));
                x[drop - 1] = 0.0;
                shrink = true;
                break;
            }
        }
        if (shrink) continue;
        if (!converged) return false;
        double mass = 0.0;
        for (double v : y) mass += v;
        for (double& v : y) v /= mass;
        x = std::move(y);
        return true;
    }
    return false;
}

AscentResult run_from(const RUniformGraph& g, std::vector<double> x, const SolverConfig& cfg) {
    AscentResult res;
    double value = evaluate(g, x);
    long iterations = 0;
    bool converged = false;
    ascend(g, x, value, cfg.max_iterations, cfg.convergence_tol, iterations, converged);

    // Support-minimization pass: drop near-zero weights and re-ascend.
    bool pruned = false;
    std::vector<double> pr = x;
    for (double& v : pr)
        if (v <= cfg.support_threshold && v != 0.0) {
            v = 0.0;
            pruned = true;
        }
    if (pruned) {
        double mass = 0.0;
        for (double v : pr) mass += v;
        if (mass > 0.0) {
            for (double& v : pr) v /= mass;
            double pvalue = evaluate(g, pr);
            bool pconv = false;
            ascend(g, pr, pvalue, std::min<long>(cfg.max_iterations, 2000), cfg.convergence_tol,
                   iterations, pconv);
            if (pvalue >= value) {
                x = std::move(pr);
                value = pvalue;
                converged = converged || pconv;
            }
        }
    }

    // Quadratic cleanup of the first-order conditions on the final support.
    std::vector<double> polished = x;
    if (newton_polish(g, polished, cfg.support_threshold)) {
        double pvalue = evaluate(g, polished);
        if (pvalue >= value - 1e-12) {
            x = std::move(polished);
            value = pvalue;
            converged = true;
        }
    }

    res.x = std::move(x);
    res.value = value;
    res.iterations = iterations;
    res.converged = converged;
    return res;
}

// Deterministic uniform double in [0,1) from the engine's raw 64 bits.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

VertexSet support_of(const std::vector<double>& x, double threshold) {
    VertexSet s;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] > threshold) s.push_back(static_cast<Vertex>(k + 1));
    return s;
}

// Max-reduction with a deterministic tie-break: on (numerically) equal
// values prefer the smaller support, then the colex-smaller support.
bool candidate_improves(const AscentResult& cand, const VertexSet& cand_support,
                        const AscentResult& best, const VertexSet& best_support) {
    constexpr double kTieEps = 1e-13;
    if (cand.value > best.value + kTieEps) return true;
    if (cand.value < best.value - kTieEps) return false;
    if (cand_support.size() != best_support.size())
        return cand_support.size() < best_support.size();
    if (cand_support.empty()) return false;
    return colex_compare(cand_support, best_support) == std::strong_ordering::less;
}

}  // namespace

LagrangianEstimate maximize(const RUniformGraph& g, const SolverConfig& cfg) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("maximize: graph has no edges");
    if (cfg.restarts < 0 || cfg.max_iterations < 1 || cfg.convergence_tol <= 0.0 ||
        cfg.support_threshold <= 0.0)
        throw std::invalid_argument("maximize: solver configuration values must be positive");
    if (cfg.support_threshold >= 1.0 / g.vertex_count())
        throw std::invalid_argument("maximize: support threshold must stay below 1/n");
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());

    std::vector<std::vector<double>> starts;
    starts.push_back(SimplexWeighting::uniform(n).weights);
    if (is_left_compressed(g)) {
        for (int k = g.r(); k <= g.vertex_count(); ++k) {
            VertexSet prefix(k);
            for (int v = 1; v <= k; ++v) prefix[v - 1] = v;
            starts.push_back(SimplexWeighting::on_support(n, prefix).weights);
        }
    }
    for (const auto& clique : max_cliques(g, 32))
        starts.push_back(SimplexWeighting::on_support(n, clique).weights);
    std::mt19937_64 rng(cfg.seed);
    for (int t = 0; t < cfg.restarts; ++t) {
        std::vector<double> x(n);
        double sum = 0.0;
        for (double& v : x) {
            v = -std::log(1.0 - next_unit(rng));
            sum += v;
        }
        if (sum <= 0.0) continue;
        for (double& v : x) v /= sum;
        starts.push_back(std::move(x));
    }

    AscentResult best;
    VertexSet best_support;
    bool have_best = false;
    for (auto& start : starts) {
        AscentResult cand = run_from(g, std::move(start), cfg);
        VertexSet cand_support = support_of(cand.x, cfg.support_threshold);
        if (!have_best || candidate_improves(cand, cand_support, best, best_support)) {
            best = std::move(cand);
            best_support = std::move(cand_support);
            have_best = true;
        }
    }

    LagrangianEstimate est;
    est.weighting.weights = best.x;
    est.value = best.value;
    est.support = best_support;
    est.iterations = best.iterations;
    est.restarts_used = cfg.restarts;
    est.kkt = verify_frankl_rodl(g, est.weighting, cfg.support_threshold);
    est.converged = best.converged || est.kkt.max_residual <= 1e-10;
    return est;
}

double brute_force_oracle(const RUniformGraph& g, int denominator) {
    if (denominator < 1) throw std::invalid_argument("brute_force_oracle: denominator must be >= 1");
    const int n = g.vertex_count();
    std::vector<double> x(n, 0.0);
    double best = 0.0;
    const double inv = 1.0 / static_cast<double>(denominator);
    // Depth-first over all compositions of `denominator` into n parts.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            x[pos] = remaining * inv;
            best = std::max(best, evaluate(g, x));
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            x[pos] = k * inv;
            self(self, pos + 1, remaining - k);
        }
        x[pos] = 0.0;
    };
    if (n == 0) return 0.0;
    rec(rec, 0, denominator);
    return best;
}

KktReport verify_frankl_rodl(const RUniformGraph& g, const SimplexWeighting& x,
                             double support_cutoff) {
    check_dimension(g, x.weights.size());
    KktReport report;
    report.value = evaluate(g, x.weights);
    report.link_values = link_values(g, x.weights);
    report.support = x.support(support_cutoff);
    const double target = g.r() * report.value;
    for (Vertex v : report.support)
        report.max_residual = std::max(report.max_residual,
                                       std::fabs(report.link_values[v - 1] - target));
    report.pair_coverage_ok = true;
    for (std::size_t a = 0; a < report.support.size() && report.pair_coverage_ok; ++a) {
        for (std::size_t b = a + 1; b < report.support.size(); ++b) {
            Vertex i = report.support[a], j = report.support[b];
            bool covered = false;
            for (const auto& e : g.edges()) {
                if (std::binary_search(e.begin(), e.end(), i) &&
                    std::binary_search(e.begin(), e.end(), j)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                report.pair_coverage_ok = false;
                break;
            }
        }
    }
    report.monotone_ok = true;
    for (std::size_t k = 1; k < x.weights.size(); ++k)
        if (x.weights[k] > x.weights[k - 1] + 1e-12) report.monotone_ok = false;
    return report;
}

StructuralChecks structural_weight_checks(const RUniformGraph& g, const SimplexWeighting& x,
                                          int l, double support_cutoff) {
    check_dimension(g, x.weights.size());
    if (!is_left_compressed(g))
        throw std::invalid_argument("structural_weight_checks: graph is not left-compressed");
    StructuralChecks checks;
    VertexSet support = x.support(support_cutoff);
    for (std::size_t a = 0; a < support.size(); ++a) {
        for (std::size_t b = a + 1; b < support.size(); ++b) {
            Vertex i = support[a], j = support[b];
            double lhs = (x.weights[i - 1] - x.weights[j - 1]) * pair_link_value(g, i, j, x.weights);
            double rhs = family_value(link_difference(g, i, j), x.weights);
            checks.pair_identity_violation =
                std::max(checks.pair_identity_violation, std::fabs(lhs - rhs));
        }
    }
    for (std::size_t k = 1; k < x.weights.size(); ++k)
        checks.monotone_violation =
            std::max(checks.monotone_violation, x.weights[k] - x.weights[k - 1]);
    checks.monotone_violation = std::max(checks.monotone_violation, 0.0);

    if (l >= g.r() + 1 && l == g.vertex_count()) {
        VertexSet top(g.r());
        for (int k = 0; k < g.r(); ++k) top[k] = l - g.r() + k;  // {l-r,...,l-1}
        if (g.has_edge(top)) {  // left-compressed, so this means [l-1]^{(r)} is present
            checks.bracket_checked = true;
            double x1 = x.weights[0];
            double xl1 = x.weights[l - 2];
            double xl = x.weights[l - 1];
            checks.bracket_lower_violation = std::max(0.0, x1 - (xl1 + xl));
            checks.bracket_upper_violation = std::max(0.0, (xl1 + xl) - 2.0 * xl1);
        }
    }
    return checks;
}

bool certify_value_exceeds(const RUniformGraph& g, const std::vector<double>& x,
                           const Rational& bound, Rational* witness_value) {
    check_dimension(g, x.size());
    constexpr long long kDen = 1LL << 20;
    std::vector<long long> num(x.size());
    long long total = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        double v = std::max(0.0, x[k]);
        num[k] = std::llround(v * static_cast<double>(kDen));
        total += num[k];
    }
    if (total <= 0) return false;
    // Repair rounding drift on the largest coordinate so the weights sum to 1.
    std::size_t arg = 0;
    for (std::size_t k = 1; k < num.size(); ++k)
        if (num[k] > num[arg]) arg = k;
    num[arg] += kDen - total;
    if (num[arg] < 0) return false;
    std::vector<Rational> weights;
    weights.reserve(num.size());
    for (long long v : num) weights.emplace_back(v, kDen);
    Rational value = evaluate_exact(g, weights);
    if (witness_value) *witness_value = value;
    return value > bound;
}

std::string LagrangianEstimate::to_json_text() const {
    nlohmann::json doc;
    doc["value"] = value;
    doc["weights"] = weighting.weights;
    doc["support"] = support;
    doc["kkt_residual"] = kkt.max_residual;
    doc["converged"] = converged;
    doc["restarts_used"] = restarts_used;
    return doc.dump();
}

}  // namespace hlag
