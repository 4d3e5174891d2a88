#include "hlag/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace hlag {

namespace {

struct DownSetWalker {
    int r;
    int l;
    std::uint64_t m;
    std::uint64_t total;                      // C(l, r)
    std::uint64_t forbidden_rank;             // 0 when unused
    std::vector<std::vector<std::uint64_t>> covers;  // lower covers per rank (1-based index)
    std::vector<VertexSet> sets;              // unranked set per rank
    std::vector<char> present;
    std::vector<std::uint64_t> chosen;
    const std::function<bool(const RUniformGraph&)>* visit;
    bool stopped = false;

    void prepare() {
        covers.resize(total + 1);
        sets.resize(total + 1);
        present.assign(total + 1, 0);
        for (std::uint64_t rank = 1; rank <= total; ++rank) {
            VertexSet s = colex_unrank(r, rank);
            sets[rank] = s;
            // Lower covers: decrease one element by one where it stays
            // strictly increasing; dominance is generated by these moves.
            for (int k = 0; k < r; ++k) {
                Vertex lower = s[k] - 1;
                if (lower < 1) continue;
                if (k > 0 && lower == s[k - 1]) continue;
                VertexSet c = s;
                c[k] = lower;
                covers[rank].push_back(colex_rank(c));
            }
        }
    }

    bool addable(std::uint64_t rank) const {
        if (rank == forbidden_rank) return false;
        for (std::uint64_t c : covers[rank])
            if (!present[c]) return false;
        return true;
    }

    void emit() {
        std::vector<VertexSet> edges;
        edges.reserve(chosen.size());
        for (std::uint64_t rank : chosen) edges.push_back(sets[rank]);
        RUniformGraph g(r, l, std::move(edges));
        if (!(*visit)(g)) stopped = true;
    }

    void grow(std::uint64_t last) {
        if (stopped) return;
        if (chosen.size() == m) {
            emit();
            return;
        }
        std::uint64_t needed = m - chosen.size();
        for (std::uint64_t rank = last + 1; rank + needed - 1 <= total; ++rank) {
            if (!addable(rank)) continue;
            present[rank] = 1;
            chosen.push_back(rank);
            grow(rank);
            chosen.pop_back();
            present[rank] = 0;
            if (stopped) return;
        }
    }
};

}  // namespace

bool enumeration_in_scale(const EnumerationSpec& spec) {
    if (spec.r == 2) return spec.l <= 9;
    if (spec.r == 3) return spec.l <= 7 || spec.m <= 12;
    if (spec.r == 4) return spec.l <= 7 && spec.m <= 20;
    return false;
}

void enumerate_left_compressed(const EnumerationSpec& spec,
                               const std::function<bool(const RUniformGraph&)>& visit) {
    if (spec.r < 2) throw std::invalid_argument("enumerate: r must be >= 2");
    if (spec.l < spec.r) throw std::invalid_argument("enumerate: need l >= r");
    if (spec.m < 1) throw std::invalid_argument("enumerate: need m >= 1");
    if (!enumeration_in_scale(spec))
        throw std::domain_error("enumerate: request (r=" + std::to_string(spec.r) +
                                ", l=" + std::to_string(spec.l) + ", m=" + std::to_string(spec.m) +
                                ") is outside the supported desk scale");
    std::uint64_t total = binomial(spec.l, spec.r);
    if (spec.m > total) return;  // no graph has that many edges on [l]

    DownSetWalker walker;
    walker.r = spec.r;
    walker.l = spec.l;
    walker.m = spec.m;
    walker.total = total;
    walker.forbidden_rank = 0;
    walker.visit = &visit;
    walker.prepare();

    // A down-set contains the complete r-graph on [l-1] iff it contains its
    // dominance-top edge {l-r,...,l-1}. For l <= r a clique of order l-1 is
    // vacuous (any (r-1)-set), so every graph carries one.
    std::uint64_t top_rank = 0;
    CliqueFilter filter = spec.clique_filter;
    if (spec.l > spec.r) {
        VertexSet top(spec.r);
        for (int k = 0; k < spec.r; ++k) top[k] = spec.l - spec.r + k;
        top_rank = colex_rank(top);
    } else if (filter == CliqueFilter::Forbid) {
        return;  // vacuously present in every graph
    } else {
        filter = CliqueFilter::Ignore;  // vacuously satisfied
    }

    switch (filter) {
        case CliqueFilter::Ignore:
            walker.grow(0);
            break;
        case CliqueFilter::Forbid:
            walker.forbidden_rank = top_rank;
            walker.grow(0);
            break;
        case CliqueFilter::Require: {
            std::uint64_t seed = binomial(spec.l - 1, spec.r);  // colex prefix = [l-1]^{(r)}
            if (spec.m < seed) return;
            for (std::uint64_t rank = 1; rank <= seed; ++rank) {
                walker.present[rank] = 1;
                walker.chosen.push_back(rank);
            }
            walker.grow(seed);
            break;
        }
    }
}

std::vector<RUniformGraph> enumerate_left_compressed_all(const EnumerationSpec& spec) {
    std::vector<RUniformGraph> out;
    enumerate_left_compressed(spec, [&](const RUniformGraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::uint64_t count_left_compressed(const EnumerationSpec& spec) {
    std::uint64_t count = 0;
    enumerate_left_compressed(spec, [&](const RUniformGraph&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace hlag
