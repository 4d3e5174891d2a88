#include "hlag/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace hlag {

namespace {

constexpr int kMaxPascal = 140;

// Pascal triangle cache; entries that would overflow uint64 hold UINT64_MAX.
const std::array<std::array<std::uint64_t, kMaxPascal + 1>, kMaxPascal + 1>& pascal_table() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxPascal + 1>, kMaxPascal + 1> t{};
        for (int n = 0; n <= kMaxPascal; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                std::uint64_t a = t[n - 1][k - 1];
                std::uint64_t b = (k <= n - 1) ? t[n - 1][k] : 0;
                t[n][k] = (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n > kMaxPascal) throw std::overflow_error("binomial: n too large (" + std::to_string(n) + ")");
    std::uint64_t v = pascal_table()[n][k];
    if (v == UINT64_MAX) throw std::overflow_error("binomial: value exceeds uint64");
    return v;
}

std::strong_ordering colex_compare(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("colex_compare: size mismatch");
    // Colex on sorted sets is lexicographic comparison from the largest
    // element down.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

std::uint64_t colex_rank(const VertexSet& a) {
    if (!is_strictly_increasing(a))
        throw std::invalid_argument("colex_rank: set must be strictly increasing, 1-based");
    std::uint64_t rank = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        rank += binomial(a[i] - 1, static_cast<int>(i) + 1);
    return rank;
}

VertexSet colex_unrank(int r, std::uint64_t k) {
    if (r < 1) throw std::invalid_argument("colex_unrank: r must be >= 1");
    if (k < 1) throw std::invalid_argument("colex_unrank: rank must be >= 1");
    VertexSet out(r);
    std::uint64_t rem = k - 1;
    for (int pos = r; pos >= 1; --pos) {
        // Largest v with C(v-1, pos) <= rem.
        int v = pos;  // C(pos-1, pos) == 0 always qualifies
        while (binomial(v, pos) <= rem) ++v;
        out[pos - 1] = v;
        rem -= binomial(v - 1, pos);
    }
    return out;
}

bool is_strictly_increasing(const VertexSet& a, Vertex lo) {
    Vertex prev = lo - 1;
    for (Vertex v : a) {
        if (v <= prev) return false;
        prev = v;
    }
    return true;
}

std::vector<VertexSet> all_subsets(int n, int k) {
    std::vector<VertexSet> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    out.reserve(binomial(n, k));
    std::uint64_t count = binomial(n, k);
    for (std::uint64_t rank = 1; rank <= count; ++rank)
        out.push_back(colex_unrank(k, rank));
    return out;
}

}  // namespace hlag
