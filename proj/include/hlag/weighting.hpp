#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hlag/combinatorics.hpp"

namespace hlag {

// A point on the standard simplex: nonnegative weights summing to 1.
// `sum_deviation` records |sum - 1| of the raw input before normalization.
struct SimplexWeighting {
    std::vector<double> weights;
    double sum_deviation = 0.0;

    static SimplexWeighting normalized(std::vector<double> raw) {
        double sum = 0.0;
        for (double v : raw) {
            if (v < 0.0 || !std::isfinite(v))
                throw std::invalid_argument("SimplexWeighting: weights must be finite and nonnegative");
            sum += v;
        }
        if (sum <= 0.0) throw std::invalid_argument("SimplexWeighting: weights must not all be zero");
        SimplexWeighting out;
        out.sum_deviation = std::fabs(sum - 1.0);
        out.weights = std::move(raw);
        for (double& v : out.weights) v /= sum;
        return out;
    }

    static SimplexWeighting uniform(std::size_t n) {
        if (n == 0) throw std::invalid_argument("SimplexWeighting: dimension must be positive");
        SimplexWeighting out;
        out.weights.assign(n, 1.0 / static_cast<double>(n));
        return out;
    }

    // Uniform mass on `support` (1-based vertices), zero elsewhere.
    static SimplexWeighting on_support(std::size_t n, const VertexSet& support) {
        if (support.empty()) throw std::invalid_argument("SimplexWeighting: empty support");
        SimplexWeighting out;
        out.weights.assign(n, 0.0);
        for (Vertex v : support) {
            if (v < 1 || static_cast<std::size_t>(v) > n)
                throw std::invalid_argument("SimplexWeighting: support vertex out of range");
            out.weights[v - 1] = 1.0 / static_cast<double>(support.size());
        }
        return out;
    }

    std::size_t dimension() const { return weights.size(); }

    VertexSet support(double threshold) const {
        VertexSet s;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (weights[i] > threshold) s.push_back(static_cast<Vertex>(i + 1));
        return s;
    }
};

}  // namespace hlag
