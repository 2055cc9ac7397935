#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "plwd/document.hpp"
#include "plwd/generators.hpp"
#include "plwd/graph.hpp"
#include "plwd/oracle.hpp"
#include "plwd/weights.hpp"

namespace plwd::testing {

// Reference graph: v5 -> v4 -> {v3 -> v0, v2 -> v1 -> v0}. The edge weights are the
// ones used in the worked sums 20+3+1, 20+3+4+2 and (3+1)/2.
inline std::vector<Edge> example1_edges() {
    return {{5, 4, 20}, {4, 3, 3}, {3, 0, 1}, {4, 2, 3}, {2, 1, 4}, {1, 0, 2}};
}

inline WeightedDigraph example1_graph() {
    return WeightedDigraph::build(6, example1_edges());
}

// Monotone example graph, oriented away from v0. The five v0 -> v5 paths have
// (s, l) = (15,3), (18,3), (21,3), (13,2), (5,1), and consecutive edge weights
// never decrease. v6 hangs off v5.
inline std::vector<Edge> monotone_example_edges() {
    return {{0, 1, 4}, {1, 3, 4}, {3, 5, 7}, {0, 2, 4}, {2, 3, 7},
            {2, 4, 8}, {4, 5, 9}, {0, 3, 6}, {0, 5, 5}, {5, 6, 10}};
}

inline WeightedDigraph monotone_example_graph() {
    return WeightedDigraph::build(7, monotone_example_edges());
}

inline constexpr double kMonotoneExampleLastEdge = 10.0;

inline bool close(double a, double b, double rel = 1e-9) {
    if (std::isinf(a) || std::isinf(b)) {
        return a == b;
    }
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::uint32_t integer(std::uint32_t lo, std::uint32_t hi) {
        return lo + static_cast<std::uint32_t>(engine_() % (hi - lo + 1));
    }
    template <class T>
    const T& pick(const std::vector<T>& xs) { return xs[engine_() % xs.size()]; }

private:
    std::mt19937_64 engine_;
};

/// Positive non-increasing list of `length` entries starting at or below `top`.
inline WeightSequence random_nonincreasing_list(Rng& rng, std::size_t length, double top = 2.0) {
    std::vector<double> values(length);
    for (auto& v : values) {
        v = rng.uniform(0.05, top);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return WeightSequence::explicit_list(std::move(values));
}

}  // namespace plwd::testing
