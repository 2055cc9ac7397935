#pragma once

#include <cstddef>
#include <cstdint>

#include "plwd/document.hpp"

namespace plwd {

/// Closed interval edge weights are drawn from, quantized to 0.01.
struct WeightRange {
    double min = 1.0;
    double max = 10.0;
};

enum class Monotone { NonDecreasing, NonIncreasing };

// All generators are deterministic in `seed` on every platform: they draw from
// std::mt19937_64 directly rather than through std distributions.

/// Rooted tree on vertex 0 with every edge pointing toward the root, so each
/// vertex has exactly one path to it.
GraphDocument gen_tree(std::size_t n, std::uint64_t seed, WeightRange range = {});

/// Center 0 with an edge from every other vertex, plus chords i -> j between
/// leaves (i > j) with probability `chord_prob`.
GraphDocument gen_star(std::size_t n, std::uint64_t seed, WeightRange range = {}, double chord_prob = 0.3);

/// Each pair is joined with probability `edge_prob`, oriented along a random
/// permutation of the vertices.
GraphDocument gen_random_dag(std::size_t n, double edge_prob, std::uint64_t seed, WeightRange range = {});

/// Random DAG whose consecutive edges satisfy w(a,b) <= w(b,c)
/// (or >= for NonIncreasing).
GraphDocument gen_monotone_dag(std::size_t n, std::uint64_t seed, Monotone monotone = Monotone::NonDecreasing,
                               double edge_prob = 0.4, WeightRange range = {});

}  // namespace plwd
