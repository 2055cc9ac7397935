#pragma once

#include <cstddef>
#include <vector>

#include "plwd/graph.hpp"
#include "plwd/pareto.hpp"
#include "plwd/weights.hpp"

namespace plwd::oracle {

// Exhaustive reference implementations. Nothing here calls into the pareto
// filter or the label-correcting search; only graph and weight types are shared.

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

struct PathRecord {
    Path path;
    double sum = 0.0;
    std::size_t length = 0;

    double distance(const WeightSequence& w) const;
};

struct PathInventory {
    VertexId from = 0;
    VertexId to = 0;
    std::vector<PathRecord> paths;  // depth-first order, ascending successor index
};

/// Every path from `a` to `b`. Throws ExplosionGuard past `cap` paths.
PathInventory enumerate_all_paths(const WeightedDigraph& g, VertexId a, VertexId b,
                                  std::size_t cap = kDefaultPathCap);

double brute_force_distance(const PathInventory& inventory, const WeightSequence& w);
double brute_force_distance(const WeightedDigraph& g, const WeightSequence& w, VertexId a, VertexId b,
                            std::size_t cap = kDefaultPathCap);

/// Minimal (s, l) pairs of the inventory by the quadratic definition, sorted
/// by length descending.
LabelSet brute_force_front(const PathInventory& inventory);
LabelSet brute_force_front(const WeightedDigraph& g, VertexId a, VertexId b, std::size_t cap = kDefaultPathCap);

/// Plain shortest weight sum from every vertex to `target`; +inf if unreachable.
std::vector<double> classic_shortest_path(const WeightedDigraph& g, VertexId target);

}  // namespace plwd::oracle
