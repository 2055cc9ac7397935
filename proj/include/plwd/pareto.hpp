#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace plwd {

class WeightSequence;

/// Summary (s, l) of one path: weight sum and number of edges.
struct Label {
    double sum = 0.0;
    std::uint32_t length = 0;

    friend bool operator==(const Label&, const Label&) = default;
};

/// Per-vertex Pareto front. Outputs of the filters below are antichains in
/// canonical order (preferred length first).
using LabelSet = std::vector<Label>;

/// p dominates q: p.length >= q.length and p.sum <= q.sum. Reflexive.
bool dominates(const Label& p, const Label& q);

/// Minimal elements under `dominates`; duplicates merged. Exact comparisons.
LabelSet pareto_filter(std::span<const Label> labels);

using Dominance = std::function<bool(const Label&, const Label&)>;

/// Quadratic reference form of the front: keeps x unless some y != x with
/// dominance(y, x) exists. Duplicates merged.
LabelSet definitional_front(std::span<const Label> labels, const Dominance& dominance);

/// No member dominated by a distinct member, and no duplicates.
bool is_antichain(std::span<const Label> labels, const Dominance& dominance);

/// Prepends (or appends) one edge of weight phi: (s + phi, l + 1).
Label extend(double phi, const Label& label);

/// W_l * s, or 0 for the empty path's (0, 0).
double label_distance(const Label& label, const WeightSequence& w);

/// A path summarised by its total distance instead of its sum.
struct DistanceLength {
    double distance = 0.0;
    std::size_t length = 0;
};

/// Distance of a concatenation from the distances of its parts:
/// (W_{a+b} * (d_a / W_a + d_b / W_b), a + b). Both lengths must be >= 1.
DistanceLength combine_distances(DistanceLength a, DistanceLength b, const WeightSequence& w);

}  // namespace plwd
