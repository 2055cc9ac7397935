#pragma once

#include <optional>
#include <span>
#include <string>

#include "plwd/algorithm.hpp"
#include "plwd/graph.hpp"
#include "plwd/pareto.hpp"
#include "plwd/weights.hpp"

namespace plwd {

/// Distance-based pruning orders for W_t = 1/t^k, k >= 1.
///  PreferLonger ("order1"):  p before q iff l(p) >= l(q) and d(p) <= d(q).
///  PreferShorter ("order2"): p before q iff l(p) <= l(q) and d(p) <= d(q).
enum class PruningOrder { PreferLonger, PreferShorter };

std::string_view to_string(PruningOrder order);

/// Two consecutive edges (a, b), (b, c).
struct EdgePair {
    Edge first;
    Edge second;
};

struct MonotonicityReport {
    bool nondecreasing_ok = true;  // w(a,b) <= w(b,c) for every consecutive pair
    bool nonincreasing_ok = true;  // w(a,b) >= w(b,c) for every consecutive pair
    std::optional<EdgePair> nondecreasing_violation;
    std::optional<EdgePair> nonincreasing_violation;

    /// The first consecutive pair that breaks either condition, if any.
    std::optional<EdgePair> first_violation() const;

    /// Whether the edge condition licenses `order` when labels grow away from
    /// the anchor in `direction`. Growing from a source appends edges, so the
    /// prefer-longer order needs weights that never decrease along edges;
    /// growing toward a target prepends them and needs the mirror condition.
    bool grants(PruningOrder order, Direction direction) const;

    /// The pair that blocks `order` in `direction`, if any.
    std::optional<EdgePair> blocking_pair(PruningOrder order, Direction direction) const;
};

MonotonicityReport check_edge_monotonicity(const WeightedDigraph& g);

/// Throw WeightFormUnsupported unless `w` is 1/t^k with k >= 1.
bool dominates_order1(const Label& p, const Label& q, const WeightSequence& w);
bool dominates_order2(const Label& p, const Label& q, const WeightSequence& w);

/// Minimal labels under `order`. Throws ConditionNotVerified when `report`
/// does not grant the order for `direction`, WeightFormUnsupported for
/// non-power-law `w`.
LabelSet filtered_front(std::span<const Label> labels, PruningOrder order, const WeightSequence& w,
                        const MonotonicityReport& report, Direction direction);

/// Same distances as compute_distances, pruning with `order` instead of (s, l)
/// dominance. Refuses to run when the graph does not satisfy the matching
/// monotonicity condition; there is no fallback.
DistanceReport compute_distances_specialized(const WeightedDigraph& g, const WeightSequence& w, Anchor anchor,
                                             PruningOrder order, const RunOptions& options = {});

}  // namespace plwd
