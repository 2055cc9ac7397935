#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "plwd/graph.hpp"
#include "plwd/pareto.hpp"
#include "plwd/weights.hpp"

namespace plwd {

/// Which end of the paths is pinned to the anchor vertex.
/// ToTarget: distance[v] = d(v, anchor). FromSource: distance[v] = d(anchor, v).
enum class Direction { ToTarget, FromSource };

struct Anchor {
    VertexId vertex = 0;
    Direction direction = Direction::ToTarget;
};

/// How the next frontier is formed after each pass.
///  ChangedSet: vertices whose label set changed during the pass.
///  ReachedOutsideFrontier: every vertex with a non-empty label set that was
///  not in the frontier just processed (the literal reading of the loop).
enum class FrontierRule { ChangedSet, ReachedOutsideFrontier };

/// Order used to prune each vertex's label set.
///  Sum: (s, l) dominance, valid for every non-increasing weight sequence.
///  DistanceLonger / DistanceShorter: distance-based orders that need a
///  power-law weight sequence and an edge-monotone graph (see special_pruning.hpp).
enum class FrontKind { Sum, DistanceLonger, DistanceShorter };

struct PassEvent {
    std::size_t iteration;  // 1-based outer-loop counter
    VertexId vertex;        // vertex whose label set was just filtered
    std::span<const Label> labels;
};

using PassObserver = std::function<void(const PassEvent&)>;

struct RunOptions {
    FrontierRule frontier = FrontierRule::ChangedSet;
    bool track_witness = false;
    PassObserver observer;
};

struct RunStats {
    std::size_t iterations = 0;
    std::size_t labels_created = 0;
    std::size_t labels_retained = 0;
};

struct DistanceReport {
    Anchor anchor;
    std::vector<double> distance;  // +inf when no path exists
    std::vector<std::optional<Path>> witness;  // empty unless requested
    std::vector<LabelSet> fronts;  // final label set per vertex; empty for the greedy baseline
    RunStats stats;
};

/// Outer-loop state of the label-correcting search, always expressed on the
/// propagation graph (paths run from each vertex toward the anchor).
struct AlgorithmState {
    std::vector<LabelSet> label_sets;
    std::vector<std::vector<std::uint32_t>> origins;  // witness node per label, when tracking
    std::vector<VertexId> frontier;
    std::vector<bool> changed;  // touched in the last pass
    std::size_t step = 0;
};

/// Stepwise driver of the label-correcting search toward `target` of `g`.
/// Holds a reference to `g` and `w`; both must outlive it.
class LabelCorrectingSearch {
public:
    LabelCorrectingSearch(const WeightedDigraph& g, const WeightSequence& w, VertexId target, FrontKind kind,
                          RunOptions options = {});

    bool done() const;
    /// One outer iteration: extend the labels of every frontier vertex along
    /// its incoming edges, filter each touched label set, refresh the frontier.
    void run_pass();
    void run();

    const AlgorithmState& state() const noexcept { return state_; }
    const RunStats& stats() const noexcept { return stats_; }

    /// Distances, witnesses (if tracked) and final fronts on the propagation graph.
    DistanceReport report() const;

private:
    const WeightedDigraph& graph_;
    const WeightSequence& weights_;
    VertexId target_;
    FrontKind kind_;
    RunOptions options_;
    AlgorithmState state_;
    RunStats stats_;
    struct WitnessNode {
        VertexId vertex;
        std::uint32_t parent;
    };
    std::vector<WitnessNode> witness_nodes_;
};

/// Next frontier from a state whose last pass has completed.
std::vector<VertexId> refresh_frontier(const AlgorithmState& state, FrontierRule rule);

/// min over the set of W_l * s; (0, 0) counts as 0; +inf for the empty set.
double extract_distance(std::span<const Label> labels, const WeightSequence& w);

/// Throws InvalidWeightSequence unless `w` is usable for every simple path of `g`.
void require_valid_weights(const WeightedDigraph& g, const WeightSequence& w);

/// Exact path-length-weighted distances with (s, l) Pareto pruning.
DistanceReport compute_distances(const WeightedDigraph& g, const WeightSequence& w, Anchor anchor,
                                 const RunOptions& options = {});

inline DistanceReport compute_distances_to_target(const WeightedDigraph& g, const WeightSequence& w, VertexId target,
                                                  const RunOptions& options = {}) {
    return compute_distances(g, w, {target, Direction::ToTarget}, options);
}

inline DistanceReport compute_distances_from_source(const WeightedDigraph& g, const WeightSequence& w,
                                                    VertexId source, const RunOptions& options = {}) {
    return compute_distances(g, w, {source, Direction::FromSource}, options);
}

/// Shared driver for all label-correcting engines; `kind` picks the pruning order
/// with no precondition checks. Prefer `compute_distances` or
/// `compute_distances_specialized`.
DistanceReport run_label_correcting(const WeightedDigraph& g, const WeightSequence& w, Anchor anchor, FrontKind kind,
                                    const RunOptions& options);

/// Single-label relaxation that keeps only the best (d, l) per vertex and
/// chains them with combine_distances. Not exact in general; kept as the
/// baseline that shows why labels must carry path length.
DistanceReport greedy_bellman_ford_plwd(const WeightedDigraph& g, const WeightSequence& w, Anchor anchor);

}  // namespace plwd
