#include "plwd/algorithm.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "plwd/detail/front_sweep.hpp"
#include "plwd/error.hpp"

namespace plwd {

namespace {

constexpr std::uint32_t kNoNode = std::numeric_limits<std::uint32_t>::max();
constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct TrackedLabel {
    Label label;
    std::uint32_t origin;
};

void check_anchor(const WeightedDigraph& g, VertexId v) {
    if (v >= g.vertex_count()) {
        throw Error(ErrorCode::TargetOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " + std::to_string(g.vertex_count()) + ")");
    }
}

std::size_t best_index(std::span<const Label> labels, const WeightSequence& w) {
    std::size_t best = 0;
    double best_distance = kInfinity;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double d = label_distance(labels[i], w);
        if (d < best_distance) {
            best_distance = d;
            best = i;
        }
    }
    return best;
}

DistanceReport flip_to_source(DistanceReport report) {
    report.anchor.direction = Direction::FromSource;
    for (auto& path : report.witness) {
        if (path) {
            path = path->reversed();
        }
    }
    return report;
}

}  // namespace

LabelCorrectingSearch::LabelCorrectingSearch(const WeightedDigraph& g, const WeightSequence& w, VertexId target,
                                             FrontKind kind, RunOptions options)
    : graph_(g), weights_(w), target_(target), kind_(kind), options_(std::move(options)) {
    check_anchor(g, target);
    const std::size_t n = g.vertex_count();
    state_.label_sets.assign(n, {});
    state_.changed.assign(n, false);
    state_.label_sets[target] = {Label{0.0, 0}};
    if (options_.track_witness) {
        state_.origins.assign(n, {});
        witness_nodes_.push_back({target, kNoNode});
        state_.origins[target] = {0};
    }
    state_.frontier = {target};
}

bool LabelCorrectingSearch::done() const {
    return state_.frontier.empty() || state_.step >= graph_.vertex_count();
}

void LabelCorrectingSearch::run_pass() {
    ++state_.step;
    ++stats_.iterations;
    std::fill(state_.changed.begin(), state_.changed.end(), false);

    const bool tracking = options_.track_witness;
    const auto length_pref =
        kind_ == FrontKind::DistanceShorter ? detail::LengthPreference::Shorter : detail::LengthPreference::Longer;
    const auto length_of = [](const TrackedLabel& t) { return t.label.length; };
    const auto score_of = [this](const TrackedLabel& t) {
        return kind_ == FrontKind::Sum ? t.label.sum : label_distance(t.label, weights_);
    };

    std::vector<TrackedLabel> items;
    for (const VertexId from : state_.frontier) {
        for (const Neighbor& in : graph_.incoming(from)) {
            const VertexId to = in.vertex;
            if (to == target_) {
                continue;
            }
            LabelSet& labels = state_.label_sets[to];
            const LabelSet before = labels;

            items.clear();
            for (std::size_t i = 0; i < labels.size(); ++i) {
                items.push_back({labels[i], tracking ? state_.origins[to][i] : kNoNode});
            }
            const LabelSet& source_labels = state_.label_sets[from];
            for (std::size_t i = 0; i < source_labels.size(); ++i) {
                const Label candidate = extend(in.weight, source_labels[i]);
                const bool present = std::any_of(items.begin(), items.end(),
                                                 [&](const TrackedLabel& t) { return t.label == candidate; });
                if (present) {
                    continue;
                }
                std::uint32_t node = kNoNode;
                if (tracking) {
                    node = static_cast<std::uint32_t>(witness_nodes_.size());
                    witness_nodes_.push_back({to, state_.origins[from][i]});
                }
                items.push_back({candidate, node});
                ++stats_.labels_created;
            }

            detail::keep_minimal(items, length_pref, length_of, score_of);

            labels.clear();
            for (const auto& t : items) {
                labels.push_back(t.label);
            }
            if (tracking) {
                auto& origins = state_.origins[to];
                origins.clear();
                for (const auto& t : items) {
                    origins.push_back(t.origin);
                }
            }
            if (options_.observer) {
                options_.observer(PassEvent{state_.step, to, labels});
            }
            if (labels != before) {
                state_.changed[to] = true;
            }
        }
    }
    state_.frontier = refresh_frontier(state_, options_.frontier);
}

void LabelCorrectingSearch::run() {
    while (!done()) {
        run_pass();
    }
}

DistanceReport LabelCorrectingSearch::report() const {
    const std::size_t n = graph_.vertex_count();
    DistanceReport out;
    out.anchor = {target_, Direction::ToTarget};
    out.distance.resize(n);
    out.fronts = state_.label_sets;
    out.stats = stats_;
    out.stats.labels_retained = 0;
    for (const auto& labels : state_.label_sets) {
        out.stats.labels_retained += labels.size();
    }
    for (VertexId v = 0; v < n; ++v) {
        out.distance[v] = extract_distance(state_.label_sets[v], weights_);
    }
    if (options_.track_witness) {
        out.witness.resize(n);
        for (VertexId v = 0; v < n; ++v) {
            const auto& labels = state_.label_sets[v];
            if (labels.empty()) {
                continue;
            }
            std::vector<VertexId> vertices;
            for (std::uint32_t node = state_.origins[v][best_index(labels, weights_)]; node != kNoNode;
                 node = witness_nodes_[node].parent) {
                vertices.push_back(witness_nodes_[node].vertex);
            }
            out.witness[v] = Path(std::move(vertices));
        }
    }
    return out;
}

std::vector<VertexId> refresh_frontier(const AlgorithmState& state, FrontierRule rule) {
    std::vector<VertexId> next;
    const std::size_t n = state.label_sets.size();
    switch (rule) {
        case FrontierRule::ChangedSet:
            for (VertexId v = 0; v < n; ++v) {
                if (state.changed[v]) {
                    next.push_back(v);
                }
            }
            break;
        case FrontierRule::ReachedOutsideFrontier:
            for (VertexId v = 0; v < n; ++v) {
                const bool in_frontier =
                    std::find(state.frontier.begin(), state.frontier.end(), v) != state.frontier.end();
                if (!in_frontier && !state.label_sets[v].empty()) {
                    next.push_back(v);
                }
            }
            break;
    }
    return next;
}

double extract_distance(std::span<const Label> labels, const WeightSequence& w) {
    double best = kInfinity;
    for (const Label& label : labels) {
        best = std::min(best, label_distance(label, w));
    }
    return best;
}

void require_valid_weights(const WeightedDigraph& g, const WeightSequence& w) {
    const std::size_t horizon = std::max<std::size_t>(1, g.vertex_count() - 1);
    if (const auto violation = validate(w, horizon)) {
        throw Error(ErrorCode::InvalidWeightSequence, violation->reason);
    }
}

DistanceReport run_label_correcting(const WeightedDigraph& g, const WeightSequence& w, Anchor anchor, FrontKind kind,
                                    const RunOptions& options) {
    check_anchor(g, anchor.vertex);
    require_valid_weights(g, w);
    if (anchor.direction == Direction::FromSource) {
        const WeightedDigraph reversed = g.reversed();
        LabelCorrectingSearch search(reversed, w, anchor.vertex, kind, options);
        search.run();
        return flip_to_source(search.report());
    }
    LabelCorrectingSearch search(g, w, anchor.vertex, kind, options);
    search.run();
    return search.report();
}

DistanceReport compute_distances(const WeightedDigraph& g, const WeightSequence& w, Anchor anchor,
                                 const RunOptions& options) {
    return run_label_correcting(g, w, anchor, FrontKind::Sum, options);
}

DistanceReport greedy_bellman_ford_plwd(const WeightedDigraph& g, const WeightSequence& w, Anchor anchor) {
    check_anchor(g, anchor.vertex);
    require_valid_weights(g, w);
    if (anchor.direction == Direction::FromSource) {
        return flip_to_source(greedy_bellman_ford_plwd(g.reversed(), w, {anchor.vertex, Direction::ToTarget}));
    }
    const std::size_t n = g.vertex_count();
    std::vector<std::optional<DistanceLength>> best(n);
    best[anchor.vertex] = DistanceLength{0.0, 0};
    RunStats stats;

    // Successors are final before their predecessors in reverse topological order.
    const auto order = g.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId v = *it;
        if (v == anchor.vertex) {
            continue;
        }
        for (const Neighbor& out : g.outgoing(v)) {
            const auto& next = best[out.vertex];
            if (!next) {
                continue;
            }
            const DistanceLength edge{w.at(1) * out.weight, 1};
            const DistanceLength candidate = next->length == 0 ? edge : combine_distances(edge, *next, w);
            ++stats.labels_created;
            if (!best[v] || candidate.distance < best[v]->distance) {
                best[v] = candidate;
            }
        }
    }

    DistanceReport out;
    out.anchor = anchor;
    out.distance.resize(n, kInfinity);
    for (VertexId v = 0; v < n; ++v) {
        if (best[v]) {
            out.distance[v] = best[v]->distance;
            ++stats.labels_retained;
        }
    }
    stats.iterations = 1;
    out.stats = stats;
    return out;
}

}  // namespace plwd
