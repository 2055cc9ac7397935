#include "plwd/special_pruning.hpp"

#include "plwd/detail/front_sweep.hpp"
#include "plwd/error.hpp"
#include "plwd/format.hpp"

namespace plwd {

namespace {

void require_power_law(const WeightSequence& w) {
    if (!is_power_law(w)) {
        throw Error(ErrorCode::WeightFormUnsupported,
                    "distance-based pruning needs invpow:<k> with k >= 1, got " + w.to_string());
    }
}

std::string describe(const EdgePair& pair) {
    const auto edge = [](const Edge& e) {
        return "(" + std::to_string(e.from) + "->" + std::to_string(e.to) + ", " + format_shortest(e.weight) + ")";
    };
    return edge(pair.first) + " then " + edge(pair.second);
}

bool needs_nondecreasing(PruningOrder order, Direction direction) {
    const bool from_source = direction == Direction::FromSource;
    return (order == PruningOrder::PreferLonger) == from_source;
}

void require_grant(const MonotonicityReport& report, PruningOrder order, Direction direction) {
    if (report.grants(order, direction)) {
        return;
    }
    const auto pair = report.blocking_pair(order, direction);
    const std::string wanted = needs_nondecreasing(order, direction) ? "non-decreasing" : "non-increasing";
    throw Error(ErrorCode::ConditionNotVerified,
                std::string(to_string(order)) + " pruning " +
                    (direction == Direction::FromSource ? "from a source" : "toward a target") + " needs " + wanted +
                    " weights along consecutive edges; violated by " + (pair ? describe(*pair) : "?"));
}

}  // namespace

std::string_view to_string(PruningOrder order) {
    return order == PruningOrder::PreferLonger ? "order1" : "order2";
}

std::optional<EdgePair> MonotonicityReport::first_violation() const {
    return nondecreasing_violation ? nondecreasing_violation : nonincreasing_violation;
}

bool MonotonicityReport::grants(PruningOrder order, Direction direction) const {
    return needs_nondecreasing(order, direction) ? nondecreasing_ok : nonincreasing_ok;
}

std::optional<EdgePair> MonotonicityReport::blocking_pair(PruningOrder order, Direction direction) const {
    return needs_nondecreasing(order, direction) ? nondecreasing_violation : nonincreasing_violation;
}

MonotonicityReport check_edge_monotonicity(const WeightedDigraph& g) {
    MonotonicityReport report;
    for (VertexId b = 0; b < g.vertex_count(); ++b) {
        for (const Neighbor& in : g.incoming(b)) {
            for (const Neighbor& out : g.outgoing(b)) {
                const EdgePair pair{{in.vertex, b, in.weight}, {b, out.vertex, out.weight}};
                if (in.weight > out.weight && report.nondecreasing_ok) {
                    report.nondecreasing_ok = false;
                    report.nondecreasing_violation = pair;
                }
                if (in.weight < out.weight && report.nonincreasing_ok) {
                    report.nonincreasing_ok = false;
                    report.nonincreasing_violation = pair;
                }
            }
        }
    }
    return report;
}

bool dominates_order1(const Label& p, const Label& q, const WeightSequence& w) {
    require_power_law(w);
    return p.length >= q.length && label_distance(p, w) <= label_distance(q, w);
}

bool dominates_order2(const Label& p, const Label& q, const WeightSequence& w) {
    require_power_law(w);
    return p.length <= q.length && label_distance(p, w) <= label_distance(q, w);
}

LabelSet filtered_front(std::span<const Label> labels, PruningOrder order, const WeightSequence& w,
                        const MonotonicityReport& report, Direction direction) {
    require_power_law(w);
    require_grant(report, order, direction);
    LabelSet front(labels.begin(), labels.end());
    detail::keep_minimal(
        front,
        order == PruningOrder::PreferLonger ? detail::LengthPreference::Longer : detail::LengthPreference::Shorter,
        [](const Label& l) { return l.length; }, [&](const Label& l) { return label_distance(l, w); });
    return front;
}

DistanceReport compute_distances_specialized(const WeightedDigraph& g, const WeightSequence& w, Anchor anchor,
                                             PruningOrder order, const RunOptions& options) {
    require_power_law(w);
    require_grant(check_edge_monotonicity(g), order, anchor.direction);
    const FrontKind kind = order == PruningOrder::PreferLonger ? FrontKind::DistanceLonger : FrontKind::DistanceShorter;
    return run_label_correcting(g, w, anchor, kind, options);
}

}  // namespace plwd
