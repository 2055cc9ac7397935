#include "plwd/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "plwd/error.hpp"

namespace plwd::oracle {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::vector<bool> can_reach(const WeightedDigraph& g, VertexId b) {
    std::vector<bool> reach(g.vertex_count(), false);
    std::vector<VertexId> stack{b};
    reach[b] = true;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const Neighbor& in : g.incoming(v)) {
            if (!reach[in.vertex]) {
                reach[in.vertex] = true;
                stack.push_back(in.vertex);
            }
        }
    }
    return reach;
}

struct Enumerator {
    const WeightedDigraph& g;
    VertexId target;
    std::size_t cap;
    std::vector<bool> reach;
    std::vector<VertexId> stack;
    PathInventory& out;

    void visit(VertexId v, double sum) {
        stack.push_back(v);
        if (v == target) {
            if (out.paths.size() >= cap) {
                throw Error(ErrorCode::ExplosionGuard, "more than " + std::to_string(cap) + " paths");
            }
            out.paths.push_back({Path(stack), sum, stack.size() - 1});
        } else {
            for (const Neighbor& next : g.outgoing(v)) {
                if (reach[next.vertex]) {
                    visit(next.vertex, sum + next.weight);
                }
            }
        }
        stack.pop_back();
    }
};

void check(const WeightedDigraph& g, VertexId v) {
    if (v >= g.vertex_count()) {
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    }
}

}  // namespace

double PathRecord::distance(const WeightSequence& w) const {
    return length == 0 ? 0.0 : w.at(length) * sum;
}

PathInventory enumerate_all_paths(const WeightedDigraph& g, VertexId a, VertexId b, std::size_t cap) {
    check(g, a);
    check(g, b);
    PathInventory inventory{a, b, {}};
    Enumerator walk{g, b, cap, can_reach(g, b), {}, inventory};
    if (walk.reach[a]) {
        walk.visit(a, 0.0);
    }
    return inventory;
}

double brute_force_distance(const PathInventory& inventory, const WeightSequence& w) {
    double best = kInfinity;
    for (const auto& record : inventory.paths) {
        best = std::min(best, record.distance(w));
    }
    return best;
}

double brute_force_distance(const WeightedDigraph& g, const WeightSequence& w, VertexId a, VertexId b,
                            std::size_t cap) {
    return brute_force_distance(enumerate_all_paths(g, a, b, cap), w);
}

LabelSet brute_force_front(const PathInventory& inventory) {
    LabelSet all;
    for (const auto& record : inventory.paths) {
        const Label label{record.sum, static_cast<std::uint32_t>(record.length)};
        if (std::find(all.begin(), all.end(), label) == all.end()) {
            all.push_back(label);
        }
    }
    LabelSet front;
    for (const Label& x : all) {
        bool dominated = false;
        for (const Label& y : all) {
            if (!(y == x) && y.sum <= x.sum && y.length >= x.length) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            front.push_back(x);
        }
    }
    std::sort(front.begin(), front.end(), [](const Label& x, const Label& y) {
        return x.length != y.length ? x.length > y.length : x.sum < y.sum;
    });
    return front;
}

LabelSet brute_force_front(const WeightedDigraph& g, VertexId a, VertexId b, std::size_t cap) {
    return brute_force_front(enumerate_all_paths(g, a, b, cap));
}

std::vector<double> classic_shortest_path(const WeightedDigraph& g, VertexId target) {
    check(g, target);
    std::vector<double> dist(g.vertex_count(), kInfinity);
    dist[target] = 0.0;
    const auto order = g.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId v = *it;
        if (v == target) {
            continue;
        }
        for (const Neighbor& out : g.outgoing(v)) {
            dist[v] = std::min(dist[v], out.weight + dist[out.vertex]);
        }
    }
    return dist;
}

}  // namespace plwd::oracle
