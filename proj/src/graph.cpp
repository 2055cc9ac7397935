#include "plwd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <string>

#include "plwd/error.hpp"
#include "plwd/weights.hpp"

namespace plwd {

namespace {

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.from) + " -> " + std::to_string(e.to) + ")";
}

void check_vertex(const WeightedDigraph& g, VertexId v) {
    if (v >= g.vertex_count()) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " + std::to_string(g.vertex_count()) + ")");
    }
}

}  // namespace

WeightedDigraph WeightedDigraph::build(std::size_t n_vertices, std::span<const Edge> edges) {
    if (n_vertices == 0) {
        throw Error(ErrorCode::InvalidParams, "graph must have at least one vertex");
    }
    WeightedDigraph g;
    g.incoming_.resize(n_vertices);
    g.outgoing_.resize(n_vertices);
    g.edges_.assign(edges.begin(), edges.end());

    for (const Edge& e : g.edges_) {
        if (e.from >= n_vertices || e.to >= n_vertices) {
            throw Error(ErrorCode::VertexOutOfRange, "edge " + edge_text(e) + " with " +
                                                         std::to_string(n_vertices) + " vertices");
        }
        if (e.from == e.to) {
            throw Error(ErrorCode::SelfLoop, "edge " + edge_text(e));
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw Error(ErrorCode::NonPositiveWeight, "edge " + edge_text(e) + " has weight " + std::to_string(e.weight));
        }
        g.incoming_[e.to].push_back({e.from, e.weight});
        g.outgoing_[e.from].push_back({e.to, e.weight});
    }

    const auto by_vertex = [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; };
    for (VertexId v = 0; v < n_vertices; ++v) {
        auto& in = g.incoming_[v];
        std::sort(in.begin(), in.end(), by_vertex);
        const auto dup = std::adjacent_find(in.begin(), in.end(),
                                            [](const Neighbor& a, const Neighbor& b) { return a.vertex == b.vertex; });
        if (dup != in.end()) {
            throw Error(ErrorCode::DuplicateEdge, "edge " + edge_text({dup->vertex, v, dup->weight}));
        }
        std::sort(g.outgoing_[v].begin(), g.outgoing_[v].end(), by_vertex);
    }

    // Kahn's algorithm with a min-heap for a deterministic order.
    std::vector<std::size_t> indegree(n_vertices);
    for (VertexId v = 0; v < n_vertices; ++v) {
        indegree[v] = g.incoming_[v].size();
    }
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n_vertices; ++v) {
        if (indegree[v] == 0) {
            ready.push(v);
        }
    }
    g.topo_.reserve(n_vertices);
    while (!ready.empty()) {
        const VertexId v = ready.top();
        ready.pop();
        g.topo_.push_back(v);
        for (const Neighbor& out : g.outgoing_[v]) {
            if (--indegree[out.vertex] == 0) {
                ready.push(out.vertex);
            }
        }
    }
    if (g.topo_.size() != n_vertices) {
        const auto stuck = std::find_if(indegree.begin(), indegree.end(), [](std::size_t d) { return d > 0; });
        throw Error(ErrorCode::CycleDetected,
                    "vertex " + std::to_string(stuck - indegree.begin()) + " lies on or behind a directed cycle");
    }
    return g;
}

std::span<const Neighbor> WeightedDigraph::incoming(VertexId v) const {
    check_vertex(*this, v);
    return incoming_[v];
}

std::span<const Neighbor> WeightedDigraph::outgoing(VertexId v) const {
    check_vertex(*this, v);
    return outgoing_[v];
}

std::optional<double> WeightedDigraph::weight(VertexId from, VertexId to) const {
    check_vertex(*this, from);
    check_vertex(*this, to);
    const auto& out = outgoing_[from];
    const auto it = std::lower_bound(out.begin(), out.end(), to,
                                     [](const Neighbor& n, VertexId v) { return n.vertex < v; });
    if (it == out.end() || it->vertex != to) {
        return std::nullopt;
    }
    return it->weight;
}

WeightedDigraph WeightedDigraph::reversed() const {
    std::vector<Edge> flipped;
    flipped.reserve(edges_.size());
    for (const Edge& e : edges_) {
        flipped.push_back({e.to, e.from, e.weight});
    }
    return build(vertex_count(), flipped);
}

std::vector<VertexId> topological_order(const WeightedDigraph& g) {
    const auto order = g.topological_order();
    return {order.begin(), order.end()};
}

std::span<const Neighbor> incoming_neighbors(const WeightedDigraph& g, VertexId v) {
    return g.incoming(v);
}

Path::Path(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw Error(ErrorCode::InvalidPath, "a path needs at least one vertex");
    }
}

Path Path::reversed() const {
    return Path({vertices_.rbegin(), vertices_.rend()});
}

double path_sum(const WeightedDigraph& g, const Path& p) {
    const auto vs = p.vertices();
    for (VertexId v : vs) {
        if (v >= g.vertex_count()) {
            throw Error(ErrorCode::InvalidPath, "vertex " + std::to_string(v) + " out of range");
        }
    }
    double sum = 0.0;
    for (std::size_t i = 1; i < vs.size(); ++i) {
        const auto w = g.weight(vs[i - 1], vs[i]);
        if (!w) {
            throw Error(ErrorCode::InvalidPath,
                        "no edge " + std::to_string(vs[i - 1]) + " -> " + std::to_string(vs[i]));
        }
        sum += *w;
    }
    return sum;
}

double path_distance(const WeightedDigraph& g, const Path& p, const WeightSequence& w) {
    const double sum = path_sum(g, p);
    if (p.length() == 0) {
        return 0.0;
    }
    return weight_at(w, p.length()) * sum;
}

Path concat(const Path& p, const Path& q) {
    if (p.back() != q.front()) {
        throw Error(ErrorCode::EndpointMismatch, "path ends at " + std::to_string(p.back()) +
                                                     " but next path starts at " + std::to_string(q.front()));
    }
    std::vector<VertexId> joined(p.vertices().begin(), p.vertices().end());
    joined.insert(joined.end(), q.vertices().begin() + 1, q.vertices().end());
    return Path(std::move(joined));
}

}  // namespace plwd
