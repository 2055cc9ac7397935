#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace plwd {

class WeightSequence;

using VertexId = std::uint32_t;

struct Edge {
    VertexId from = 0;
    VertexId to = 0;
    double weight = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// One endpoint of an adjacency entry together with the weight of the edge.
struct Neighbor {
    VertexId vertex = 0;
    double weight = 0.0;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Finite directed acyclic graph with strictly positive edge weights.
///
/// Instances are only obtainable through `build`, which validates the input,
/// so every live graph is acyclic, free of self-loops and parallel edges, and
/// its adjacency indexes agree with the edge list. Immutable afterwards.
class WeightedDigraph {
public:
    static WeightedDigraph build(std::size_t n_vertices, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return incoming_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges in the order they were supplied.
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// (u, w(u,v)) for every edge u -> v, ascending u.
    std::span<const Neighbor> incoming(VertexId v) const;
    /// (u, w(v,u)) for every edge v -> u, ascending u.
    std::span<const Neighbor> outgoing(VertexId v) const;

    std::optional<double> weight(VertexId from, VertexId to) const;

    /// Sources first; ties broken by smallest vertex index.
    std::span<const VertexId> topological_order() const noexcept { return topo_; }

    /// Same vertex set with every edge flipped. Paths of the result are the
    /// reversals of paths of `*this`, with identical sums and lengths.
    WeightedDigraph reversed() const;

private:
    WeightedDigraph() = default;

    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> incoming_;
    std::vector<std::vector<Neighbor>> outgoing_;
    std::vector<VertexId> topo_;
};

inline WeightedDigraph build_graph(std::size_t n_vertices, std::span<const Edge> edges) {
    return WeightedDigraph::build(n_vertices, edges);
}

std::vector<VertexId> topological_order(const WeightedDigraph& g);

std::span<const Neighbor> incoming_neighbors(const WeightedDigraph& g, VertexId v);

/// Vertex sequence (x0, ..., xn). A single vertex is the empty path.
/// Edge membership is checked by the operations that take a graph.
class Path {
public:
    explicit Path(std::vector<VertexId> vertices);
    static Path at(VertexId v) { return Path({v}); }

    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    VertexId front() const noexcept { return vertices_.front(); }
    VertexId back() const noexcept { return vertices_.back(); }
    std::size_t length() const noexcept { return vertices_.size() - 1; }

    Path reversed() const;

    friend bool operator==(const Path&, const Path&) = default;

private:
    std::vector<VertexId> vertices_;
};

/// Sum of edge weights along `p`. Throws InvalidPath when a consecutive pair
/// is not an edge of `g`.
double path_sum(const WeightedDigraph& g, const Path& p);

inline std::size_t path_length(const Path& p) { return p.length(); }

/// W_{l(p)} * s(p); zero for the empty path.
double path_distance(const WeightedDigraph& g, const Path& p, const WeightSequence& w);

/// p followed by q, sharing p.back() == q.front(). Throws EndpointMismatch.
Path concat(const Path& p, const Path& q);

}  // namespace plwd
