#include "plwd/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "plwd/error.hpp"
#include "plwd/special_pruning.hpp"

namespace plwd {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::size_t below(std::size_t bound) {
        return std::min(bound - 1, static_cast<std::size_t>(unit() * static_cast<double>(bound)));
    }

    bool chance(double p) { return unit() < p; }

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo + 1)));
    }

    std::vector<VertexId> permutation(std::size_t n) {
        std::vector<VertexId> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = static_cast<VertexId>(i);
        }
        for (std::size_t i = n; i > 1; --i) {
            std::swap(p[i - 1], p[below(i)]);
        }
        return p;
    }

private:
    std::mt19937_64 engine_;
};

std::pair<std::int64_t, std::int64_t> cents(WeightRange range) {
    if (!(range.min > 0.0) || !(range.max >= range.min) || !std::isfinite(range.max)) {
        throw Error(ErrorCode::InvalidParams, "weight range must satisfy 0 < min <= max");
    }
    const auto lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(range.min * 100.0)));
    const auto hi = std::max(lo, static_cast<std::int64_t>(std::floor(range.max * 100.0)));
    return {lo, hi};
}

double weight_from_cents(std::int64_t c) {
    return static_cast<double>(c) / 100.0;
}

void check_common(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidParams, "need at least one vertex");
    }
}

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidParams, std::string(what) + " must lie in [0, 1]");
    }
}

}  // namespace

GraphDocument gen_tree(std::size_t n, std::uint64_t seed, WeightRange range) {
    check_common(n);
    const auto [lo, hi] = cents(range);
    Draw draw(seed);
    GraphDocument doc;
    doc.n_vertices = n;
    doc.name = "tree-" + std::to_string(n) + "-" + std::to_string(seed);
    for (std::size_t v = 1; v < n; ++v) {
        const auto parent = static_cast<VertexId>(draw.below(v));
        doc.edges.push_back({static_cast<VertexId>(v), parent, weight_from_cents(draw.between(lo, hi))});
    }
    return doc;
}

GraphDocument gen_star(std::size_t n, std::uint64_t seed, WeightRange range, double chord_prob) {
    check_common(n);
    check_probability(chord_prob, "chord probability");
    const auto [lo, hi] = cents(range);
    Draw draw(seed);
    GraphDocument doc;
    doc.n_vertices = n;
    doc.name = "star-" + std::to_string(n) + "-" + std::to_string(seed);
    for (std::size_t v = 1; v < n; ++v) {
        doc.edges.push_back({static_cast<VertexId>(v), 0, weight_from_cents(draw.between(lo, hi))});
    }
    for (std::size_t i = 2; i < n; ++i) {
        for (std::size_t j = 1; j < i; ++j) {
            if (draw.chance(chord_prob)) {
                doc.edges.push_back(
                    {static_cast<VertexId>(i), static_cast<VertexId>(j), weight_from_cents(draw.between(lo, hi))});
            }
        }
    }
    return doc;
}

GraphDocument gen_random_dag(std::size_t n, double edge_prob, std::uint64_t seed, WeightRange range) {
    check_common(n);
    check_probability(edge_prob, "edge probability");
    const auto [lo, hi] = cents(range);
    Draw draw(seed);
    const auto order = draw.permutation(n);
    GraphDocument doc;
    doc.n_vertices = n;
    doc.name = "dag-" + std::to_string(n) + "-" + std::to_string(seed);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (draw.chance(edge_prob)) {
                doc.edges.push_back({order[i], order[j], weight_from_cents(draw.between(lo, hi))});
            }
        }
    }
    return doc;
}

GraphDocument gen_monotone_dag(std::size_t n, std::uint64_t seed, Monotone monotone, double edge_prob,
                               WeightRange range) {
    check_common(n);
    check_probability(edge_prob, "edge probability");
    const auto [lo, hi] = cents(range);
    for (std::uint64_t attempt = 0;; ++attempt) {
        Draw draw(seed + attempt);
        const auto order = draw.permutation(n);
        // Every edge weight lies between the potentials of its endpoints, and
        // potentials grow along the order, so consecutive edges never decrease.
        std::vector<std::int64_t> potential(n);
        for (auto& p : potential) {
            p = draw.between(lo, hi);
        }
        std::sort(potential.begin(), potential.end());

        GraphDocument doc;
        doc.n_vertices = n;
        doc.name = "monotone-" + std::to_string(n) + "-" + std::to_string(seed);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (draw.chance(edge_prob)) {
                    const double w = weight_from_cents(draw.between(potential[i], potential[j]));
                    if (monotone == Monotone::NonDecreasing) {
                        doc.edges.push_back({order[i], order[j], w});
                    } else {
                        doc.edges.push_back({order[j], order[i], w});
                    }
                }
            }
        }
        const auto report = check_edge_monotonicity(to_graph(doc));
        const bool ok = monotone == Monotone::NonDecreasing ? report.nondecreasing_ok : report.nonincreasing_ok;
        if (ok) {
            return doc;
        }
    }
}

}  // namespace plwd
