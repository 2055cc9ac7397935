#include "plwd/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "plwd/error.hpp"
#include "plwd/special_pruning.hpp"

namespace plwd {

namespace {

bool same_distance(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) {
        return a == b;
    }
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::string_view to_string(Engine engine) {
    switch (engine) {
        case Engine::Generic: return "generic";
        case Engine::Order1: return "order1";
        case Engine::Order2: return "order2";
        case Engine::Greedy: return "greedy";
    }
    return "?";
}

std::optional<Engine> parse_engine(std::string_view text) {
    for (const Engine e : {Engine::Generic, Engine::Order1, Engine::Order2, Engine::Greedy}) {
        if (to_string(e) == text) {
            return e;
        }
    }
    return std::nullopt;
}

DistanceReport run_engine(Engine engine, const WeightedDigraph& g, const WeightSequence& w, Anchor anchor,
                          const RunOptions& options) {
    switch (engine) {
        case Engine::Generic:
            return compute_distances(g, w, anchor, options);
        case Engine::Order1:
            return compute_distances_specialized(g, w, anchor, PruningOrder::PreferLonger, options);
        case Engine::Order2:
            return compute_distances_specialized(g, w, anchor, PruningOrder::PreferShorter, options);
        case Engine::Greedy:
            return greedy_bellman_ford_plwd(g, w, anchor);
    }
    throw Error(ErrorCode::InvalidParams, "unknown engine");
}

std::string distance_digest(std::span<const double> distances) {
    std::uint64_t hash = 1469598103934665603ULL;
    char buf[64];
    for (const double d : distances) {
        const int n = std::snprintf(buf, sizeof buf, "%.12g;", d);
        for (int i = 0; i < n; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ULL;
        }
    }
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    std::vector<BenchRecord> records;
    for (const BenchCase& bench_case : config.cases) {
        const WeightedDigraph g = to_graph(bench_case.doc);
        const std::size_t n = g.vertex_count();

        std::vector<double> reference;
        for (VertexId a = 0; a < n; ++a) {
            const auto r = compute_distances(g, config.weights, {a, config.direction});
            reference.insert(reference.end(), r.distance.begin(), r.distance.end());
        }

        for (const Engine engine : config.engines) {
            BenchRecord record;
            record.graph_id = bench_case.id;
            record.engine = engine;
            std::vector<double> all;
            try {
                const auto start = std::chrono::steady_clock::now();
                for (VertexId a = 0; a < n; ++a) {
                    const auto r = run_engine(engine, g, config.weights, {a, config.direction});
                    record.labels_created += r.stats.labels_created;
                    record.labels_retained += r.stats.labels_retained;
                    all.insert(all.end(), r.distance.begin(), r.distance.end());
                }
                record.wall_ns =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
                        .count();
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ConditionNotVerified && e.code() != ErrorCode::WeightFormUnsupported) {
                    throw;
                }
                record = BenchRecord{bench_case.id, engine, 0, 0, 0, "", std::string(to_string(e.code()))};
                records.push_back(std::move(record));
                continue;
            }
            if (engine == Engine::Order1 || engine == Engine::Order2) {
                for (std::size_t i = 0; i < all.size(); ++i) {
                    if (!same_distance(all[i], reference[i])) {
                        throw Error(ErrorCode::EngineMismatch,
                                    std::string(to_string(engine)) + " disagrees with generic on graph " +
                                        bench_case.id + " (anchor " + std::to_string(i / n) + ", vertex " +
                                        std::to_string(i % n) + ")");
                    }
                }
            }
            record.digest = distance_digest(all);
            records.push_back(std::move(record));
        }
    }
    return records;
}

std::string bench_csv(std::span<const BenchRecord> records, bool timing) {
    std::string out(kBenchCsvHeader);
    out += "\n";
    for (const BenchRecord& r : records) {
        out += r.graph_id + "," + std::string(to_string(r.engine)) + ",";
        if (r.error) {
            out += ",,," + *r.error + "\n";
            continue;
        }
        out += std::to_string(r.labels_created) + "," + std::to_string(r.labels_retained) + "," +
               std::to_string(timing ? r.wall_ns : 0) + "," + r.digest + "\n";
    }
    return out;
}

}  // namespace plwd
