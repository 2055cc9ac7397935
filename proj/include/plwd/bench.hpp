#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plwd/algorithm.hpp"
#include "plwd/document.hpp"
#include "plwd/weights.hpp"

namespace plwd {

enum class Engine { Generic, Order1, Order2, Greedy };

std::string_view to_string(Engine engine);
std::optional<Engine> parse_engine(std::string_view text);

/// Runs `engine` with the given anchor. Dispatches to the generic, specialized
/// or greedy implementation.
DistanceReport run_engine(Engine engine, const WeightedDigraph& g, const WeightSequence& w, Anchor anchor,
                          const RunOptions& options = {});

struct BenchCase {
    std::string id;
    GraphDocument doc;
};

struct BenchConfig {
    std::vector<BenchCase> cases;
    std::vector<Engine> engines{Engine::Generic, Engine::Order1};
    WeightSequence weights = WeightSequence::inverse_power(1.0);
    Direction direction = Direction::FromSource;
};

/// Totals over one run per anchor vertex.
struct BenchRecord {
    std::string graph_id;
    Engine engine = Engine::Generic;
    std::size_t labels_created = 0;
    std::size_t labels_retained = 0;
    std::int64_t wall_ns = 0;
    std::string digest;
    std::optional<std::string> error;  // e.g. ConditionNotVerified; counters are zero then
};

/// Every engine on every case, all anchors. Distances of the pruned engines are
/// compared with the generic engine before any record is returned; a
/// disagreement throws EngineMismatch.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader = "graph_id,engine,labels_created,labels_retained,wall_ns,digest";

/// CSV with the fixed header. With `timing == false` wall_ns is written as 0,
/// which makes the output reproducible byte for byte.
std::string bench_csv(std::span<const BenchRecord> records, bool timing = true);

/// FNV-1a over the distances printed with 12 significant digits.
std::string distance_digest(std::span<const double> distances);

}  // namespace plwd
