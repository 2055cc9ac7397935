#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "plwd/algorithm.hpp"
#include "plwd/bench.hpp"
#include "plwd/document.hpp"
#include "plwd/error.hpp"
#include "plwd/format.hpp"
#include "plwd/generators.hpp"
#include "plwd/oracle.hpp"
#include "plwd/report_io.hpp"
#include "plwd/special_pruning.hpp"

namespace {

using namespace plwd;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidParams, "cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::InvalidParams, "cannot write " + path);
    }
    out << text;
}

struct AnchorArgs {
    long long target = -1;
    long long source = -1;

    void add_to(CLI::App* cmd, bool required) {
        auto* t = cmd->add_option("--target", target, "Distances from every vertex to this one");
        auto* s = cmd->add_option("--source", source, "Distances from this vertex to every other");
        t->excludes(s);
        s->excludes(t);
        if (required) {
            cmd->callback([t, s] {
                if (t->count() + s->count() == 0) {
                    throw CLI::RequiredError("--target or --source");
                }
            });
        }
    }

    bool given() const { return target >= 0 || source >= 0; }

    Anchor anchor() const {
        if (source >= 0) {
            return {static_cast<VertexId>(source), Direction::FromSource};
        }
        return {static_cast<VertexId>(target), Direction::ToTarget};
    }
};

struct EngineArgs {
    std::string weights;
    std::string engine = "generic";
    std::string frontier = "changed";

    void add_to(CLI::App* cmd) {
        cmd->add_option("--weights", weights, "const:<c> | invpow:<k> | list:w1,w2,... (default invpow:1)");
        cmd->add_option("--engine", engine, "Engine")
            ->check(CLI::IsMember({"generic", "order1", "order2", "greedy"}))
            ->capture_default_str();
        cmd->add_option("--frontier", frontier, "Frontier rule")
            ->check(CLI::IsMember({"changed", "printed"}))
            ->capture_default_str();
    }

    WeightSequence weight_sequence(const GraphDocument& doc) const {
        if (!weights.empty()) {
            return WeightSequence::parse(weights);
        }
        return WeightSequence::parse(doc.weights_hint.value_or("invpow:1"));
    }

    Engine engine_kind() const { return *parse_engine(engine); }

    RunOptions options(bool witness) const {
        RunOptions o;
        o.frontier = frontier == "printed" ? FrontierRule::ReachedOutsideFrontier : FrontierRule::ChangedSet;
        o.track_witness = witness;
        return o;
    }
};

int cmd_validate(const std::string& input) {
    const auto doc = parse_document(read_input(input));
    const auto g = to_graph(doc);
    const auto mono = check_edge_monotonicity(g);
    std::printf("ok: %zu vertices, %zu edges\n", g.vertex_count(), g.edge_count());
    std::printf("edge-monotone: nondecreasing=%s nonincreasing=%s\n", mono.nondecreasing_ok ? "yes" : "no",
                mono.nonincreasing_ok ? "yes" : "no");
    if (const auto v = mono.first_violation()) {
        std::printf("first violation: (%u,%u,%s) then (%u,%u,%s)\n", v->first.from, v->first.to,
                    format_shortest(v->first.weight).c_str(), v->second.from, v->second.to,
                    format_shortest(v->second.weight).c_str());
    }
    return kExitOk;
}

int cmd_compute(const std::string& input, const AnchorArgs& anchor, const EngineArgs& engine, bool json,
                bool witness) {
    const auto doc = parse_document(read_input(input));
    const auto g = to_graph(doc);
    const auto w = engine.weight_sequence(doc);
    const auto report = run_engine(engine.engine_kind(), g, w, anchor.anchor(), engine.options(witness));
    std::cout << (json ? report_to_json(report, engine.engine, w) : report_to_text(report));
    return kExitOk;
}

int cmd_check(const std::string& input, const EngineArgs& engine, double tolerance) {
    const auto doc = parse_document(read_input(input));
    const auto g = to_graph(doc);
    const auto w = engine.weight_sequence(doc);
    std::size_t compared = 0;
    std::size_t mismatches = 0;
    for (VertexId t = 0; t < g.vertex_count(); ++t) {
        const auto report = run_engine(engine.engine_kind(), g, w, {t, Direction::ToTarget}, engine.options(false));
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const double want = oracle::brute_force_distance(g, w, v, t);
            const double got = report.distance[v];
            ++compared;
            const bool same = (std::isinf(want) || std::isinf(got))
                                  ? want == got
                                  : std::abs(want - got) <= tolerance * std::max(std::abs(want), std::abs(got));
            if (!same) {
                ++mismatches;
                std::printf("mismatch d(v%u,v%u): %s, oracle %s\n", v, t, format_shortest(got).c_str(),
                            format_shortest(want).c_str());
            }
        }
    }
    std::printf("%zu distances compared, %zu mismatches\n", compared, mismatches);
    return mismatches ? kExitMismatch : kExitOk;
}

struct GenerateArgs {
    std::string family;
    std::size_t n = 10;
    std::uint64_t seed = 1;
    double p = 0.4;
    double chord_prob = 0.3;
    double min = 1;
    double max = 10;
    std::string monotone = "nondecreasing";
    std::string format = "text";
    std::string output;
};

int cmd_generate(const GenerateArgs& a) {
    const WeightRange range{a.min, a.max};
    GraphDocument doc;
    if (a.family == "tree") {
        doc = gen_tree(a.n, a.seed, range);
    } else if (a.family == "star") {
        doc = gen_star(a.n, a.seed, range, a.chord_prob);
    } else if (a.family == "random") {
        doc = gen_random_dag(a.n, a.p, a.seed, range);
    } else {
        const auto m = a.monotone == "nonincreasing" ? Monotone::NonIncreasing : Monotone::NonDecreasing;
        doc = gen_monotone_dag(a.n, a.seed, m, a.p, range);
    }
    write_output(a.output, a.format == "json" ? serialize_json_document(doc) : serialize_edge_list(doc));
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> inputs;
    std::vector<std::string> engines{"generic", "order1"};
    std::string weights = "invpow:1";
    std::string direction = "source";
    std::string suite;
    std::size_t count = 20;
    std::size_t n = 10;
    std::uint64_t seed = 1;
    bool no_timing = false;
};

int cmd_bench(const BenchArgs& a) {
    BenchConfig config;
    config.weights = WeightSequence::parse(a.weights);
    config.direction = a.direction == "target" ? Direction::ToTarget : Direction::FromSource;
    config.engines.clear();
    for (const auto& e : a.engines) {
        config.engines.push_back(*parse_engine(e));
    }
    for (const auto& path : a.inputs) {
        config.cases.push_back({path, parse_document(read_input(path))});
    }
    for (std::size_t i = 0; !a.suite.empty() && i < a.count; ++i) {
        const auto seed = a.seed + i;
        GraphDocument doc;
        if (a.suite == "monotone") {
            doc = gen_monotone_dag(a.n, seed, Monotone::NonDecreasing);
        } else if (a.suite == "monotone-nonincreasing") {
            doc = gen_monotone_dag(a.n, seed, Monotone::NonIncreasing);
        } else if (a.suite == "tree") {
            doc = gen_tree(a.n, seed);
        } else if (a.suite == "star") {
            doc = gen_star(a.n, seed);
        } else {
            doc = gen_random_dag(a.n, 0.4, seed);
        }
        config.cases.push_back({doc.name.value_or("g"), std::move(doc)});
    }
    std::cout << bench_csv(run_bench(config), !a.no_timing);
    return kExitOk;
}

int cmd_export_dot(const std::string& input, const AnchorArgs& anchor, const EngineArgs& engine,
                   bool edge_distances) {
    const auto doc = parse_document(read_input(input));
    const auto g = to_graph(doc);
    const auto w = engine.weight_sequence(doc);
    std::vector<double> edge_values;
    if (edge_distances) {
        for (const Edge& e : doc.edges) {
            const auto r = run_engine(engine.engine_kind(), g, w, {e.from, Direction::FromSource});
            edge_values.push_back(r.distance[e.to]);
        }
    }
    if (anchor.given()) {
        const auto report = run_engine(engine.engine_kind(), g, w, anchor.anchor(), engine.options(false));
        std::cout << export_dot(doc, &report, edge_values);
    } else {
        std::cout << export_dot(doc, nullptr, edge_values);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path-length-weighted distances on weighted DAGs"};
    app.require_subcommand(1);
    int status = kExitOk;

    std::string input;

    auto* validate = app.add_subcommand("validate", "Parse and validate a graph file");
    validate->add_option("input", input, "Graph file, '-' for stdin")->required();

    AnchorArgs compute_anchor;
    EngineArgs compute_engine;
    bool json = false;
    bool witness = false;
    auto* compute = app.add_subcommand("compute", "Distances to a target or from a source");
    compute->add_option("input", input, "Graph file, '-' for stdin")->required();
    compute_anchor.add_to(compute, true);
    compute_engine.add_to(compute);
    compute->add_flag("--json", json, "JSON report with full precision");
    compute->add_flag("--witness", witness, "Include a path realising each distance");

    EngineArgs check_engine;
    double tolerance = 1e-9;
    auto* check = app.add_subcommand("check", "Compare an engine with exhaustive path enumeration");
    check->add_option("input", input, "Graph file, '-' for stdin")->required();
    check_engine.add_to(check);
    check->add_option("--tolerance", tolerance, "Relative tolerance")->capture_default_str();

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a graph");
    generate->add_option("family", gen.family, "tree | star | random | monotone")
        ->required()
        ->check(CLI::IsMember({"tree", "star", "random", "monotone"}));
    generate->add_option("--n", gen.n, "Vertex count")->capture_default_str();
    generate->add_option("--seed", gen.seed, "Seed")->capture_default_str();
    generate->add_option("--p", gen.p, "Edge probability (random, monotone)")->capture_default_str();
    generate->add_option("--chord-prob", gen.chord_prob, "Chord probability (star)")->capture_default_str();
    generate->add_option("--min", gen.min, "Smallest edge weight")->capture_default_str();
    generate->add_option("--max", gen.max, "Largest edge weight")->capture_default_str();
    generate->add_option("--monotone", gen.monotone, "Edge condition (monotone)")
        ->check(CLI::IsMember({"nondecreasing", "nonincreasing"}))
        ->capture_default_str();
    generate->add_option("--format", gen.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    generate->add_option("-o,--output", gen.output, "Output file (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Label counts and timings per engine, CSV");
    bench->add_option("inputs", bench_args.inputs, "Graph files");
    bench->add_option("--engines", bench_args.engines, "Engines")
        ->delimiter(',')
        ->check(CLI::IsMember({"generic", "order1", "order2", "greedy"}))
        ->capture_default_str();
    bench->add_option("--weights", bench_args.weights, "Weight sequence")->capture_default_str();
    bench->add_option("--direction", bench_args.direction, "Anchor direction")
        ->check(CLI::IsMember({"source", "target"}))
        ->capture_default_str();
    bench->add_option("--suite", bench_args.suite, "Generated suite")
        ->check(CLI::IsMember({"monotone", "monotone-nonincreasing", "tree", "star", "random"}));
    bench->add_option("--count", bench_args.count, "Graphs in the generated suite")->capture_default_str();
    bench->add_option("--n", bench_args.n, "Vertices per generated graph")->capture_default_str();
    bench->add_option("--seed", bench_args.seed, "First seed of the generated suite")->capture_default_str();
    bench->add_flag("--no-timing", bench_args.no_timing, "Write wall_ns as 0 for reproducible output");

    AnchorArgs dot_anchor;
    EngineArgs dot_engine;
    bool edge_distances = false;
    auto* dot = app.add_subcommand("export-dot", "Graphviz DOT, optionally annotated with distances");
    dot->add_option("input", input, "Graph file, '-' for stdin")->required();
    dot_anchor.add_to(dot, false);
    dot_engine.add_to(dot);
    dot->add_flag("--edge-distances", edge_distances, "Label edges with d(from, to) instead of their weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*validate) {
            status = cmd_validate(input);
        } else if (*compute) {
            status = cmd_compute(input, compute_anchor, compute_engine, json, witness);
        } else if (*check) {
            status = cmd_check(input, check_engine, tolerance);
        } else if (*generate) {
            status = cmd_generate(gen);
        } else if (*bench) {
            status = cmd_bench(bench_args);
        } else if (*dot) {
            status = cmd_export_dot(input, dot_anchor, dot_engine, edge_distances);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::EngineMismatch ? kExitMismatch : kExitInvalid;
    }
    return status;
}
