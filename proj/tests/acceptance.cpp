// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion.
// Usage: plwd_acceptance [C1 ... C9 TREE]   (no arguments runs everything)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "plwd/algorithm.hpp"
#include "plwd/bench.hpp"
#include "plwd/document.hpp"
#include "plwd/generators.hpp"
#include "plwd/oracle.hpp"
#include "plwd/pareto.hpp"
#include "plwd/special_pruning.hpp"
#include "support.hpp"

using namespace plwd;
using plwd::testing::Rng;

namespace {

constexpr double kOracleTol = 1e-9;
constexpr double kConstTol = 1e-12;
constexpr double kTriangleTol = 1e-9;
constexpr double kFastRunMs = 1.0;
constexpr double kSuiteBudgetS = 60.0;
constexpr int kSuiteGraphs = 500;
constexpr int kMonotoneGraphs = 200;
constexpr int kTriples = 10000;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

bool rel_close(double a, double b, double rel) {
    if (std::isinf(a) || std::isinf(b)) {
        return a == b;
    }
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class F>
double best_of_ms(int repeats, F&& fn) {
    double best = kInf;
    for (int i = 0; i < repeats; ++i) {
        const auto start = Clock::now();
        fn();
        best = std::min(best, elapsed_ms(start));
    }
    return best;
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::string labels_text(const LabelSet& labels) {
    std::string out = "{";
    for (const Label& l : labels) {
        out += (out.size() > 1 ? "," : "") + fmt("(%g,%u)", l.sum, l.length);
    }
    return out + "}";
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

// Antichain check for every PassEvent, under the dominance the engine prunes with.
struct AntichainWatch {
    std::size_t events = 0;
    std::size_t bad = 0;
    std::string first;

    PassObserver observer(Dominance dominance) {
        return [this, dominance](const PassEvent& e) {
            ++events;
            LabelSet mine(e.labels.begin(), e.labels.end());
            LabelSet reference = definitional_front(mine, dominance);
            const auto key = [](const Label& a, const Label& b) {
                return a.length != b.length ? a.length < b.length : a.sum < b.sum;
            };
            std::sort(mine.begin(), mine.end(), key);
            std::sort(reference.begin(), reference.end(), key);
            if (mine != reference) {
                if (bad++ == 0) {
                    first = fmt("pass %zu vertex %u labels ", e.iteration, e.vertex) + labels_text(mine);
                }
            }
        };
    }
};

AntichainWatch g_antichain;

RunOptions watched(Dominance dominance) {
    RunOptions options;
    options.observer = g_antichain.observer(std::move(dominance));
    return options;
}

Dominance generic_dominance() {
    return [](const Label& p, const Label& q) { return dominates(p, q); };
}

Dominance order_dominance(PruningOrder order, const WeightSequence& w) {
    if (order == PruningOrder::PreferLonger) {
        return [w](const Label& p, const Label& q) { return dominates_order1(p, q, w); };
    }
    return [w](const Label& p, const Label& q) { return dominates_order2(p, q, w); };
}

struct SuiteGraph {
    std::string id;
    WeightedDigraph graph;
    WeightSequence random_list;
};

std::vector<SuiteGraph> make_suite() {
    Rng rng(20240601);
    const std::vector<double> probs{0.2, 0.4, 0.7};
    std::vector<SuiteGraph> suite;
    for (int i = 0; i < kSuiteGraphs; ++i) {
        const auto n = rng.integer(2, 12);
        const double p = probs[i % probs.size()];
        auto doc = gen_random_dag(n, p, 7000 + i);
        suite.push_back({doc.name.value_or("g"), to_graph(doc), plwd::testing::random_nonincreasing_list(rng, n)});
    }
    return suite;
}

const std::vector<SuiteGraph>& suite() {
    static const auto s = make_suite();
    return s;
}

std::vector<WeightSequence> suite_weights(const SuiteGraph& g) {
    return {WeightSequence::inverse_power(1), WeightSequence::inverse_power(2), WeightSequence::constant(1.0),
            g.random_list};
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome out;
    const auto g = plwd::testing::example1_graph();
    const auto w = WeightSequence::inverse_power(1);
    const auto generic = run_engine(Engine::Generic, g, w, {0, Direction::ToTarget}, watched(generic_dominance()));
    const auto greedy = run_engine(Engine::Greedy, g, w, {0, Direction::ToTarget});
    if (generic.distance[5] != 7.25) {
        out.fail(fmt("d(v5,v0) = %.17g, want 7.25", generic.distance[5]));
    }
    if (generic.distance[4] != 2.0) {
        out.fail(fmt("d(v4,v0) = %.17g, want 2", generic.distance[4]));
    }
    if (greedy.distance[5] != 8.0) {
        out.fail(fmt("greedy d(v5,v0) = %.17g, want 8", greedy.distance[5]));
    }
    const double ms = best_of_ms(5, [&] { run_engine(Engine::Generic, g, w, {0, Direction::ToTarget}); });
    if (ms >= kFastRunMs) {
        out.fail(fmt("runtime %.3f ms", ms));
    }
    if (out.pass) {
        out.detail = fmt("d(v5)=7.25 d(v4)=2 greedy d(v5)=8, %.3f ms", ms);
    }
    return out;
}

Outcome criterion2() {
    Outcome out;
    const auto g = plwd::testing::monotone_example_graph();
    const auto w = WeightSequence::inverse_power(1);
    const Anchor anchor{0, Direction::FromSource};
    const auto generic = run_engine(Engine::Generic, g, w, anchor, watched(generic_dominance()));
    const auto order1 =
        run_engine(Engine::Order1, g, w, anchor, watched(order_dominance(PruningOrder::PreferLonger, w)));
    const LabelSet want_generic{{15, 3}, {13, 2}, {5, 1}};
    const LabelSet want_order1{{15, 3}};
    if (generic.fronts[5] != want_generic) {
        out.fail("generic front at v5 " + labels_text(generic.fronts[5]));
    }
    if (order1.fronts[5] != want_order1) {
        out.fail("order1 front at v5 " + labels_text(order1.fronts[5]));
    }

    // The same fronts from the full path inventory.
    LabelSet accumulated;
    for (const auto& r : oracle::enumerate_all_paths(g, 0, 5).paths) {
        accumulated.push_back({r.sum, static_cast<std::uint32_t>(r.length)});
    }
    const auto report = check_edge_monotonicity(g);
    if (pareto_filter(accumulated) != want_generic) {
        out.fail("inventory filtered under dominance " + labels_text(pareto_filter(accumulated)));
    }
    if (filtered_front(accumulated, PruningOrder::PreferLonger, w, report, Direction::FromSource) != want_order1) {
        out.fail("inventory filtered under order1");
    }
    const double ms = best_of_ms(5, [&] { run_engine(Engine::Order1, g, w, anchor); });
    if (ms >= kFastRunMs) {
        out.fail(fmt("runtime %.3f ms", ms));
    }
    if (out.pass) {
        out.detail = "v5: generic " + labels_text(generic.fronts[5]) + ", order1 " + labels_text(order1.fronts[5]) +
                     fmt(", %.3f ms", ms);
    }
    return out;
}

Outcome criterion3() {
    Outcome out;
    const auto start = Clock::now();
    std::size_t compared = 0;
    for (const auto& sg : suite()) {
        const auto n = sg.graph.vertex_count();
        const auto weights = suite_weights(sg);
        for (VertexId t = 0; t < n; ++t) {
            std::vector<oracle::PathInventory> inventories;
            for (VertexId v = 0; v < n; ++v) {
                inventories.push_back(oracle::enumerate_all_paths(sg.graph, v, t));
            }
            for (const auto& w : weights) {
                const auto r = run_engine(Engine::Generic, sg.graph, w, {t, Direction::ToTarget},
                                          watched(generic_dominance()));
                for (VertexId v = 0; v < n; ++v) {
                    const double want = oracle::brute_force_distance(inventories[v], w);
                    ++compared;
                    if (!rel_close(r.distance[v], want, kOracleTol)) {
                        out.fail(sg.id + fmt(" W=%s d(v%u,v%u) = %.17g, oracle %.17g", w.to_string().c_str(), v, t,
                                             r.distance[v], want));
                    }
                }
            }
        }
    }
    const double s = elapsed_ms(start) / 1000.0;
    if (s >= kSuiteBudgetS) {
        out.fail(fmt("took %.1f s", s));
    }
    if (out.pass) {
        out.detail = fmt("%zu graphs x 4 W, %zu distances match the oracle, %.2f s", suite().size(), compared, s);
    }
    return out;
}

Outcome criterion4() {
    Outcome out;
    std::size_t compared = 0;
    const std::vector<double> scales{1.0, 0.37, 2.5};
    for (const auto& sg : suite()) {
        const auto n = sg.graph.vertex_count();
        for (VertexId t = 0; t < n; ++t) {
            const auto classic = oracle::classic_shortest_path(sg.graph, t);
            for (const double c : scales) {
                const auto w = WeightSequence::constant(c);
                const auto r = run_engine(Engine::Generic, sg.graph, w, {t, Direction::ToTarget},
                                          watched(generic_dominance()));
                for (VertexId v = 0; v < n; ++v) {
                    ++compared;
                    if (!rel_close(r.distance[v], c * classic[v], kConstTol)) {
                        out.fail(sg.id + fmt(" c=%g v%u: %.17g vs %.17g", c, v, r.distance[v], c * classic[v]));
                    }
                }
            }
        }
    }
    if (out.pass) {
        out.detail = fmt("%zu distances equal c x classic shortest path", compared);
    }
    return out;
}

Outcome criterion5() {
    Outcome out;
    struct Setup {
        Monotone monotone;
        Engine engine;
        PruningOrder order;
        Direction direction;
    };
    const std::vector<Setup> setups{
        {Monotone::NonDecreasing, Engine::Order1, PruningOrder::PreferLonger, Direction::FromSource},
        {Monotone::NonIncreasing, Engine::Order1, PruningOrder::PreferLonger, Direction::ToTarget},
        {Monotone::NonIncreasing, Engine::Order2, PruningOrder::PreferShorter, Direction::FromSource},
        {Monotone::NonDecreasing, Engine::Order2, PruningOrder::PreferShorter, Direction::ToTarget},
    };
    Rng rng(5150);
    std::map<std::string, std::size_t> runs;
    std::map<std::string, std::size_t> more_labels;
    std::size_t graphs = 0;
    for (int i = 0; i < kMonotoneGraphs; ++i) {
        const auto n = rng.integer(2, 12);
        for (const auto monotone : {Monotone::NonDecreasing, Monotone::NonIncreasing}) {
            const auto doc = gen_monotone_dag(n, 9000 + i, monotone);
            const auto g = to_graph(doc);
            ++graphs;
            for (const double k : {1.0, 2.0}) {
                const auto w = WeightSequence::inverse_power(k);
                for (const auto& s : setups) {
                    if (s.monotone != monotone) {
                        continue;
                    }
                    const std::string key =
                        std::string(to_string(s.engine)) + (s.direction == Direction::FromSource ? "/src" : "/tgt");
                    std::size_t generic_total = 0;
                    std::size_t special_total = 0;
                    for (VertexId a = 0; a < n; ++a) {
                        const Anchor anchor{a, s.direction};
                        const auto generic = run_engine(Engine::Generic, g, w, anchor, watched(generic_dominance()));
                        const auto special = run_engine(s.engine, g, w, anchor, watched(order_dominance(s.order, w)));
                        generic_total += generic.stats.labels_retained;
                        special_total += special.stats.labels_retained;
                        for (VertexId v = 0; v < n; ++v) {
                            if (!rel_close(special.distance[v], generic.distance[v], kOracleTol)) {
                                out.fail(*doc.name + " " + key + fmt(" k=%g anchor v%u vertex v%u: %.17g vs %.17g",
                                                                     k, a, v, special.distance[v],
                                                                     generic.distance[v]));
                            }
                        }
                    }
                    ++runs[key];
                    if (special_total > generic_total) {
                        ++more_labels[key];
                        if (s.engine == Engine::Order1) {
                            out.fail(*doc.name + " " + key +
                                     fmt(" k=%g retained %zu > generic %zu", k, special_total, generic_total));
                        }
                    }
                }
            }
        }
    }
    std::string counts;
    for (const auto& [key, total] : runs) {
        counts += fmt(" %s:%zu/%zu", key.c_str(), more_labels[key], total);
    }
    if (out.pass) {
        out.detail = fmt("%zu monotone DAGs, distances equal; runs retaining more labels than generic:", graphs) +
                     counts;
    } else {
        out.detail += ";" + counts;
    }
    return out;
}

// Label triples: P, P' share endpoints, R is attached after (suffix) or before (prefix).
struct Triple {
    Label p;
    Label p_prime;
    Label r;
};

Label random_label(Rng& rng) {
    const auto l = rng.integer(1, 8);
    return {std::round(rng.uniform(0.1, 10.0 * l) * 100) / 100, l};
}

double joined_distance(const Label& a, const Label& b, const WeightSequence& w, bool prefix) {
    // Suffix composition from raw sums; prefix composition through the distance form.
    if (!prefix) {
        return label_distance({a.sum + b.sum, a.length + b.length}, w);
    }
    const auto joined = combine_distances({label_distance(b, w), b.length}, {label_distance(a, w), a.length}, w);
    return joined.distance;
}

struct PropositionRun {
    std::size_t violations = 0;
    std::string first;
};

PropositionRun run_proposition(Rng& rng, const WeightSequence& w, bool prefix,
                               const std::function<bool(const Triple&)>& hypothesis) {
    PropositionRun run;
    for (int done = 0; done < kTriples;) {
        const Triple t{random_label(rng), random_label(rng), random_label(rng)};
        if (!hypothesis(t)) {
            continue;
        }
        ++done;
        const double q = joined_distance(t.p, t.r, w, prefix);
        const double q_prime = joined_distance(t.p_prime, t.r, w, prefix);
        if (q > q_prime * (1 + 1e-12)) {
            if (run.violations++ == 0) {
                run.first = fmt("P=(%g,%u) P'=(%g,%u) R=(%g,%u): d(Q)=%.6g > d(Q')=%.6g", t.p.sum, t.p.length,
                                t.p_prime.sum, t.p_prime.length, t.r.sum, t.r.length, q, q_prime);
            }
        }
    }
    return run;
}

Outcome criterion6() {
    Outcome out;
    Rng rng(6006);
    std::string summary;

    // Dominance may discard the worse label, any non-increasing W.
    for (const bool prefix : {false, true}) {
        std::size_t violations = 0;
        for (int block = 0; block < 4; ++block) {
            const auto w = block % 2 ? WeightSequence::inverse_power(1.5)
                                     : plwd::testing::random_nonincreasing_list(rng, 16);
            const auto run = run_proposition(rng, w, prefix, [](const Triple& t) { return dominates(t.p, t.p_prime); });
            violations += run.violations;
            if (run.violations) {
                out.fail(std::string("dominance ") + (prefix ? "prefix " : "suffix ") + run.first);
            }
        }
        summary += fmt(" dominance/%s:%zu", prefix ? "pre" : "suf", violations);
    }

    for (const double k : {1.0, 1.5, 2.0, 3.0}) {
        const auto w = WeightSequence::inverse_power(k);
        const auto d = [&](const Label& l) { return label_distance(l, w); };
        const auto longer = [&](const Triple& t) {
            return t.p.length >= t.p_prime.length && d(t.p) <= d(t.p_prime) && d(t.p_prime) <= d(t.r);
        };
        const auto shorter = [&](const Triple& t) {
            return t.p.length <= t.p_prime.length && d(t.p) <= d(t.p_prime) && d(t.r) <= d(t.p);
        };
        for (const bool prefix : {false, true}) {
            const auto a = run_proposition(rng, w, prefix, longer);
            const auto b = run_proposition(rng, w, prefix, shorter);
            summary += fmt(" k=%g/%s:%zu,%zu", k, prefix ? "pre" : "suf", a.violations, b.violations);
            if (a.violations) {
                out.fail(fmt("longer-path proposition k=%g ", k) + (prefix ? "prefix " : "suffix ") + a.first);
            }
            if (b.violations) {
                out.fail(fmt("shorter-path proposition k=%g ", k) + (prefix ? "prefix " : "suffix ") + b.first);
            }
        }
    }
    out.detail += (out.pass ? "" : "; ") + std::string("violations per 10000 (longer,shorter):") + summary;
    return out;
}

Outcome criterion7() {
    Outcome out;
    // Criteria 1-5 feed g_antichain through their observers.
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    if (g_antichain.events == 0) {
        out.fail("no filtering passes observed");
    }
    if (g_antichain.bad) {
        out.fail(fmt("%zu of %zu passes hold a dominated label, first: ", g_antichain.bad, g_antichain.events) +
                 g_antichain.first);
    }
    if (out.pass) {
        out.detail = fmt("%zu filtering passes, every LabelSet equals its definitional front", g_antichain.events);
    }
    return out;
}

Outcome criterion8() {
    Outcome out;
    std::size_t runs = 0;
    std::size_t differing = 0;
    std::size_t distance_differs = 0;
    std::string first_distance;
    RunOptions printed;
    printed.frontier = FrontierRule::ReachedOutsideFrontier;
    const auto compare = [&](const std::string& id, const WeightedDigraph& g, const WeightSequence& w, VertexId t) {
        ++runs;
        const auto a = compute_distances_to_target(g, w, t);
        const auto b = compute_distances_to_target(g, w, t, printed);
        if (a.distance == b.distance && a.fronts == b.fronts) {
            return;
        }
        ++differing;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (a.distance[v] != b.distance[v]) {
                if (distance_differs++ == 0) {
                    first_distance = id + fmt(" W=%s target v%u: d(v%u) changed-set %.9g, printed %.9g",
                                              w.to_string().c_str(), t, v, a.distance[v], b.distance[v]);
                }
                out.fail(id + fmt(" W=%s target v%u: d(v%u) changed-set %.9g, printed %.9g", w.to_string().c_str(),
                                  t, v, a.distance[v], b.distance[v]));
                return;
            }
        }
        out.fail(id + fmt(" W=%s target v%u: label sets differ", w.to_string().c_str(), t));
    };
    compare("example1", plwd::testing::example1_graph(), WeightSequence::inverse_power(1), 0);
    for (const auto& sg : suite()) {
        for (const auto& w : suite_weights(sg)) {
            for (VertexId t = 0; t < sg.graph.vertex_count(); ++t) {
                compare(sg.id, sg.graph, w, t);
            }
        }
    }
    if (out.pass) {
        out.detail = fmt("%zu runs identical", runs);
    } else {
        if (!first_distance.empty()) {
            out.detail = first_distance;
        }
        out.detail += fmt("; %zu of %zu runs differ, %zu in distances", differing, runs, distance_differs);
    }
    return out;
}

Outcome criterion9() {
    Outcome out;
    std::size_t triangles = 0;
    for (const auto& sg : suite()) {
        const auto n = sg.graph.vertex_count();
        for (const auto& w : suite_weights(sg)) {
            std::vector<std::vector<double>> d(n);  // d[a][b] = d(a, b)
            for (VertexId a = 0; a < n; ++a) {
                d[a] = compute_distances_from_source(sg.graph, w, a).distance;
            }
            for (VertexId a = 0; a < n; ++a) {
                if (d[a][a] != 0.0) {
                    out.fail(sg.id + fmt(" d(v%u,v%u) = %g", a, a, d[a][a]));
                }
                for (VertexId b = 0; b < n; ++b) {
                    if (!(d[a][b] >= 0.0)) {
                        out.fail(sg.id + fmt(" d(v%u,v%u) = %g", a, b, d[a][b]));
                    }
                    if (a != b && d[a][b] == 0.0) {
                        out.fail(sg.id + fmt(" d(v%u,v%u) = 0 for distinct vertices", a, b));
                    }
                    for (VertexId c = 0; c < n; ++c) {
                        if (std::isinf(d[a][b]) || std::isinf(d[a][c]) || std::isinf(d[c][b])) {
                            continue;
                        }
                        ++triangles;
                        if (d[a][b] > (d[a][c] + d[c][b]) * (1 + kTriangleTol)) {
                            out.fail(sg.id + fmt(" W=%s d(v%u,v%u)=%.9g > d(v%u,v%u)+d(v%u,v%u)=%.9g",
                                                 w.to_string().c_str(), a, b, d[a][b], a, c, c, b,
                                                 d[a][c] + d[c][b]));
                        }
                    }
                }
            }
        }
    }
    if (out.pass) {
        out.detail = fmt("nonnegativity, identity and %zu finite triangles hold", triangles);
    }
    return out;
}

Outcome tree_demo() {
    Outcome out;
    // Root v0; v2 reaches it through v1.
    const std::vector<Edge> edges{{1, 0, 10.0}, {2, 1, 1.0}};
    const auto r = compute_distances_to_target(build_graph(3, edges), WeightSequence::inverse_power(1), 0);
    if (!(r.distance[2] < r.distance[1])) {
        out.fail(fmt("d(v2)=%g, d(v1)=%g", r.distance[2], r.distance[1]));
    } else {
        out.detail = fmt("v2 -> v1 -> v0: d(v2,v0)=%g < d(v1,v0)=%g", r.distance[2], r.distance[1]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"C1", criterion1}, {"C2", criterion2}, {"C3", criterion3}, {"C4", criterion4}, {"C5", criterion5},
        {"C6", criterion6}, {"C7", criterion7}, {"C8", criterion8}, {"C9", criterion9}, {"TREE", tree_demo},
    };
    std::set<std::string> wanted(argv + 1, argv + argc);
    for (const auto& name : wanted) {
        if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == name; })) {
            std::fprintf(stderr, "unknown criterion %s\n", name.c_str());
            return 64;
        }
    }
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        if (!wanted.empty() && !wanted.count(name)) {
            continue;
        }
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %-4s %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
        std::fflush(stdout);
        failed += outcome.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
