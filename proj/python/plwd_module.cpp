#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "plwd/algorithm.hpp"
#include "plwd/bench.hpp"
#include "plwd/document.hpp"
#include "plwd/error.hpp"
#include "plwd/generators.hpp"
#include "plwd/oracle.hpp"
#include "plwd/pareto.hpp"
#include "plwd/report_io.hpp"
#include "plwd/special_pruning.hpp"

namespace py = pybind11;
using namespace plwd;

namespace {

using EdgeTuple = std::tuple<VertexId, VertexId, double>;

std::vector<Edge> to_edges(const std::vector<EdgeTuple>& tuples) {
    std::vector<Edge> edges;
    edges.reserve(tuples.size());
    for (const auto& [from, to, weight] : tuples) {
        edges.push_back({from, to, weight});
    }
    return edges;
}

std::vector<EdgeTuple> from_edges(std::span<const Edge> edges) {
    std::vector<EdgeTuple> out;
    for (const Edge& e : edges) {
        out.emplace_back(e.from, e.to, e.weight);
    }
    return out;
}

WeightSequence as_weights(const py::object& w) {
    if (py::isinstance<WeightSequence>(w)) {
        return w.cast<WeightSequence>();
    }
    return WeightSequence::parse(w.cast<std::string>());
}

Anchor anchor_of(std::optional<VertexId> target, std::optional<VertexId> source) {
    if (target.has_value() == source.has_value()) {
        throw Error(ErrorCode::InvalidParams, "give exactly one of target or source");
    }
    return target ? Anchor{*target, Direction::ToTarget} : Anchor{*source, Direction::FromSource};
}

Engine engine_of(const std::string& name) {
    const auto engine = parse_engine(name);
    if (!engine) {
        throw Error(ErrorCode::InvalidParams, "unknown engine '" + name + "'");
    }
    return *engine;
}

}  // namespace

PYBIND11_MODULE(_plwd, m) {
    m.doc() = "Path-length-weighted distances on weighted DAGs";

    static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            py::object instance = py::handle(error_type.ptr())(e.what());
            instance.attr("code") = std::string(to_string(e.code()));
            instance.attr("line") = e.line() ? py::cast(*e.line()) : py::none();
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    py::class_<WeightSequence>(m, "WeightSequence")
        .def(py::init(&WeightSequence::parse), py::arg("spec"))
        .def_static("constant", &WeightSequence::constant, py::arg("c"))
        .def_static("inverse_power", &WeightSequence::inverse_power, py::arg("k"))
        .def_static("explicit_list", &WeightSequence::explicit_list, py::arg("values"))
        .def("at", &WeightSequence::at, py::arg("t"))
        .def("__str__", &WeightSequence::to_string)
        .def("__repr__", [](const WeightSequence& w) { return "WeightSequence('" + w.to_string() + "')"; })
        .def("__eq__", [](const WeightSequence& a, const WeightSequence& b) { return a == b; });

    py::class_<Label>(m, "Label")
        .def(py::init([](double sum, std::uint32_t length) { return Label{sum, length}; }), py::arg("sum"),
             py::arg("length"))
        .def_readonly("sum", &Label::sum)
        .def_readonly("length", &Label::length)
        .def("__eq__", [](const Label& a, const Label& b) { return a == b; })
        .def("__iter__", [](const Label& l) { return py::iter(py::make_tuple(l.sum, l.length)); })
        .def("__repr__", [](const Label& l) {
            return "Label(" + py::repr(py::float_(l.sum)).cast<std::string>() + ", " + std::to_string(l.length) + ")";
        });

    py::class_<WeightedDigraph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<EdgeTuple>& edges) {
                 return WeightedDigraph::build(n, to_edges(edges));
             }),
             py::arg("n_vertices"), py::arg("edges"))
        .def_property_readonly("vertex_count", &WeightedDigraph::vertex_count)
        .def_property_readonly("edge_count", &WeightedDigraph::edge_count)
        .def_property_readonly("edges", [](const WeightedDigraph& g) { return from_edges(g.edges()); })
        .def("topological_order",
             [](const WeightedDigraph& g) {
                 return std::vector<VertexId>(g.topological_order().begin(), g.topological_order().end());
             })
        .def("weight", &WeightedDigraph::weight, py::arg("from_"), py::arg("to"));

    py::class_<GraphDocument>(m, "Document")
        .def_readonly("n_vertices", &GraphDocument::n_vertices)
        .def_property_readonly("edges", [](const GraphDocument& d) { return from_edges(d.edges); })
        .def_readonly("vertex_labels", &GraphDocument::vertex_labels)
        .def_readonly("name", &GraphDocument::name)
        .def_readonly("weights_hint", &GraphDocument::weights_hint)
        .def("to_graph", &to_graph)
        .def("to_text", &serialize_edge_list)
        .def("to_json", &serialize_json_document)
        .def("__eq__", [](const GraphDocument& a, const GraphDocument& b) { return a == b; });

    py::class_<DistanceReport>(m, "Report")
        .def_property_readonly("anchor", [](const DistanceReport& r) { return r.anchor.vertex; })
        .def_property_readonly("direction",
                               [](const DistanceReport& r) {
                                   return r.anchor.direction == Direction::ToTarget ? "to-target" : "from-source";
                               })
        .def_readonly("distance", &DistanceReport::distance)
        .def_readonly("fronts", &DistanceReport::fronts)
        .def_property_readonly("witness",
                               [](const DistanceReport& r) {
                                   std::vector<std::optional<std::vector<VertexId>>> out;
                                   for (const auto& p : r.witness) {
                                       if (p) {
                                           out.emplace_back(std::vector<VertexId>(p->vertices().begin(),
                                                                                  p->vertices().end()));
                                       } else {
                                           out.emplace_back(std::nullopt);
                                       }
                                   }
                                   return out;
                               })
        .def_property_readonly("iterations", [](const DistanceReport& r) { return r.stats.iterations; })
        .def_property_readonly("labels_created", [](const DistanceReport& r) { return r.stats.labels_created; })
        .def_property_readonly("labels_retained", [](const DistanceReport& r) { return r.stats.labels_retained; });

    m.def(
        "compute",
        [](const WeightedDigraph& g, std::optional<VertexId> target, std::optional<VertexId> source,
           const py::object& weights, const std::string& engine, const std::string& frontier, bool witness) {
            RunOptions options;
            options.track_witness = witness;
            if (frontier == "printed") {
                options.frontier = FrontierRule::ReachedOutsideFrontier;
            } else if (frontier != "changed") {
                throw Error(ErrorCode::InvalidParams, "frontier must be 'changed' or 'printed'");
            }
            return run_engine(engine_of(engine), g, as_weights(weights), anchor_of(target, source), options);
        },
        py::arg("graph"), py::kw_only(), py::arg("target") = py::none(), py::arg("source") = py::none(),
        py::arg("weights") = "invpow:1", py::arg("engine") = "generic", py::arg("frontier") = "changed",
        py::arg("witness") = false);

    m.def(
        "brute_force_distance",
        [](const WeightedDigraph& g, VertexId a, VertexId b, const py::object& weights) {
            return oracle::brute_force_distance(g, as_weights(weights), a, b);
        },
        py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("weights") = "invpow:1");
    m.def("classic_shortest_path", &oracle::classic_shortest_path, py::arg("graph"), py::arg("target"));

    m.def("pareto_filter", [](const std::vector<Label>& labels) { return pareto_filter(labels); });
    m.def("dominates", &dominates);

    m.def("edge_monotonicity", [](const WeightedDigraph& g) {
        const auto r = check_edge_monotonicity(g);
        py::dict out;
        out["nondecreasing"] = r.nondecreasing_ok;
        out["nonincreasing"] = r.nonincreasing_ok;
        return out;
    });

    m.def("parse_document", &parse_document, py::arg("text"));
    m.def("document_from_graph", &to_document, py::arg("graph"));
    m.def(
        "export_dot",
        [](const GraphDocument& doc, const DistanceReport* report) { return export_dot(doc, report); },
        py::arg("document"), py::arg("report") = nullptr);
    m.def(
        "report_to_json",
        [](const DistanceReport& r, const std::string& engine, const py::object& weights) {
            return report_to_json(r, engine, as_weights(weights));
        },
        py::arg("report"), py::arg("engine") = "generic", py::arg("weights") = "invpow:1");

    m.def(
        "gen_tree", [](std::size_t n, std::uint64_t seed) { return gen_tree(n, seed); }, py::arg("n"),
        py::arg("seed"));
    m.def(
        "gen_star",
        [](std::size_t n, std::uint64_t seed, double chord_prob) { return gen_star(n, seed, {}, chord_prob); },
        py::arg("n"), py::arg("seed"), py::arg("chord_prob") = 0.3);
    m.def(
        "gen_random_dag", [](std::size_t n, double p, std::uint64_t seed) { return gen_random_dag(n, p, seed); },
        py::arg("n"), py::arg("edge_prob"), py::arg("seed"));
    m.def(
        "gen_monotone_dag",
        [](std::size_t n, std::uint64_t seed, bool nonincreasing) {
            return gen_monotone_dag(n, seed, nonincreasing ? Monotone::NonIncreasing : Monotone::NonDecreasing);
        },
        py::arg("n"), py::arg("seed"), py::arg("nonincreasing") = false);
}
