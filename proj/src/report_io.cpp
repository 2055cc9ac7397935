#include "plwd/report_io.hpp"

#include <cmath>
#include <json.hpp>

#include "plwd/error.hpp"
#include "plwd/format.hpp"

namespace plwd {

namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string path_text(const Path& p) {
    std::string out;
    for (const VertexId v : p.vertices()) {
        if (!out.empty()) {
            out += " -> ";
        }
        out += "v" + std::to_string(v);
    }
    return out;
}

}  // namespace

std::string export_dot(const GraphDocument& doc, const DistanceReport* report, std::span<const double> edge_values) {
    if (report && report->distance.size() != doc.n_vertices) {
        throw Error(ErrorCode::ReportMismatch, "report has " + std::to_string(report->distance.size()) +
                                                   " vertices, graph has " + std::to_string(doc.n_vertices));
    }
    if (!edge_values.empty() && edge_values.size() != doc.edges.size()) {
        throw Error(ErrorCode::ReportMismatch, "need one edge value per edge");
    }
    std::string out = "digraph \"" + escape(doc.name.value_or("G")) + "\" {\n";
    for (std::size_t v = 0; v < doc.n_vertices; ++v) {
        const std::string id = "v" + std::to_string(v);
        const std::string display = doc.vertex_labels.empty() ? id : doc.vertex_labels[v];
        out += "  " + id;
        if (report) {
            const std::string d = format_human(report->distance[v]);
            out += " [label=\"" + escape(display) + "\\n" + d + "\", distance=\"" + d + "\"]";
        } else if (!doc.vertex_labels.empty()) {
            out += " [label=\"" + escape(display) + "\"]";
        }
        out += ";\n";
    }
    for (std::size_t i = 0; i < doc.edges.size(); ++i) {
        const Edge& e = doc.edges[i];
        const double value = edge_values.empty() ? e.weight : edge_values[i];
        const std::string label = edge_values.empty() ? format_shortest(value) : format_human(value);
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" + label + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string report_to_json(const DistanceReport& report, std::string_view engine, const WeightSequence& w) {
    nlohmann::json root = nlohmann::json::object();
    root["anchor"] = report.anchor.vertex;
    root["direction"] = report.anchor.direction == Direction::ToTarget ? "to-target" : "from-source";
    root["engine"] = engine;
    root["weights"] = w.to_string();
    nlohmann::json distances = nlohmann::json::array();
    for (const double d : report.distance) {
        distances.push_back(std::isinf(d) ? nlohmann::json(nullptr) : nlohmann::json(d));
    }
    root["distances"] = std::move(distances);
    root["iterations"] = report.stats.iterations;
    root["labels_created"] = report.stats.labels_created;
    root["labels_retained"] = report.stats.labels_retained;
    if (!report.witness.empty()) {
        nlohmann::json witness = nlohmann::json::array();
        for (const auto& p : report.witness) {
            if (p) {
                witness.push_back(std::vector<VertexId>(p->vertices().begin(), p->vertices().end()));
            } else {
                witness.push_back(nullptr);
            }
        }
        root["witness"] = std::move(witness);
    }
    return root.dump(2) + "\n";
}

std::string report_to_text(const DistanceReport& report) {
    std::string out;
    for (std::size_t v = 0; v < report.distance.size(); ++v) {
        out += "v" + std::to_string(v) + "\t" + format_human(report.distance[v]);
        if (!report.witness.empty() && report.witness[v]) {
            out += "\t" + path_text(*report.witness[v]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace plwd
