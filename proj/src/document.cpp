#include "plwd/document.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <set>
#include <utility>

#include "plwd/error.hpp"
#include "plwd/format.hpp"

namespace plwd {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

template <class T>
bool read_number(std::string_view token, T& value) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc() && ptr == token.data() + token.size();
}

bool is_text_safe(const std::string& s) {
    return s.find('\n') == std::string::npos && trim(s) == s;
}

/// Shared semantic checks; `where(i)` names the location of edge i.
template <class Locate>
void check_edges(const GraphDocument& doc, Locate where) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i < doc.edges.size(); ++i) {
        const Edge& e = doc.edges[i];
        const auto [message, line] = where(i);
        if (e.from >= doc.n_vertices || e.to >= doc.n_vertices) {
            throw Error(ErrorCode::SemanticError, message + "vertex out of range", line);
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw Error(ErrorCode::SemanticError, message + "weight must be positive and finite", line);
        }
        if (e.from == e.to) {
            throw Error(ErrorCode::SemanticError, message + "self-loop", line);
        }
        if (!seen.insert({e.from, e.to}).second) {
            throw Error(ErrorCode::SemanticError, message + "duplicate edge", line);
        }
    }
}

}  // namespace

GraphDocument parse_edge_list(std::string_view text) {
    GraphDocument doc;
    bool have_count = false;
    std::vector<std::size_t> edge_lines;
    std::vector<std::pair<std::size_t, std::string>> labels;
    std::vector<std::size_t> label_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto body = trim(line.substr(1));
            if (body.rfind("@name", 0) == 0) {
                doc.name = std::string(trim(body.substr(5)));
            } else if (body.rfind("@weights", 0) == 0) {
                doc.weights_hint = std::string(trim(body.substr(8)));
            } else if (body.rfind("@label", 0) == 0) {
                const auto rest = trim(body.substr(6));
                const auto space = rest.find_first_of(" \t");
                std::size_t vertex = 0;
                if (space == std::string_view::npos || !read_number(rest.substr(0, space), vertex)) {
                    throw Error(ErrorCode::SyntaxError, "expected '# @label <vertex> <text>'", line_no);
                }
                labels.emplace_back(vertex, std::string(trim(rest.substr(space))));
                label_lines.push_back(line_no);
            }
            continue;
        }

        const auto tokens = split_ws(line);
        if (!have_count) {
            if (tokens.size() != 1 || !read_number(tokens[0], doc.n_vertices)) {
                throw Error(ErrorCode::SyntaxError, "expected the vertex count", line_no);
            }
            if (doc.n_vertices == 0) {
                throw Error(ErrorCode::SemanticError, "vertex count must be positive", line_no);
            }
            have_count = true;
            continue;
        }
        if (tokens.size() != 3) {
            throw Error(ErrorCode::SyntaxError, "expected '<from> <to> <weight>'", line_no);
        }
        long long from = 0;
        long long to = 0;
        double weight = 0.0;
        if (!read_number(tokens[0], from) || !read_number(tokens[1], to) || !read_number(tokens[2], weight)) {
            throw Error(ErrorCode::SyntaxError, "malformed edge '" + std::string(line) + "'", line_no);
        }
        if (from < 0 || to < 0 || static_cast<unsigned long long>(from) >= doc.n_vertices ||
            static_cast<unsigned long long>(to) >= doc.n_vertices) {
            throw Error(ErrorCode::SemanticError, "vertex out of range", line_no);
        }
        doc.edges.push_back({static_cast<VertexId>(from), static_cast<VertexId>(to), weight});
        edge_lines.push_back(line_no);
    }
    if (!have_count) {
        throw Error(ErrorCode::SyntaxError, "missing vertex count", line_no);
    }
    check_edges(doc, [&](std::size_t i) { return std::pair{std::string(), std::optional(edge_lines[i])}; });

    if (!labels.empty()) {
        doc.vertex_labels.assign(doc.n_vertices, std::string());
        std::vector<bool> given(doc.n_vertices, false);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const auto& [vertex, label] = labels[i];
            if (vertex >= doc.n_vertices || given[vertex]) {
                throw Error(ErrorCode::SemanticError, "bad or repeated label vertex", label_lines[i]);
            }
            given[vertex] = true;
            doc.vertex_labels[vertex] = label;
        }
    }
    return doc;
}

std::string serialize_edge_list(const GraphDocument& doc) {
    std::string out;
    const auto require_safe = [](const std::string& s, const char* what) {
        if (!is_text_safe(s)) {
            throw Error(ErrorCode::SemanticError, std::string(what) + " cannot be written as a single trimmed line");
        }
    };
    if (doc.name) {
        require_safe(*doc.name, "name");
        out += "# @name " + *doc.name + "\n";
    }
    if (doc.weights_hint) {
        require_safe(*doc.weights_hint, "weights hint");
        out += "# @weights " + *doc.weights_hint + "\n";
    }
    for (std::size_t v = 0; v < doc.vertex_labels.size(); ++v) {
        require_safe(doc.vertex_labels[v], "vertex label");
        out += "# @label " + std::to_string(v) + " " + doc.vertex_labels[v] + "\n";
    }
    out += std::to_string(doc.n_vertices) + "\n";
    for (const Edge& e : doc.edges) {
        out += std::to_string(e.from) + " " + std::to_string(e.to) + " " + format_shortest(e.weight) + "\n";
    }
    return out;
}

GraphDocument parse_json_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, e.what());
    }
    GraphDocument doc;
    std::string field = "n_vertices";
    try {
        if (!root.is_object()) {
            field = "<root>";
            throw Error(ErrorCode::SemanticError, "<root>: expected an object");
        }
        doc.n_vertices = root.at("n_vertices").get<std::size_t>();
        if (doc.n_vertices == 0) {
            throw Error(ErrorCode::SemanticError, "n_vertices: must be positive");
        }
        field = "edges";
        const auto& edges = root.at("edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            field = "edges[" + std::to_string(i) + "]";
            const auto& e = edges.at(i);
            doc.edges.push_back(
                {e.at("from").get<VertexId>(), e.at("to").get<VertexId>(), e.at("weight").get<double>()});
        }
        if (root.contains("vertex_labels")) {
            field = "vertex_labels";
            doc.vertex_labels = root.at("vertex_labels").get<std::vector<std::string>>();
            if (doc.vertex_labels.size() != doc.n_vertices) {
                throw Error(ErrorCode::SemanticError, "vertex_labels: need one label per vertex");
            }
        }
        if (root.contains("name")) {
            field = "name";
            doc.name = root.at("name").get<std::string>();
        }
        if (root.contains("weights_hint")) {
            field = "weights_hint";
            doc.weights_hint = root.at("weights_hint").get<std::string>();
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SemanticError, field + ": " + e.what());
    }
    check_edges(doc, [](std::size_t i) {
        return std::pair{"edges[" + std::to_string(i) + "]: ", std::optional<std::size_t>()};
    });
    return doc;
}

std::string serialize_json_document(const GraphDocument& doc) {
    json root = json::object();
    root["n_vertices"] = doc.n_vertices;
    json edges = json::array();
    for (const Edge& e : doc.edges) {
        edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
    }
    root["edges"] = std::move(edges);
    if (!doc.vertex_labels.empty()) {
        root["vertex_labels"] = doc.vertex_labels;
    }
    if (doc.name) {
        root["name"] = *doc.name;
    }
    if (doc.weights_hint) {
        root["weights_hint"] = *doc.weights_hint;
    }
    return root.dump(2) + "\n";
}

GraphDocument parse_document(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json_document(text);
    }
    return parse_edge_list(text);
}

WeightedDigraph to_graph(const GraphDocument& doc) {
    return WeightedDigraph::build(doc.n_vertices, doc.edges);
}

GraphDocument to_document(const WeightedDigraph& g) {
    GraphDocument doc;
    doc.n_vertices = g.vertex_count();
    doc.edges.assign(g.edges().begin(), g.edges().end());
    return doc;
}

}  // namespace plwd
