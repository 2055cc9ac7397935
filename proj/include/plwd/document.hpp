#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plwd/graph.hpp"

namespace plwd {

/// Serializable description of a graph. Unlike WeightedDigraph it may hold an
/// invalid (e.g. cyclic) graph; `to_graph` performs the full validation.
struct GraphDocument {
    std::size_t n_vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::string> vertex_labels;  // empty, or one per vertex
    std::optional<std::string> name;
    std::optional<std::string> weights_hint;  // e.g. "invpow:1"

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

// Edge-list text:
//
//   # @name <text>            optional metadata directives
//   # @weights <spec>
//   # @label <vertex> <text>
//   # any other comment
//   <vertex count>
//   <from> <to> <weight>      one edge per line
//
// Blank lines and other `#` lines are ignored.
GraphDocument parse_edge_list(std::string_view text);
std::string serialize_edge_list(const GraphDocument& doc);

GraphDocument parse_json_document(std::string_view text);
std::string serialize_json_document(const GraphDocument& doc);

/// JSON when the first non-blank character is '{', edge-list text otherwise.
GraphDocument parse_document(std::string_view text);

WeightedDigraph to_graph(const GraphDocument& doc);
GraphDocument to_document(const WeightedDigraph& g);

}  // namespace plwd
