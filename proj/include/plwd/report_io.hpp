#pragma once

#include <span>
#include <string>
#include <string_view>

#include "plwd/algorithm.hpp"
#include "plwd/document.hpp"
#include "plwd/weights.hpp"

namespace plwd {

/// Graphviz digraph. Edge labels are the edge weights unless `edge_values`
/// (one per document edge) is given, in which case those values label the
/// arrows instead. With a report, every vertex carries a `distance` attribute
/// and its distance in the node label. Output is byte-deterministic.
/// Throws ReportMismatch on size disagreements.
std::string export_dot(const GraphDocument& doc, const DistanceReport* report = nullptr,
                       std::span<const double> edge_values = {});

/// Machine-readable report; distances at full precision, null for +inf.
std::string report_to_json(const DistanceReport& report, std::string_view engine, const WeightSequence& w);

/// One "v<i>  <distance>" line per vertex with six significant digits, plus
/// the witness path when present.
std::string report_to_text(const DistanceReport& report);

}  // namespace plwd
