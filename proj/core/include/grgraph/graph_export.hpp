#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grgraph/graph.hpp"

namespace grgraph {

/// "graph G {" with one node line per vertex (labelled by generators) and one
/// "a -- b;" line per edge. Byte-deterministic.
std::string export_dot(const IntersectionGraph& g);

/// JSON object with vertices (label and members), edges and invariants.
/// Invariants above `cap` vertices are reported as null.
std::string export_json(const IntersectionGraph& g, std::size_t cap = 64);

/// What read_graph_json recovers from an export_json document.
struct ExportedGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> members;
  std::size_t ring_size = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Throws Error(SchemaError) on malformed input.
ExportedGraph read_graph_json(const std::string& text);

/// Rebuild an IntersectionGraph from a parsed export.
IntersectionGraph to_intersection_graph(const ExportedGraph& exported);

}  // namespace grgraph
