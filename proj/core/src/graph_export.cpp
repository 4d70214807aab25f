#include "grgraph/graph_export.hpp"

#include "grgraph/errors.hpp"
#include "json_util.hpp"

namespace grgraph {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const IntersectionGraph& g) {
  std::string out = "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + dot_escape(g.labels[v]) + "\"];\n";
  for (const auto& [u, v] : g.graph.edges()) out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string export_json(const IntersectionGraph& g, std::size_t cap) {
  detail::ordered_json j;
  j["ring_size"] = g.vertices.empty() ? 0 : g.vertices.front().members.width();
  auto& vertices = j["vertices"] = detail::ordered_json::array();
  for (std::size_t v = 0; v < g.order(); ++v)
    vertices.push_back({{"id", v}, {"label", g.labels[v]}, {"members", g.vertices[v].elements()}});
  auto& edges = j["edges"] = detail::ordered_json::array();
  for (const auto& [u, v] : g.graph.edges()) edges.push_back({u, v});
  j["invariants"] = detail::to_json(compute_invariants(g.graph, cap));
  return j.dump(2) + "\n";
}

ExportedGraph read_graph_json(const std::string& text) {
  ExportedGraph out;
  try {
    const auto j = nlohmann::json::parse(text);
    out.ring_size = j.at("ring_size").get<std::size_t>();
    for (const auto& v : j.at("vertices")) {
      out.labels.push_back(v.at("label").get<std::string>());
      out.members.push_back(v.at("members").get<std::vector<Elem>>());
    }
    for (const auto& e : j.at("edges")) out.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("graph json: ") + e.what());
  }
  for (const auto& [u, v] : out.edges)
    if (u >= out.labels.size() || v >= out.labels.size())
      throw Error(ErrorKind::SchemaError, "graph json: edge endpoint out of range");
  for (const auto& m : out.members)
    for (Elem x : m)
      if (x >= out.ring_size) throw Error(ErrorKind::SchemaError, "graph json: member out of range");
  return out;
}

IntersectionGraph to_intersection_graph(const ExportedGraph& exported) {
  IntersectionGraph g;
  g.labels = exported.labels;
  for (const auto& m : exported.members) {
    BitSet bits(exported.ring_size);
    for (Elem x : m) bits.set(x);
    g.vertices.push_back(IdealSet{std::move(bits), std::nullopt});
  }
  g.graph = Graph::from_edges(exported.labels.size(), exported.edges);
  return g;
}

}  // namespace grgraph
