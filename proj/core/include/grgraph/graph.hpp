#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grgraph/bitset.hpp"
#include "grgraph/ideals.hpp"

namespace grgraph {

/// Non-negative integer or infinity. Girth and diameter use it.
struct ExtendedInt {
  std::optional<std::size_t> value;

  static ExtendedInt infinite() { return {}; }
  static ExtendedInt finite(std::size_t v) { return {v}; }
  bool is_infinite() const { return !value.has_value(); }
  /// "inf" or the decimal value.
  std::string to_string() const;

  bool operator==(const ExtendedInt&) const = default;
};

/// Simple undirected graph as adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  static Graph from_edges(std::size_t order, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const;
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const BitSet& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  void add_edge(std::size_t u, std::size_t v);

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  /// Subgraph induced by `keep`, vertices renumbered in ascending order.
  Graph induced(const std::vector<std::size_t>& keep) const;

 private:
  std::vector<BitSet> adj_;
};

/// Intersection graph of an ideal family: vertex i is vertices[i], and i ~ j
/// iff the two ideals share a nonzero element.
struct IntersectionGraph {
  std::vector<IdealSet> vertices;
  std::vector<std::string> labels;
  Graph graph;

  std::size_t order() const { return graph.order(); }
  /// Vertex index of an ideal, if present.
  std::optional<std::size_t> index_of(const IdealSet& ideal) const;
};

/// `family` must exclude {0} and R. Labels default to describe_ideal.
IntersectionGraph build_intersection_graph(const FiniteRing& ring, const std::vector<IdealSet>& family,
                                           const Grading* grading = nullptr);

struct Connectivity {
  std::size_t components = 0;
  bool connected = true;
};
/// Empty and single-vertex graphs count as connected.
Connectivity connectivity(const Graph& g);

/// BFS distances from `source`; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, std::size_t source);

/// 0 for at most one vertex, infinite when disconnected.
ExtendedInt diameter(const Graph& g);
ExtendedInt girth(const Graph& g);

/// Exact clique number, 0 for the empty graph. Throws GraphTooLarge above `cap`.
std::size_t clique_number(const Graph& g, std::size_t cap = 64);
/// A maximum clique, ascending.
std::vector<std::size_t> maximum_clique(const Graph& g, std::size_t cap = 64);

/// Exact domination number, 0 for the empty graph. Throws GraphTooLarge above `cap`.
std::size_t domination_number(const Graph& g, std::size_t cap = 64);
/// A minimum dominating set, ascending.
std::vector<std::size_t> minimum_dominating_set(const Graph& g, std::size_t cap = 64);
bool is_dominating(const Graph& g, const std::vector<std::size_t>& set);
bool is_clique(const Graph& g, const std::vector<std::size_t>& set);

struct WeightedClique {
  std::size_t weight = 0;
  std::vector<std::size_t> members;
};
/// Maximum of the summed vertex weights over all cliques (Bron-Kerbosch with
/// pivoting over maximal cliques; weights are non-negative). Throws
/// GraphTooLarge above `cap`.
WeightedClique max_weight_clique(const Graph& g, const std::vector<std::size_t>& weights, std::size_t cap = 64);

struct ShapeFlags {
  bool null = false;      // no edges
  bool complete = false;  // every pair adjacent
  bool regular = false;
  bool star = false;      // K_1 and K_2 included
  bool connected = false;
  std::optional<std::size_t> star_center;
};
ShapeFlags classify_shape(const Graph& g);

enum class Planarity { planar, nonplanar, unknown };
std::string to_string(Planarity p);

/// Exact for order <= `exact_cap` (Demoucron-Malgrange-Pertuiset on each
/// biconnected block), unknown above it.
Planarity is_planar(const Graph& g, std::size_t exact_cap = 64);

struct GraphInvariants {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t components = 0;
  ExtendedInt diameter;
  ExtendedInt girth;
  std::optional<std::size_t> clique_number;      // nullopt above the cap
  std::optional<std::size_t> domination_number;  // nullopt above the cap
  std::vector<std::size_t> degree_sequence;
  ShapeFlags flags;
  Planarity planar = Planarity::unknown;
};
GraphInvariants compute_invariants(const Graph& g, std::size_t cap = 64);

}  // namespace grgraph
