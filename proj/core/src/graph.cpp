#include "grgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "grgraph/errors.hpp"

namespace grgraph {

namespace {

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap)
    throw Error(ErrorKind::GraphTooLarge,
                std::string(what) + " on " + std::to_string(g.order()) + " vertices exceeds cap " + std::to_string(cap));
}

}  // namespace

std::string ExtendedInt::to_string() const { return value ? std::to_string(*value) : "inf"; }

Graph::Graph(std::size_t order) : adj_(order, BitSet(order)) {}

Graph Graph::from_edges(std::size_t order, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adj_[u].set(v);
  adj_[v].set(u);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < order(); ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < order(); ++v) out.push_back(degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& keep) const {
  Graph h(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) h.add_edge(i, j);
  return h;
}

std::optional<std::size_t> IntersectionGraph::index_of(const IdealSet& ideal) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == ideal) return i;
  return std::nullopt;
}

IntersectionGraph build_intersection_graph(const FiniteRing& ring, const std::vector<IdealSet>& family,
                                           const Grading* grading) {
  IntersectionGraph out;
  out.vertices = family;
  out.graph = Graph(family.size());
  for (const auto& I : family) out.labels.push_back(describe_ideal(ring, I, grading));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i].members.intersection_count(family[j].members) > 1) out.graph.add_edge(i, j);
  return out;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, std::size_t source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](std::size_t v) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

Connectivity connectivity(const Graph& g) {
  Connectivity c;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++c.components;
    auto dist = distances_from(g, s);
    for (std::size_t v = 0; v < g.order(); ++v)
      if (dist[v]) seen[v] = true;
  }
  c.connected = c.components <= 1;
  return c;
}

ExtendedInt diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (const auto& d : distances_from(g, s)) {
      if (!d) return ExtendedInt::infinite();
      best = std::max(best, *d);
    }
  }
  return ExtendedInt::finite(best);
}

ExtendedInt girth(const Graph& g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.order();
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::optional<std::size_t>> dist(n);
    std::vector<std::size_t> parent(n, n);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](std::size_t v) {
        if (!dist[v]) {
          dist[v] = *dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          const std::size_t len = *dist[u] + *dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      });
    }
  }
  return best ? ExtendedInt::finite(*best) : ExtendedInt::infinite();
}

std::vector<std::size_t> maximum_clique(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "clique search");
  const std::size_t n = g.order();
  std::vector<std::size_t> best, current;

  // Greedy colouring of the candidates gives the bound: a clique uses at most
  // one vertex per colour class.
  std::function<void(BitSet)> expand = [&](BitSet candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    {
      BitSet uncoloured = candidates;
      std::size_t k = 0;
      while (uncoloured.any()) {
        ++k;
        BitSet available = uncoloured;
        while (available.any()) {
          const std::size_t v = available.first();
          available.reset(v);
          available.subtract(g.neighbors(v));
          uncoloured.reset(v);
          order.push_back(v);
          colour.push_back(k);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      BitSet next = candidates & g.neighbors(v);
      if (next.none()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  };
  if (n > 0) expand(BitSet::full(n));
  std::sort(best.begin(), best.end());
  return best;
}

std::size_t clique_number(const Graph& g, std::size_t cap) { return maximum_clique(g, cap).size(); }

std::vector<std::size_t> minimum_dominating_set(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "domination search");
  const std::size_t n = g.order();
  if (n == 0) return {};
  std::vector<BitSet> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = g.neighbors(v);
    closed[v].set(v);
  }
  std::vector<std::size_t> chosen;

  // Some vertex of N[u] must be chosen for the lowest undominated u.
  std::function<bool(const BitSet&, std::size_t)> search = [&](const BitSet& dominated, std::size_t budget) -> bool {
    if (dominated.count() == n) return true;
    if (budget == 0) return false;
    BitSet undominated = BitSet::full(n);
    undominated.subtract(dominated);
    const std::size_t u = undominated.first();
    bool found = false;
    closed[u].for_each([&](std::size_t v) {
      if (found) return;
      chosen.push_back(v);
      if (search(dominated | closed[v], budget - 1)) {
        found = true;
        return;
      }
      chosen.pop_back();
    });
    return found;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    chosen.clear();
    if (search(BitSet(n), k)) break;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::size_t domination_number(const Graph& g, std::size_t cap) { return minimum_dominating_set(g, cap).size(); }

bool is_dominating(const Graph& g, const std::vector<std::size_t>& set) {
  BitSet covered(g.order());
  for (std::size_t v : set) {
    covered.set(v);
    covered |= g.neighbors(v);
  }
  return covered.count() == g.order();
}

bool is_clique(const Graph& g, const std::vector<std::size_t>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.adjacent(set[i], set[j])) return false;
  return true;
}

WeightedClique max_weight_clique(const Graph& g, const std::vector<std::size_t>& weights, std::size_t cap) {
  check_cap(g, cap, "weighted clique search");
  WeightedClique best;
  std::vector<std::size_t> current;
  std::size_t current_weight = 0;
  std::function<void(BitSet, BitSet)> bron_kerbosch = [&](BitSet p, BitSet x) {
    if (p.none() && x.none()) {
      if (current_weight > best.weight || (best.members.empty() && !current.empty())) {
        best.weight = current_weight;
        best.members = current;
      }
      return;
    }
    BitSet px = p | x;
    std::size_t pivot = px.first();
    std::size_t pivot_hits = 0;
    px.for_each([&](std::size_t u) {
      const std::size_t hits = p.intersection_count(g.neighbors(u));
      if (hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
      }
    });
    BitSet branch = p;
    branch.subtract(g.neighbors(pivot));
    branch.for_each([&](std::size_t v) {
      current.push_back(v);
      current_weight += weights[v];
      bron_kerbosch(p & g.neighbors(v), x & g.neighbors(v));
      current.pop_back();
      current_weight -= weights[v];
      p.reset(v);
      x.set(v);
    });
  };
  if (g.order() > 0) bron_kerbosch(BitSet::full(g.order()), BitSet(g.order()));
  std::sort(best.members.begin(), best.members.end());
  return best;
}

ShapeFlags classify_shape(const Graph& g) {
  ShapeFlags f;
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  f.null = m == 0;
  f.complete = n < 2 || m == n * (n - 1) / 2;
  f.regular = true;
  for (std::size_t v = 1; v < n; ++v)
    if (g.degree(v) != g.degree(0)) f.regular = false;
  f.connected = connectivity(g).connected;
  if (n >= 1 && m == n - 1) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(v) == n - 1) {
        f.star = true;
        f.star_center = v;
        break;
      }
    }
  }
  return f;
}

std::string to_string(Planarity p) {
  switch (p) {
    case Planarity::planar:
      return "true";
    case Planarity::nonplanar:
      return "false";
    case Planarity::unknown:
      break;
  }
  return "unknown";
}

GraphInvariants compute_invariants(const Graph& g, std::size_t cap) {
  GraphInvariants inv;
  inv.order = g.order();
  inv.size = g.size();
  inv.components = connectivity(g).components;
  inv.diameter = diameter(g);
  inv.girth = girth(g);
  if (g.order() <= cap) {
    inv.clique_number = clique_number(g, cap);
    inv.domination_number = domination_number(g, cap);
  }
  inv.degree_sequence = g.degree_sequence();
  inv.flags = classify_shape(g);
  inv.planar = is_planar(g, cap);
  return inv;
}

}  // namespace grgraph
