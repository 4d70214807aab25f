#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <utility>

#include "grgraph/graph.hpp"

namespace grgraph {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

Edge normal(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Edge sets of the biconnected blocks (Hopcroft-Tarjan).
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t parent) {
    disc[u] = low[u] = ++timer;
    g.neighbors(u).for_each([&](std::size_t v) {
      if (!disc[v]) {
        stack.push_back(normal(u, v));
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<Edge> block;
          const Edge cut = normal(u, v);
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == cut) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.push_back(normal(u, v));
        low[u] = std::min(low[u], disc[v]);
      }
    });
  };
  for (std::size_t s = 0; s < n; ++s)
    if (!disc[s]) dfs(s, n);
  return blocks;
}

/// Demoucron-Malgrange-Pertuiset on a biconnected graph with at least one
/// cycle. Faces are simple cycles stored as vertex sequences.
bool dmp_planar(const Graph& h) {
  const std::size_t n = h.order();
  if (n <= 4) return true;

  // Initial cycle: DFS until a back edge closes one.
  std::vector<std::size_t> cycle;
  {
    std::vector<std::size_t> parent(n, n), depth(n, 0);
    std::vector<bool> seen(n, false);
    std::function<bool(std::size_t)> dfs = [&](std::size_t u) -> bool {
      seen[u] = true;
      for (std::size_t v : h.neighbors(u).indices()) {
        if (!seen[v]) {
          parent[v] = u;
          depth[v] = depth[u] + 1;
          if (dfs(v)) return true;
        } else if (v != parent[u] && depth[v] < depth[u]) {
          for (std::size_t w = u; w != v; w = parent[w]) cycle.push_back(w);
          cycle.push_back(v);
          return true;
        }
      }
      return false;
    };
    dfs(0);
  }

  BitSet embedded_vertices(n);
  std::set<Edge> embedded_edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    embedded_vertices.set(cycle[i]);
    embedded_edges.insert(normal(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  std::vector<std::vector<std::size_t>> faces{cycle, std::vector<std::size_t>(cycle.rbegin(), cycle.rend())};
  const std::size_t total_edges = h.size();

  struct Fragment {
    BitSet attachments;
    // A path between two distinct attachments through the fragment.
    std::vector<std::size_t> path;
  };

  while (embedded_edges.size() < total_edges) {
    std::vector<Fragment> fragments;

    // Single chords between embedded vertices.
    for (const auto& [u, v] : h.edges()) {
      if (embedded_vertices.test(u) && embedded_vertices.test(v) && !embedded_edges.count({u, v})) {
        Fragment f{BitSet(n), {u, v}};
        f.attachments.set(u);
        f.attachments.set(v);
        fragments.push_back(std::move(f));
      }
    }

    // Components of the unembedded vertices, with their attachment edges.
    std::vector<bool> assigned(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (embedded_vertices.test(s) || assigned[s]) continue;
      std::vector<std::size_t> component;
      std::deque<std::size_t> queue{s};
      assigned[s] = true;
      Fragment f{BitSet(n), {}};
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        component.push_back(u);
        h.neighbors(u).for_each([&](std::size_t v) {
          if (embedded_vertices.test(v)) {
            f.attachments.set(v);
          } else if (!assigned[v]) {
            assigned[v] = true;
            queue.push_back(v);
          }
        });
      }
      // Path: attachment a -> component -> attachment b != a.
      const std::size_t a = f.attachments.first();
      std::vector<std::size_t> parent(n, n);
      std::vector<bool> visited(n, true);
      for (std::size_t u : component) visited[u] = false;
      std::deque<std::size_t> bfs;
      h.neighbors(a).for_each([&](std::size_t v) {
        if (!embedded_vertices.test(v) && !visited[v]) {
          visited[v] = true;
          parent[v] = a;
          bfs.push_back(v);
        }
      });
      std::size_t end = n, target = n;
      while (!bfs.empty() && end == n) {
        const std::size_t u = bfs.front();
        bfs.pop_front();
        for (std::size_t v : h.neighbors(u).indices()) {
          if (embedded_vertices.test(v)) {
            if (v != a) {
              end = u;
              target = v;
              break;
            }
          } else if (!visited[v]) {
            visited[v] = true;
            parent[v] = u;
            bfs.push_back(v);
          }
        }
      }
      if (end == n) return false;  // unreachable for a biconnected input
      f.path.push_back(target);
      for (std::size_t w = end; w != a; w = parent[w]) f.path.push_back(w);
      f.path.push_back(a);
      std::reverse(f.path.begin(), f.path.end());
      fragments.push_back(std::move(f));
    }

    // Admissible faces hold every attachment of the fragment.
    std::size_t pick = fragments.size(), pick_face = faces.size();
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      std::vector<std::size_t> admissible;
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        BitSet on_face(n);
        for (std::size_t v : faces[fi]) on_face.set(v);
        if (fragments[i].attachments.is_subset_of(on_face)) admissible.push_back(fi);
      }
      if (admissible.empty()) return false;
      if (admissible.size() == 1 || pick == fragments.size()) {
        pick = i;
        pick_face = admissible.front();
        if (admissible.size() == 1) break;
      }
    }

    // Split the chosen face along the fragment path.
    const auto& path = fragments[pick].path;
    const auto face = faces[pick_face];
    const std::size_t a = path.front(), b = path.back();
    const std::size_t ia = static_cast<std::size_t>(std::find(face.begin(), face.end(), a) - face.begin());
    const std::size_t ib = static_cast<std::size_t>(std::find(face.begin(), face.end(), b) - face.begin());
    std::vector<std::size_t> left, right;
    for (std::size_t k = ia;; k = (k + 1) % face.size()) {
      left.push_back(face[k]);
      if (k == ib) break;
    }
    for (std::size_t k = ib;; k = (k + 1) % face.size()) {
      right.push_back(face[k]);
      if (k == ia) break;
    }
    // left runs a..b, then back along the path interior b..a.
    for (std::size_t k = path.size() - 1; k-- > 1;) left.push_back(path[k]);
    // right runs b..a, then along the path interior a..b.
    for (std::size_t k = 1; k + 1 < path.size(); ++k) right.push_back(path[k]);
    faces[pick_face] = std::move(left);
    faces.push_back(std::move(right));

    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      embedded_vertices.set(path[k]);
      embedded_edges.insert(normal(path[k], path[k + 1]));
    }
    embedded_vertices.set(path.back());
  }
  return true;
}

}  // namespace

Planarity is_planar(const Graph& g, std::size_t exact_cap) {
  const std::size_t n = g.order();
  if (n <= 4) return Planarity::planar;
  if (n >= 3 && g.size() > 3 * n - 6) return Planarity::nonplanar;
  if (n > exact_cap) return Planarity::unknown;

  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() < 9) continue;  // fewer than 9 edges: no K5 or K3,3 subdivision fits
    std::vector<std::size_t> vertices;
    for (const auto& [u, v] : block) {
      vertices.push_back(u);
      vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Graph h(vertices.size());
    auto local = [&](std::size_t v) {
      return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (const auto& [u, v] : block) h.add_edge(local(u), local(v));
    if (h.size() > 3 * h.order() - 6) return Planarity::nonplanar;
    if (!dmp_planar(h)) return Planarity::nonplanar;
  }
  return Planarity::planar;
}

}  // namespace grgraph
