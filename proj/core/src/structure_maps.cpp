#include "grgraph/structure_maps.hpp"

#include <algorithm>

#include "grgraph/errors.hpp"

namespace grgraph {

namespace {

void require_e_faithful(const Grading& g) {
  if (!is_sigma_faithful(g, g.identity()))
    throw Error(ErrorKind::NotEFaithful, "grading " + g.describe() + " is not left e-faithful");
}

std::string pair_text(const IntersectionGraph& gr, std::size_t a, std::size_t b) {
  return gr.labels[a] + " and " + gr.labels[b];
}

}  // namespace

Subring identity_component_ring(const Grading& g) { return subring_on(g.ring_ptr(), g.component(g.identity())); }

IdentitySide identity_side(const Grading& g, std::size_t ideal_limit) {
  IdentitySide side{identity_component_ring(g), {}, {}};
  side.vertices = nontrivial_proper(enumerate_left_ideals(*side.re.ring, ideal_limit));
  side.graph = build_intersection_graph(*side.re.ring, side.vertices);
  return side;
}

IdealSet trace_on_identity(const Subring& re, const IdealSet& ideal) {
  BitSet bits(re.embedding.size());
  for (std::size_t i = 0; i < re.embedding.size(); ++i)
    if (ideal.contains(re.embedding[i])) bits.set(i);
  return IdealSet{std::move(bits), std::nullopt};
}

IdealSet extend_from_identity(const FiniteRing& ring, const Subring& re, const IdealSet& ideal_e) {
  std::vector<Elem> image;
  ideal_e.members.for_each([&](std::size_t i) { image.push_back(re.embedding[i]); });
  return generated_left_ideal(ring, image);
}

SimPartition sim_partition(const Grading& g, const Subring& re, const std::vector<IdealSet>& graded_vertices) {
  require_e_faithful(g);
  std::vector<IdealSet> traces;
  for (const auto& I : graded_vertices) {
    traces.push_back(trace_on_identity(re, I));
    if (traces.back().is_zero())
      throw Error(ErrorKind::NotEFaithful, "graded ideal " + I.members.to_string() + " meets R_e trivially");
  }
  SimPartition p;
  p.keys = traces;
  sort_canonical(p.keys);
  p.keys.erase(std::unique(p.keys.begin(), p.keys.end()), p.keys.end());
  p.classes.resize(p.keys.size());
  for (std::size_t v = 0; v < traces.size(); ++v) {
    const auto k = static_cast<std::size_t>(std::find(p.keys.begin(), p.keys.end(), traces[v]) - p.keys.begin());
    p.classes[k].push_back(v);
    p.class_of.push_back(k);
  }
  return p;
}

std::optional<std::string> class_clique_violation(const SimPartition& p, const IntersectionGraph& gr) {
  for (const auto& cls : p.classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (!gr.graph.adjacent(cls[i], cls[j]))
          return "same class but not adjacent: " + pair_text(gr, cls[i], cls[j]);
  return std::nullopt;
}

IntersectionGraph quotient_graph(const SimPartition& p, const IntersectionGraph& gr) {
  IntersectionGraph q;
  q.graph = Graph(p.classes.size());
  for (const auto& cls : p.classes) {
    q.vertices.push_back(gr.vertices[cls.front()]);
    q.labels.push_back("[" + gr.labels[cls.front()] + "]");
  }
  for (std::size_t a = 0; a < p.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < p.classes.size(); ++b) {
      const bool edge = gr.graph.adjacent(p.classes[a].front(), p.classes[b].front());
      for (std::size_t k : p.classes[a])
        for (std::size_t l : p.classes[b])
          if (gr.graph.adjacent(k, l) != edge)
            throw Error(ErrorKind::WellDefinednessViolation,
                        "class adjacency depends on representatives: " + pair_text(gr, k, l));
      if (edge) q.graph.add_edge(a, b);
    }
  }
  return q;
}

PhiReport phi_iso_check(const Grading& g, const IdentitySide& side, const IntersectionGraph& gr, PhiVariant variant) {
  PhiReport r;
  r.variant = variant;
  const FiniteRing& R = g.ring();

  std::optional<SimPartition> partition;
  IntersectionGraph target = gr;
  if (variant == PhiVariant::classes) {
    partition = sim_partition(g, side.re, gr.vertices);
    target = quotient_graph(*partition, gr);
  }
  r.source_labels = side.graph.labels;
  r.target_labels = target.labels;

  auto note = [&](const std::string& text) {
    if (!r.witness) r.witness = text;
  };

  for (std::size_t i = 0; i < side.vertices.size(); ++i) {
    const IdealSet extended = extend_from_identity(R, side.re, side.vertices[i]);
    if (!(trace_on_identity(side.re, extended) == side.vertices[i])) {
      r.traces_recovered = false;
      note("R I_e meets R_e in more than I_e for I_e = " + side.graph.labels[i]);
    }
    const auto v = gr.index_of(extended);
    if (!v) {
      r.mapping.push_back(std::nullopt);
      note("R I_e is not a vertex of the graded graph for I_e = " + side.graph.labels[i]);
      continue;
    }
    r.mapping.push_back(variant == PhiVariant::classes ? partition->class_of[*v] : *v);
  }

  std::vector<std::size_t> hits(target.order(), 0);
  bool total = true;
  for (const auto& m : r.mapping) {
    if (m) ++hits[*m];
    else total = false;
  }
  r.bijective = total && r.mapping.size() == target.order() &&
                std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
  if (!r.bijective)
    note("phi is not a bijection: " + std::to_string(side.vertices.size()) + " source vertices, " +
         std::to_string(target.order()) + " target vertices");

  r.adjacency_preserved = r.bijective;
  if (r.bijective) {
    for (std::size_t i = 0; i < r.mapping.size(); ++i) {
      for (std::size_t j = i + 1; j < r.mapping.size(); ++j) {
        if (side.graph.graph.adjacent(i, j) != target.graph.adjacent(*r.mapping[i], *r.mapping[j])) {
          r.adjacency_preserved = false;
          note("adjacency differs for " + side.graph.labels[i] + " and " + side.graph.labels[j]);
        }
      }
    }
  }
  return r;
}

TransferReport gamma_omega_transfer(const Grading& g, const IdentitySide& side, const IntersectionGraph& gr,
                                    std::size_t cap) {
  const SimPartition p = sim_partition(g, side.re, gr.vertices);
  TransferReport t;
  t.gamma_identity = domination_number(side.graph.graph, cap);
  t.gamma_graded = domination_number(gr.graph, cap);
  t.omega_graded = clique_number(gr.graph, cap);

  // Weight of I_e is the size of the class of R I_e, found by its trace key.
  std::vector<std::size_t> weights;
  for (const auto& ideal_e : side.vertices) {
    const auto k = std::find(p.keys.begin(), p.keys.end(), ideal_e);
    weights.push_back(k == p.keys.end() ? 0 : p.classes[static_cast<std::size_t>(k - p.keys.begin())].size());
  }
  t.omega_formula = max_weight_clique(side.graph.graph, weights, cap);
  return t;
}

}  // namespace grgraph
