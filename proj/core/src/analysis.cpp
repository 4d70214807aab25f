#include "grgraph/analysis.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "grgraph/errors.hpp"
#include "span.hpp"

namespace grgraph {

Analysis::Analysis(Instance instance) : instance_(std::move(instance)) {}

const std::vector<IdealSet>& Analysis::all_ideals() {
  if (!all_ideals_) all_ideals_ = enumerate_left_ideals(ring(), limits().ideal_count);
  return *all_ideals_;
}

const std::vector<IdealSet>& Analysis::graded_ideals() {
  if (!graded_ideals_) graded_ideals_ = enumerate_graded_left_ideals(grading(), limits().ideal_count);
  return *graded_ideals_;
}

const std::vector<IdealSet>& Analysis::all_vertices() {
  if (!all_vertices_) all_vertices_ = nontrivial_proper(all_ideals());
  return *all_vertices_;
}

const std::vector<IdealSet>& Analysis::graded_vertices() {
  if (!graded_vertices_) graded_vertices_ = nontrivial_proper(graded_ideals());
  return *graded_vertices_;
}

const IntersectionGraph& Analysis::ungraded_graph() {
  if (!ungraded_graph_) ungraded_graph_ = build_intersection_graph(ring(), all_vertices());
  return *ungraded_graph_;
}

const IntersectionGraph& Analysis::graded_graph() {
  if (!graded_graph_) graded_graph_ = build_intersection_graph(ring(), graded_vertices(), &grading());
  return *graded_graph_;
}

const GraphInvariants& Analysis::graded_invariants() {
  if (!graded_invariants_) graded_invariants_ = compute_invariants(graded_graph().graph, limits().graph_order);
  return *graded_invariants_;
}

const IdentitySide& Analysis::identity() {
  if (!identity_) identity_ = identity_side(grading(), limits().ideal_count);
  return *identity_;
}

const GradingClassification& Analysis::classification() {
  if (!classification_) classification_ = classify_grading(grading());
  return *classification_;
}

std::optional<Grading> graded_factor(const Grading& g, const IdealSet& ideal) {
  const FiniteRing& R = g.ring();
  const std::vector<Elem> members = ideal.elements();
  std::optional<Elem> unit;
  for (Elem e : members) {
    const bool works = std::all_of(members.begin(), members.end(),
                                   [&](Elem x) { return R.mul(e, x) == x && R.mul(x, e) == x; });
    if (works) {
      unit = e;
      break;
    }
  }
  if (!unit || *unit == R.zero()) return std::nullopt;

  const std::size_t n = members.size();
  std::map<Elem, Elem> local;
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(R.name(members[i]));
    for (std::size_t j = 0; j < n; ++j) {
      const auto s = local.find(R.add(members[i], members[j]));
      const auto p = local.find(R.mul(members[i], members[j]));
      if (s == local.end() || p == local.end()) return std::nullopt;
      add[i * n + j] = s->second;
      mul[i * n + j] = p->second;
    }
  }
  Construction c;
  c.kind = ConstructionKind::subring;
  c.description = describe_ideal(R, ideal, &g) + " of " + R.description();
  try {
    RingPtr ring = FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(c));
    std::map<Degree, BitSet> components;
    for (Degree d : g.support()) {
      BitSet part(n);
      for (Elem x : g.component_elements(d))
        if (auto it = local.find(x); it != local.end()) part.set(it->second);
      components.emplace(d, std::move(part));
    }
    return Grading::validate(ring, g.group(), std::move(components), GradingKind::explicit_components);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<BitSet> enumerate_submodules(const FiniteModule& m, std::size_t limit) {
  const FiniteRing& R = m.ring();
  auto plus = [&](Elem x, Elem y) { return m.add(x, y); };
  auto extend = [&](detail::SubgroupBuilder b, Elem x) {
    for (Elem r = 0; r < R.size(); ++r) b.adjoin(m.act(r, x), plus);
    return b;
  };
  std::vector<detail::SubgroupBuilder> found;
  std::unordered_set<BitSet, BitSetHash> seen;
  found.emplace_back(m.size(), m.zero());
  seen.insert(found.back().members);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x = 0; x < m.size(); ++x) {
      if (found[i].members.test(x)) continue;
      auto next = extend(found[i], x);
      if (seen.insert(next.members).second) {
        if (found.size() >= limit)
          throw Error(ErrorKind::IdealCountLimit, "more than " + std::to_string(limit) + " submodules");
        found.push_back(std::move(next));
      }
    }
  }
  std::vector<BitSet> out;
  for (auto& b : found) out.push_back(std::move(b.members));
  std::sort(out.begin(), out.end(), BitSet::canonical_less);
  return out;
}

bool is_idealization_instance(const Grading& g) {
  return g.ring().construction().kind == ConstructionKind::idealization && g.kind() == GradingKind::idealization;
}

bool is_self_idealization_instance(const Grading& g) {
  if (!is_idealization_instance(g)) return false;
  const auto& c = g.ring().construction();
  const FiniteRing& base = *c.parts.front();
  const FiniteModule& m = *c.module;
  if (m.size() != base.size()) return false;
  for (Elem a = 0; a < base.size(); ++a)
    for (Elem b = 0; b < base.size(); ++b)
      if (m.add(a, b) != base.add(a, b) || m.act(a, b) != base.mul(a, b)) return false;
  return true;
}

bool is_group_ring_instance(const Grading& g) {
  return g.ring().construction().kind == ConstructionKind::group_ring && g.kind() == GradingKind::group_ring;
}

bool is_integer_instance(const Grading& g) { return g.group().is_integers(); }

}  // namespace grgraph
