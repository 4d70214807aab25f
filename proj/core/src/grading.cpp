#include "grgraph/grading.hpp"

#include <algorithm>
#include <charconv>

#include "grgraph/errors.hpp"
#include "span.hpp"

namespace grgraph {

// ---------------------------------------------------------------------------
// GradeGroup

GradeGroup GradeGroup::finite(FiniteGroup group) {
  GradeGroup g;
  g.group_ = std::move(group);
  return g;
}

GradeGroup GradeGroup::integers() { return GradeGroup(); }

const FiniteGroup& GradeGroup::finite_group() const {
  if (!group_) throw Error(ErrorKind::WrongInstanceKind, "grade group is the integers, not a finite group");
  return *group_;
}

Degree GradeGroup::identity() const { return group_ ? static_cast<Degree>(group_->identity()) : 0; }

Degree GradeGroup::op(Degree a, Degree b) const {
  if (!group_) return a + b;
  return group_->op(static_cast<FiniteGroup::Index>(a), static_cast<FiniteGroup::Index>(b));
}

Degree GradeGroup::inverse(Degree a) const {
  if (!group_) return -a;
  return group_->inverse(static_cast<FiniteGroup::Index>(a));
}

bool GradeGroup::contains(Degree d) const {
  if (!group_) return true;
  return d >= 0 && static_cast<std::size_t>(d) < group_->size();
}

std::vector<Degree> GradeGroup::elements() const {
  std::vector<Degree> out;
  if (group_)
    for (std::size_t i = 0; i < group_->size(); ++i) out.push_back(static_cast<Degree>(i));
  return out;
}

std::string GradeGroup::degree_name(Degree d) const {
  if (!group_) return std::to_string(d);
  return group_->name(static_cast<FiniteGroup::Index>(d));
}

std::optional<Degree> GradeGroup::parse_degree(const std::string& text) const {
  if (group_) {
    if (auto idx = group_->find(text)) return static_cast<Degree>(*idx);
    return std::nullopt;
  }
  Degree value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string GradeGroup::description() const { return group_ ? group_->description() : "Z"; }

// ---------------------------------------------------------------------------
// Grading

Grading Grading::validate(RingPtr ring, GradeGroup group, std::map<Degree, BitSet> components, GradingKind kind) {
  const FiniteRing& R = *ring;
  const std::size_t n = R.size();

  std::map<Degree, BitSet> nonzero;
  for (auto& [degree, set] : components) {
    const std::string where = "component of degree " + group.degree_name(degree);
    if (!group.contains(degree)) throw Error(ErrorKind::NotSubgroup, "degree " + std::to_string(degree) + " is not in the grade group");
    if (set.width() != n) throw Error(ErrorKind::NotSubgroup, where + " has the wrong width");
    if (!set.test(R.zero())) throw Error(ErrorKind::NotSubgroup, where + " does not contain zero");
    const auto members = set.indices();
    for (auto a : members) {
      const Elem ea = static_cast<Elem>(a);
      if (!set.test(R.neg(ea))) throw Error(ErrorKind::NotSubgroup, where + " is not closed under negation at " + R.name(ea));
      for (auto b : members) {
        const Elem eb = static_cast<Elem>(b);
        if (!set.test(R.add(ea, eb)))
          throw Error(ErrorKind::NotSubgroup, where + " is not closed under addition: " + R.name(ea) + " + " + R.name(eb));
      }
    }
    if (set.count() > 1) nonzero.emplace(degree, set);
  }

  Grading g;
  g.ring_ = ring;
  g.group_ = std::move(group);
  g.kind_ = kind;
  for (auto& [degree, set] : nonzero) g.support_.push_back(degree);

  // Direct-sum check by enumerating the product of the support components.
  const std::size_t k = g.support_.size();
  std::vector<std::vector<Elem>> lists;
  for (Degree d : g.support_) {
    std::vector<Elem> l;
    for (auto a : nonzero.at(d).indices())
      if (a != R.zero()) l.push_back(static_cast<Elem>(a));
    l.insert(l.begin(), R.zero());
    lists.push_back(std::move(l));
  }
  std::vector<std::vector<HomogeneousPart>> decomposition(n);
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> digit(k, 0);
  while (true) {
    Elem sum = R.zero();
    for (std::size_t i = 0; i < k; ++i) sum = R.add(sum, lists[i][digit[i]]);
    if (reached[sum]) {
      throw Error(ErrorKind::NotDirectSum, "element " + R.name(sum) + " has two decompositions");
    }
    reached[sum] = true;
    for (std::size_t i = 0; i < k; ++i)
      if (digit[i] != 0) decomposition[sum].push_back({g.support_[i], lists[i][digit[i]]});
    std::size_t pos = 0;
    while (pos < k && ++digit[pos] == lists[pos].size()) digit[pos++] = 0;
    if (pos == k) break;
  }
  for (Elem x = 0; x < n; ++x)
    if (!reached[x]) throw Error(ErrorKind::NotDirectSum, "element " + R.name(x) + " has no decomposition");

  auto identity_component = nonzero.find(g.group_.identity());
  if (identity_component == nonzero.end() || !identity_component->second.test(R.one()))
    throw Error(ErrorKind::UnityNotInIdentityComponent, "1 is not in the component of degree " +
                                                            g.group_.degree_name(g.group_.identity()));

  for (Degree s : g.support_) {
    for (Degree t : g.support_) {
      const Degree st = g.group_.op(s, t);
      auto target = nonzero.find(st);
      for (Elem a : lists[std::find(g.support_.begin(), g.support_.end(), s) - g.support_.begin()]) {
        for (Elem b : lists[std::find(g.support_.begin(), g.support_.end(), t) - g.support_.begin()]) {
          const Elem ab = R.mul(a, b);
          const bool ok = ab == R.zero() || (target != nonzero.end() && target->second.test(ab));
          if (!ok)
            throw Error(ErrorKind::ProductEscapes, "degrees (" + g.group_.degree_name(s) + "," + g.group_.degree_name(t) +
                                                       "): " + R.name(a) + " * " + R.name(b) + " = " + R.name(ab) +
                                                       " lies outside the component of degree " + g.group_.degree_name(st));
        }
      }
    }
  }

  g.components_ = std::move(nonzero);
  g.offsets_.assign(n + 1, 0);
  for (Elem x = 0; x < n; ++x) {
    g.offsets_[x + 1] = g.offsets_[x] + decomposition[x].size();
    g.parts_.insert(g.parts_.end(), decomposition[x].begin(), decomposition[x].end());
    if (decomposition[x].size() == 1) g.homogeneous_.push_back(x);
  }
  return g;
}

BitSet Grading::component(Degree d) const {
  auto it = components_.find(d);
  if (it != components_.end()) return it->second;
  BitSet zero(ring_->size());
  zero.set(ring_->zero());
  return zero;
}

std::vector<Elem> Grading::component_elements(Degree d) const {
  std::vector<Elem> out;
  for (auto a : component(d).indices()) out.push_back(static_cast<Elem>(a));
  return out;
}

std::optional<Degree> Grading::degree_of(Elem x) const {
  auto parts = decompose(x);
  if (parts.size() != 1) return std::nullopt;
  return parts.front().degree;
}

std::string Grading::describe() const {
  std::string out = group_.description() + "-grading of " + ring_->description() + ", support {";
  for (std::size_t i = 0; i < support_.size(); ++i) out += (i ? "," : "") + group_.degree_name(support_[i]);
  return out + "}";
}

// ---------------------------------------------------------------------------
// Standard gradings

Grading trivial_grading(RingPtr ring, GradeGroup group) {
  std::map<Degree, BitSet> components;
  components.emplace(group.identity(), BitSet::full(ring->size()));
  return Grading::validate(std::move(ring), std::move(group), std::move(components), GradingKind::trivial);
}

Grading explicit_grading(RingPtr ring, GradeGroup group, const std::map<Degree, std::vector<Elem>>& generators) {
  const FiniteRing& R = *ring;
  std::map<Degree, BitSet> components;
  auto plus = [&](Elem a, Elem b) { return R.add(a, b); };
  for (const auto& [degree, gens] : generators) {
    detail::SubgroupBuilder span(R.size(), R.zero());
    for (Elem x : gens) {
      if (x >= R.size()) throw Error(ErrorKind::NotSubgroup, "generator index out of range");
      span.adjoin(x, plus);
    }
    components.emplace(degree, span.members);
  }
  return Grading::validate(std::move(ring), std::move(group), std::move(components));
}

Grading group_ring_grading(RingPtr ring) {
  const Construction& c = ring->construction();
  if (c.kind != ConstructionKind::group_ring || !c.group)
    throw Error(ErrorKind::WrongConstruction, ring->description() + " was not built as a group ring");
  const FiniteGroup& G = *c.group;
  const FiniteRing& B = *c.parts.at(0);
  std::map<Degree, BitSet> components;
  std::size_t place = 1;
  for (std::size_t s = 0; s < G.size(); ++s) {
    BitSet set(ring->size());
    for (Elem b = 0; b < B.size(); ++b) set.set(b * place);
    components.emplace(static_cast<Degree>(s), std::move(set));
    place *= B.size();
  }
  return Grading::validate(std::move(ring), GradeGroup::finite(G), std::move(components), GradingKind::group_ring);
}

Grading idealization_grading(RingPtr ring) {
  const Construction& c = ring->construction();
  if (c.kind != ConstructionKind::idealization || !c.module)
    throw Error(ErrorKind::WrongConstruction, ring->description() + " was not built as an idealization");
  const FiniteRing& R = *c.parts.at(0);
  const FiniteModule& M = *c.module;
  const Elem m_count = static_cast<Elem>(M.size());
  BitSet even(ring->size()), odd(ring->size());
  for (Elem r = 0; r < R.size(); ++r) even.set(r * m_count + M.zero());
  for (Elem m = 0; m < M.size(); ++m) odd.set(R.zero() * m_count + m);
  std::map<Degree, BitSet> components;
  components.emplace(0, std::move(even));
  components.emplace(1, std::move(odd));
  return Grading::validate(std::move(ring), GradeGroup::finite(FiniteGroup::cyclic(2)), std::move(components),
                           GradingKind::idealization);
}

Grading poly_quotient_integer_grading(RingPtr ring) {
  const Construction& c = ring->construction();
  if (c.kind != ConstructionKind::poly_quotient)
    throw Error(ErrorKind::WrongConstruction, ring->description() + " was not built as a polynomial quotient");
  const FiniteRing& B = *c.parts.at(0);
  for (std::size_t i = 0; i + 1 < c.modulus.size(); ++i)
    if (c.modulus[i] != B.zero())
      throw Error(ErrorKind::WrongConstruction, "modulus of " + ring->description() + " is not a pure power of x");
  const std::size_t degree = c.modulus.size() - 1;
  std::map<Degree, BitSet> components;
  std::size_t place = 1;
  for (std::size_t k = 0; k < degree; ++k) {
    BitSet set(ring->size());
    for (Elem b = 0; b < B.size(); ++b) set.set(b * place);
    components.emplace(static_cast<Degree>(k), std::move(set));
    place *= B.size();
  }
  return Grading::validate(std::move(ring), GradeGroup::integers(), std::move(components), GradingKind::x_degree);
}

// ---------------------------------------------------------------------------
// Classification

BitSet component_product(const Grading& g, Degree sigma, Degree tau) {
  const FiniteRing& R = g.ring();
  detail::SubgroupBuilder span(R.size(), R.zero());
  auto plus = [&](Elem a, Elem b) { return R.add(a, b); };
  const auto left = g.component_elements(sigma);
  const auto right = g.component_elements(tau);
  for (Elem a : left)
    for (Elem b : right) span.adjoin(R.mul(a, b), plus);
  return span.members;
}

bool is_sigma_faithful(const Grading& g, Degree sigma) {
  const FiniteRing& R = g.ring();
  const GradeGroup& G = g.group();
  for (Degree tau : g.support()) {
    const auto multipliers = g.component_elements(G.op(sigma, G.inverse(tau)));
    for (Elem x : g.component_elements(tau)) {
      if (x == R.zero()) continue;
      const bool nonzero = std::any_of(multipliers.begin(), multipliers.end(),
                                       [&](Elem r) { return R.mul(r, x) != R.zero(); });
      if (!nonzero) return false;
    }
  }
  return true;
}

bool is_faithful(const Grading& g) {
  if (g.group().is_integers()) return false;
  for (Degree s : g.group().elements())
    if (!is_sigma_faithful(g, s)) return false;
  return true;
}

bool is_strong(const Grading& g) {
  if (g.group().is_integers()) return false;
  const Elem one = g.ring().one();
  for (Degree s : g.group().elements())
    if (!component_product(g, s, g.group().inverse(s)).test(one)) return false;
  return true;
}

bool is_first_strong(const Grading& g) {
  const GradeGroup& G = g.group();
  const auto& support = g.support();
  for (Degree s : support) {
    if (!g.in_support(G.inverse(s))) return false;
    for (Degree t : support)
      if (!g.in_support(G.op(s, t))) return false;
  }
  if (!g.in_support(G.identity())) return false;
  const Elem one = g.ring().one();
  for (Degree s : support)
    if (!component_product(g, s, G.inverse(s)).test(one)) return false;
  return true;
}

GradingClassification classify_grading(const Grading& g) {
  GradingClassification c;
  c.e_faithful = is_sigma_faithful(g, g.identity());
  c.faithful = is_faithful(g);
  c.strong = is_strong(g);
  c.first_strong = is_first_strong(g);
  std::vector<Degree> probe = g.group().elements();
  if (g.group().is_integers()) {
    const Degree lo = g.support().front() - 1, hi = g.support().back() + 1;
    for (Degree d = lo; d <= hi; ++d) probe.push_back(d);
  }
  for (Degree s : probe)
    if (is_sigma_faithful(g, s)) c.faithful_degrees.push_back(s);
  return c;
}

}  // namespace grgraph
