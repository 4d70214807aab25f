#include "grgraph/ideals.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "grgraph/errors.hpp"
#include "span.hpp"

namespace grgraph {

namespace {

using detail::SubgroupBuilder;

/// H + R*a for a left ideal H.
SubgroupBuilder extend_by_principal(const FiniteRing& R, SubgroupBuilder h, Elem a) {
  auto plus = [&](Elem x, Elem y) { return R.add(x, y); };
  for (Elem r = 0; r < R.size(); ++r) h.adjoin(R.mul(r, a), plus);
  return h;
}

IdealSet to_ideal(const SubgroupBuilder& b) { return IdealSet{b.members, std::nullopt}; }

SubgroupBuilder builder_of(const FiniteRing& R, const IdealSet& ideal) {
  std::vector<Elem> list;
  list.push_back(R.zero());
  ideal.members.for_each([&](std::size_t x) {
    if (x != R.zero()) list.push_back(static_cast<Elem>(x));
  });
  return SubgroupBuilder(ideal.members, std::move(list));
}

/// Iterated extension from {0}: every left ideal of a finite ring is a finite
/// sum of principal left ideals, so closing I + R*a over all known I and all
/// candidates a reaches the whole lattice. Candidates from one coset of I give
/// the same extension, so one representative per coset is tried.
std::vector<IdealSet> enumerate_by_extension(const FiniteRing& R, const std::vector<Elem>& candidates,
                                             std::size_t limit) {
  std::vector<SubgroupBuilder> found;
  std::unordered_set<BitSet, BitSetHash> seen;
  found.emplace_back(R.size(), R.zero());
  seen.insert(found.back().members);

  for (std::size_t i = 0; i < found.size(); ++i) {
    BitSet covered = found[i].members;
    for (Elem a : candidates) {
      if (covered.test(a)) continue;
      for (Elem l : found[i].list) covered.set(R.add(a, l));
      SubgroupBuilder next = extend_by_principal(R, found[i], a);
      if (seen.insert(next.members).second) {
        if (found.size() >= limit)
          throw Error(ErrorKind::IdealCountLimit, "more than " + std::to_string(limit) + " ideals in " + R.description());
        found.push_back(std::move(next));
      }
    }
  }

  std::vector<IdealSet> out;
  out.reserve(found.size());
  for (const auto& b : found) out.push_back(to_ideal(b));
  sort_canonical(out);
  return out;
}

}  // namespace

std::vector<Elem> IdealSet::elements() const {
  std::vector<Elem> out;
  members.for_each([&](std::size_t x) { out.push_back(static_cast<Elem>(x)); });
  return out;
}

bool canonical_less(const IdealSet& a, const IdealSet& b) { return BitSet::canonical_less(a.members, b.members); }

void sort_canonical(std::vector<IdealSet>& family) {
  std::sort(family.begin(), family.end(), [](const IdealSet& a, const IdealSet& b) { return canonical_less(a, b); });
}

BitSet additive_span(const FiniteRing& ring, const std::vector<Elem>& generators) {
  SubgroupBuilder b(ring.size(), ring.zero());
  auto plus = [&](Elem x, Elem y) { return ring.add(x, y); };
  for (Elem g : generators) b.adjoin(g, plus);
  return b.members;
}

IdealSet generated_left_ideal(const FiniteRing& ring, const std::vector<Elem>& generators) {
  SubgroupBuilder b(ring.size(), ring.zero());
  for (Elem g : generators) b = extend_by_principal(ring, std::move(b), g);
  return to_ideal(b);
}

std::vector<IdealSet> enumerate_left_ideals(const FiniteRing& ring, std::size_t limit) {
  std::vector<Elem> all(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) all[x] = x;
  auto ideals = enumerate_by_extension(ring, all, limit);
  for (auto& I : ideals) I.graded.reset();
  return ideals;
}

std::vector<IdealSet> enumerate_graded_left_ideals(const Grading& g, std::size_t limit) {
  auto ideals = enumerate_by_extension(g.ring(), g.homogeneous_elements(), limit);
  for (auto& I : ideals) {
    if (!is_graded(g, I))
      throw Error(ErrorKind::NotDirectSum, "extension by homogeneous elements produced a non-graded ideal " +
                                               I.members.to_string());
    I.graded = true;
  }
  return ideals;
}

bool is_graded(const Grading& g, const IdealSet& ideal) {
  bool graded = true;
  ideal.members.for_each([&](std::size_t x) {
    if (!graded) return;
    for (const auto& part : g.decompose(static_cast<Elem>(x)))
      if (!ideal.members.test(part.value)) {
        graded = false;
        return;
      }
  });
  return graded;
}

bool is_left_ideal(const FiniteRing& ring, const BitSet& set) {
  if (!set.test(ring.zero())) return false;
  const auto members = set.indices();
  for (auto a : members) {
    const Elem ea = static_cast<Elem>(a);
    if (!set.test(ring.neg(ea))) return false;
    for (auto b : members)
      if (!set.test(ring.add(ea, static_cast<Elem>(b)))) return false;
    for (Elem r = 0; r < ring.size(); ++r)
      if (!set.test(ring.mul(r, ea))) return false;
  }
  return true;
}

IdealSet ideal_sum(const FiniteRing& ring, const IdealSet& a, const IdealSet& b) {
  SubgroupBuilder s = builder_of(ring, a);
  auto plus = [&](Elem x, Elem y) { return ring.add(x, y); };
  b.members.for_each([&](std::size_t x) { s.adjoin(static_cast<Elem>(x), plus); });
  return to_ideal(s);
}

IdealSet ideal_intersect(const IdealSet& a, const IdealSet& b) { return IdealSet{a.members & b.members, std::nullopt}; }

IdealSet ideal_product(const FiniteRing& ring, const IdealSet& a, const IdealSet& b) {
  BitSet products(ring.size());
  a.members.for_each([&](std::size_t x) {
    b.members.for_each([&](std::size_t y) { products.set(ring.mul(static_cast<Elem>(x), static_cast<Elem>(y))); });
  });
  std::vector<Elem> gens;
  products.for_each([&](std::size_t x) { gens.push_back(static_cast<Elem>(x)); });
  return generated_left_ideal(ring, gens);
}

IdealSet ideal_power(const FiniteRing& ring, const IdealSet& ideal, unsigned k) {
  if (k == 0) return whole_ring(ring);
  IdealSet p = ideal;
  for (unsigned i = 1; i < k; ++i) p = ideal_product(ring, p, ideal);
  return p;
}

IdealSet zero_ideal(const FiniteRing& ring) {
  BitSet z(ring.size());
  z.set(ring.zero());
  return IdealSet{std::move(z), std::nullopt};
}

IdealSet whole_ring(const FiniteRing& ring) { return IdealSet{BitSet::full(ring.size()), std::nullopt}; }

std::vector<IdealSet> nontrivial_proper(const std::vector<IdealSet>& family) {
  std::vector<IdealSet> out;
  for (const auto& I : family)
    if (I.is_nontrivial_proper()) out.push_back(I);
  return out;
}

bool is_minimal(const IdealSet& ideal, const std::vector<IdealSet>& family) {
  return std::none_of(family.begin(), family.end(), [&](const IdealSet& J) {
    return J.members != ideal.members && J.members.is_subset_of(ideal.members);
  });
}

bool is_maximal(const IdealSet& ideal, const std::vector<IdealSet>& family) {
  return std::none_of(family.begin(), family.end(), [&](const IdealSet& J) {
    return J.members != ideal.members && ideal.members.is_subset_of(J.members);
  });
}

bool is_essential(const IdealSet& ideal, const std::vector<IdealSet>& family) {
  return std::all_of(family.begin(), family.end(),
                     [&](const IdealSet& J) { return ideal.members.intersection_count(J.members) > 1; });
}

bool is_graded_division(const Grading& g) {
  const FiniteRing& R = g.ring();
  const auto& h = g.homogeneous_elements();
  return std::all_of(h.begin(), h.end(), [&](Elem x) { return R.is_unit(x); });
}

bool is_graded_field(const Grading& g) { return g.ring().commutative() && is_graded_division(g); }

bool is_graded_domain(const Grading& g) {
  const FiniteRing& R = g.ring();
  if (!R.commutative()) return false;
  for (Elem a : g.homogeneous_elements())
    for (Elem b : g.homogeneous_elements())
      if (R.mul(a, b) == R.zero()) return false;
  return true;
}

bool is_graded_reduced(const Grading& g) {
  const auto& h = g.homogeneous_elements();
  return std::none_of(h.begin(), h.end(), [&](Elem x) { return g.ring().is_nilpotent(x); });
}

bool is_graded_local(const std::vector<IdealSet>& graded_family) {
  if (graded_family.empty()) return true;
  std::size_t maximal = 0;
  for (const auto& I : graded_family)
    if (is_maximal(I, graded_family)) ++maximal;
  return maximal == 1;
}

std::optional<IdealPair> find_complementary_pair(const FiniteRing& ring, const std::vector<IdealSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].size() * family[j].size() != ring.size()) continue;
      if (family[i].members.intersection_count(family[j].members) == 1) return IdealPair{i, j};
    }
  }
  return std::nullopt;
}

bool is_graded_indecomposable(const FiniteRing& ring, const std::vector<IdealSet>& graded_family) {
  return !find_complementary_pair(ring, graded_family).has_value();
}

std::optional<std::size_t> min_homogeneous_generators(const Grading& g, const IdealSet& ideal, std::size_t max_size) {
  const FiniteRing& R = g.ring();
  if (ideal.is_zero()) return 0;
  std::vector<Elem> candidates;
  for (Elem h : g.homogeneous_elements())
    if (ideal.contains(h)) candidates.push_back(h);

  std::function<bool(std::size_t, const SubgroupBuilder&, std::size_t)> search =
      [&](std::size_t start, const SubgroupBuilder& current, std::size_t budget) -> bool {
    if (current.members == ideal.members) return true;
    if (budget == 0) return false;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (current.members.test(candidates[i])) continue;
      if (search(i + 1, extend_by_principal(R, current, candidates[i]), budget - 1)) return true;
    }
    return false;
  };
  for (std::size_t k = 1; k <= max_size; ++k)
    if (search(0, SubgroupBuilder(R.size(), R.zero()), k)) return k;
  return std::nullopt;
}

bool is_principal(const FiniteRing& ring, const IdealSet& ideal) {
  bool found = false;
  ideal.members.for_each([&](std::size_t x) {
    if (!found) found = generated_left_ideal(ring, {static_cast<Elem>(x)}).members == ideal.members;
  });
  return found;
}

std::string describe_ideal(const FiniteRing& ring, const IdealSet& ideal, const Grading* g) {
  if (ideal.is_zero()) return "0";
  if (ideal.is_whole()) return "R";
  std::vector<Elem> candidates;
  if (g && is_graded(*g, ideal)) {
    for (Elem h : g->homogeneous_elements())
      if (ideal.contains(h)) candidates.push_back(h);
  } else {
    candidates = ideal.elements();
  }
  SubgroupBuilder current(ring.size(), ring.zero());
  std::string out = "(";
  bool first = true;
  for (Elem c : candidates) {
    if (current.members == ideal.members) break;
    if (current.members.test(c)) continue;
    current = extend_by_principal(ring, std::move(current), c);
    out += (first ? "" : ", ") + ring.name(c);
    first = false;
  }
  return out + ")";
}

}  // namespace grgraph
