#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grgraph/bitset.hpp"
#include "grgraph/grading.hpp"
#include "grgraph/ring.hpp"

namespace grgraph {

inline constexpr std::size_t kDefaultIdealCap = 4096;

/// A left ideal of a specific ring, as a membership bit vector over element
/// indices. `graded` is filled in when the ideal was tested against a grading.
struct IdealSet {
  BitSet members;
  std::optional<bool> graded;

  std::size_t size() const { return members.count(); }
  bool contains(Elem x) const { return members.test(x); }
  bool is_zero() const { return members.count() == 1; }
  bool is_whole() const { return members.count() == members.width(); }
  bool is_nontrivial_proper() const { return !is_zero() && !is_whole(); }
  std::vector<Elem> elements() const;

  bool operator==(const IdealSet& other) const { return members == other.members; }
};

/// Canonical order: cardinality, then ascending member lists lexicographically.
bool canonical_less(const IdealSet& a, const IdealSet& b);
void sort_canonical(std::vector<IdealSet>& family);

/// Additive subgroup generated by `generators`.
BitSet additive_span(const FiniteRing& ring, const std::vector<Elem>& generators);

/// Smallest left ideal containing `generators`: the sum of the principal
/// left ideals R*g.
IdealSet generated_left_ideal(const FiniteRing& ring, const std::vector<Elem>& generators);

/// All left ideals, {0} and R included, in canonical order. Throws
/// IdealCountLimit when the lattice grows past `limit`.
std::vector<IdealSet> enumerate_left_ideals(const FiniteRing& ring, std::size_t limit = kDefaultIdealCap);

/// All graded left ideals (extension by homogeneous elements only), each
/// verified graded, in canonical order.
std::vector<IdealSet> enumerate_graded_left_ideals(const Grading& g, std::size_t limit = kDefaultIdealCap);

/// Every homogeneous component of every member is a member.
bool is_graded(const Grading& g, const IdealSet& ideal);

/// Is `set` a left ideal (contains 0, closed under +, -, and left multiplication)?
bool is_left_ideal(const FiniteRing& ring, const BitSet& set);

IdealSet ideal_sum(const FiniteRing& ring, const IdealSet& a, const IdealSet& b);
IdealSet ideal_intersect(const IdealSet& a, const IdealSet& b);
/// Left ideal generated by all products a*b.
IdealSet ideal_product(const FiniteRing& ring, const IdealSet& a, const IdealSet& b);
/// power(I, 0) = R.
IdealSet ideal_power(const FiniteRing& ring, const IdealSet& ideal, unsigned k);
IdealSet zero_ideal(const FiniteRing& ring);
IdealSet whole_ring(const FiniteRing& ring);

/// Drops {0} and R, keeping order.
std::vector<IdealSet> nontrivial_proper(const std::vector<IdealSet>& family);

/// Predicates relative to an explicit family of nontrivial proper ideals.
bool is_minimal(const IdealSet& ideal, const std::vector<IdealSet>& family);
bool is_maximal(const IdealSet& ideal, const std::vector<IdealSet>& family);
bool is_essential(const IdealSet& ideal, const std::vector<IdealSet>& family);

/// Every nonzero homogeneous element is a unit.
bool is_graded_division(const Grading& g);
/// Commutative graded division ring.
bool is_graded_field(const Grading& g);
/// Commutative, no nonzero homogeneous zero-divisors.
bool is_graded_domain(const Grading& g);
/// No nonzero homogeneous nilpotent element.
bool is_graded_reduced(const Grading& g);

/// Unique maximal member of the family; with an empty family the zero ideal
/// is the unique maximal proper ideal, so the answer is true.
bool is_graded_local(const std::vector<IdealSet>& graded_family);

/// A pair I, J of the family with I + J = R and I ∩ J = {0}.
struct IdealPair {
  std::size_t first;
  std::size_t second;
};
std::optional<IdealPair> find_complementary_pair(const FiniteRing& ring, const std::vector<IdealSet>& family);
bool is_graded_indecomposable(const FiniteRing& ring, const std::vector<IdealSet>& graded_family);

/// Size of a smallest generating set drawn from the homogeneous members of
/// `ideal`, searched up to `max_size`; nullopt if none that small exists.
std::optional<std::size_t> min_homogeneous_generators(const Grading& g, const IdealSet& ideal, std::size_t max_size);

/// Some single element generates the ideal.
bool is_principal(const FiniteRing& ring, const IdealSet& ideal);

/// "(2)", "(x, y)", "0". Greedy generating set; homogeneous generators when a
/// grading is given and the ideal is graded.
std::string describe_ideal(const FiniteRing& ring, const IdealSet& ideal, const Grading* g = nullptr);

}  // namespace grgraph
