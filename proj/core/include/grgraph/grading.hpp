#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grgraph/bitset.hpp"
#include "grgraph/group.hpp"
#include "grgraph/ring.hpp"

namespace grgraph {

/// A degree: a group index for finite grade groups, an integer for Z.
using Degree = std::int64_t;

/// The grading group: a finite group, or the integers with their usual order.
class GradeGroup {
 public:
  static GradeGroup finite(FiniteGroup group);
  static GradeGroup integers();

  bool is_integers() const { return !group_.has_value(); }
  /// Throws Error(NotIntegerGraded) style misuse guard if integers.
  const FiniteGroup& finite_group() const;

  Degree identity() const;
  Degree op(Degree a, Degree b) const;
  Degree inverse(Degree a) const;
  bool contains(Degree d) const;

  /// All degrees of a finite group, in index order. Empty for Z.
  std::vector<Degree> elements() const;

  std::string degree_name(Degree d) const;
  std::optional<Degree> parse_degree(const std::string& text) const;
  std::string description() const;

 private:
  std::optional<FiniteGroup> group_;
};

enum class GradingKind { trivial, group_ring, idealization, x_degree, explicit_components };

struct HomogeneousPart {
  Degree degree;
  Elem value;
  bool operator==(const HomogeneousPart&) const = default;
};

/// A validated G-grading R = (+) R_sigma of a finite ring.
///
/// Validation enumerates the product of the support components once; that
/// enumeration is both the direct-sum proof and the decomposition table, so
/// decompose() is a lookup.
class Grading {
 public:
  /// Throws NotSubgroup, NotDirectSum, ProductEscapes or
  /// UnityNotInIdentityComponent with a witness.
  static Grading validate(RingPtr ring, GradeGroup group, std::map<Degree, BitSet> components,
                          GradingKind kind = GradingKind::explicit_components);

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const GradeGroup& group() const { return group_; }
  GradingKind kind() const { return kind_; }
  Degree identity() const { return group_.identity(); }

  /// Degrees with a nonzero component, ascending.
  const std::vector<Degree>& support() const { return support_; }
  bool in_support(Degree d) const { return components_.count(d) != 0; }
  /// R_d; the zero subgroup outside the support.
  BitSet component(Degree d) const;
  /// Member list of R_d, ascending (just {0} outside the support).
  std::vector<Elem> component_elements(Degree d) const;

  /// Nonzero homogeneous parts of x, ascending by degree; empty for x = 0.
  std::span<const HomogeneousPart> decompose(Elem x) const {
    return {parts_.data() + offsets_[x], parts_.data() + offsets_[x + 1]};
  }
  /// Degree of a nonzero homogeneous element.
  std::optional<Degree> degree_of(Elem x) const;
  bool is_homogeneous(Elem x) const { return offsets_[x + 1] - offsets_[x] <= 1; }
  /// Nonzero homogeneous elements, ascending index.
  const std::vector<Elem>& homogeneous_elements() const { return homogeneous_; }

  std::string describe() const;

 private:
  Grading() = default;

  RingPtr ring_;
  GradeGroup group_ = GradeGroup::integers();
  GradingKind kind_ = GradingKind::explicit_components;
  std::map<Degree, BitSet> components_;
  std::vector<Degree> support_;
  std::vector<HomogeneousPart> parts_;
  std::vector<std::size_t> offsets_;
  std::vector<Elem> homogeneous_;
};

/// R_e = R, every other component zero.
Grading trivial_grading(RingPtr ring, GradeGroup group);
/// Components given as additive generators per degree.
Grading explicit_grading(RingPtr ring, GradeGroup group, const std::map<Degree, std::vector<Elem>>& generators);
/// (R[G])_sigma = R sigma. Throws WrongConstruction.
Grading group_ring_grading(RingPtr ring);
/// C_2-grading R(+)0 at degree 0 and 0(+)M at degree 1. Throws WrongConstruction.
Grading idealization_grading(RingPtr ring);
/// Z-grading R_k = base x^k of base[x]/(x^m). Throws WrongConstruction.
Grading poly_quotient_integer_grading(RingPtr ring);

/// The additive subgroup generated by { a*b : a in R_sigma, b in R_tau }.
BitSet component_product(const Grading& g, Degree sigma, Degree tau);

/// R_{sigma tau^-1} x_tau != 0 for every nonzero homogeneous x_tau.
bool is_sigma_faithful(const Grading& g, Degree sigma);
/// sigma-faithful for every sigma in G. Always false over Z: R_k x = 0 for
/// k outside the finite support.
bool is_faithful(const Grading& g);
/// 1 in R_sigma R_sigma^-1 for all sigma in G. Always false over Z.
bool is_strong(const Grading& g);
/// supp is a subgroup and 1 in R_sigma R_sigma^-1 on it.
bool is_first_strong(const Grading& g);

struct GradingClassification {
  bool e_faithful = false;
  bool faithful = false;
  bool strong = false;
  bool first_strong = false;
  std::vector<Degree> faithful_degrees;  // finite groups: all sigma; Z: probed window around the support
};
GradingClassification classify_grading(const Grading& g);

}  // namespace grgraph
