#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grgraph/group.hpp"

namespace grgraph {

/// Dense element index into a ring's carrier 0..size-1.
using Elem = std::uint32_t;

class FiniteRing;
class FiniteModule;
using RingPtr = std::shared_ptr<const FiniteRing>;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// Resource caps shared by the whole pipeline.
struct Limits {
  std::size_t ring_size = 1024;
  std::size_t ideal_count = 4096;
  std::size_t graph_order = 64;
};

enum class ConstructionKind { tables, cyclic, product, poly_quotient, algebra, group_ring, idealization, subring };

/// How a ring was built. Gradings that depend on the construction
/// (group ring, idealization, x-degree) dispatch on this record.
struct Construction {
  ConstructionKind kind = ConstructionKind::tables;
  std::string description;
  std::vector<RingPtr> parts;         // factors, or the base ring
  std::optional<FiniteGroup> group;   // group_ring
  ModulePtr module;                   // idealization
  std::vector<Elem> modulus;          // poly_quotient: little-endian base coefficients, monic
};

/// A finite associative unital ring given by full operation tables.
/// Immutable once built; every instance has passed exhaustive axiom
/// validation.
class FiniteRing {
 public:
  /// Validates (add, mul) exhaustively and locates zero and one.
  /// Throws Error(InvalidConstruction) with a witness on the first failed axiom.
  static RingPtr from_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul,
                             std::vector<std::string> names, Construction construction);

  std::size_t size() const { return size_; }
  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  bool commutative() const { return commutative_; }

  const std::string& name(Elem a) const { return names_[a]; }
  std::optional<Elem> find(std::string_view name) const;

  const Construction& construction() const { return construction_; }
  const std::string& description() const { return construction_.description; }

  /// Two-sided unit test by table scan.
  bool is_unit(Elem a) const;
  /// True when a^k = 0 for some k.
  bool is_nilpotent(Elem a) const;

 private:
  FiniteRing() = default;

  std::size_t size_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  bool commutative_ = true;
  std::vector<std::string> names_;
  Construction construction_;
};

/// A finite left module over a FiniteRing.
class FiniteModule {
 public:
  static ModulePtr from_tables(RingPtr ring, std::size_t size, std::vector<Elem> add, std::vector<Elem> action,
                               std::vector<std::string> names, std::string description);

  /// R as a module over itself.
  static ModulePtr regular(RingPtr ring);
  /// R / L for the left ideal L generated by `generators`.
  static ModulePtr quotient(RingPtr ring, const std::vector<Elem>& generators);
  static ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t size() const { return size_; }
  Elem add(Elem m, Elem n) const { return add_[m * size_ + n]; }
  Elem act(Elem r, Elem m) const { return action_[r * size_ + m]; }
  Elem neg(Elem m) const { return neg_[m]; }
  Elem zero() const { return zero_; }
  const std::string& name(Elem m) const { return names_[m]; }
  const std::string& description() const { return description_; }

 private:
  FiniteModule() = default;

  RingPtr ring_;
  std::size_t size_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> action_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  std::vector<std::string> names_;
  std::string description_;
};

/// Validate an abelian group table on 0..n-1; returns the identity or a
/// failure description.
struct AbelianCheck {
  std::optional<Elem> zero;
  std::vector<Elem> neg;
  std::string failure;
};
AbelianCheck check_abelian_group(std::size_t n, const std::vector<Elem>& add);

}  // namespace grgraph
