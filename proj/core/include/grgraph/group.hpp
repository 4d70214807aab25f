#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grgraph {

/// A finite group on indices 0..size-1 given by its Cayley table. Group
/// axioms are checked exhaustively on construction.
class FiniteGroup {
 public:
  using Index = std::uint32_t;

  /// Throws Error(InvalidConstruction) with a witness if the table is not a group.
  static FiniteGroup from_table(std::vector<std::vector<Index>> table,
                                std::vector<std::string> names = {},
                                std::string description = "table group");

  static FiniteGroup cyclic(std::size_t n);
  /// Dihedral group of order 2n: indices 0..n-1 are rotations r^i, n..2n-1 are s r^i.
  static FiniteGroup dihedral(std::size_t n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t size() const { return size_; }
  Index op(Index a, Index b) const { return table_[a * size_ + b]; }
  Index identity() const { return identity_; }
  Index inverse(Index a) const { return inverse_[a]; }
  bool is_abelian() const { return abelian_; }

  const std::string& name(Index a) const { return names_[a]; }
  std::optional<Index> find(std::string_view name) const;
  const std::string& description() const { return description_; }

 private:
  FiniteGroup() = default;

  std::size_t size_ = 0;
  std::vector<Index> table_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
  bool abelian_ = true;
  std::vector<std::string> names_;
  std::string description_;
};

}  // namespace grgraph
