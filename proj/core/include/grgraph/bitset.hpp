#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace grgraph {

/// Fixed-width dynamic bit vector. Used for element sets (ideals, graded
/// components) and for vertex sets in the graph algorithms.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t width);

  static BitSet full(std::size_t width);
  static BitSet from_indices(std::size_t width, const std::vector<std::size_t>& indices);

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }

  /// Index of the lowest set bit at or after `from`, or width() if none.
  std::size_t next(std::size_t from) const;
  std::size_t first() const { return next(0); }

  std::vector<std::size_t> indices() const;

  bool is_subset_of(const BitSet& other) const;
  bool intersects(const BitSet& other) const;
  std::size_t intersection_count(const BitSet& other) const;

  BitSet& operator&=(const BitSet& other);
  BitSet& operator|=(const BitSet& other);
  BitSet& subtract(const BitSet& other);
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }

  bool operator==(const BitSet& other) const = default;

  /// Orders by cardinality, then by the ascending member lists compared
  /// lexicographically. This is the canonical ideal order.
  static bool canonical_less(const BitSet& a, const BitSet& b);

  std::size_t hash() const;

  /// "{0,4,8}"
  std::string to_string() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int bit = __builtin_ctzll(word);
        f(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const { return s.hash(); }
};

}  // namespace grgraph
