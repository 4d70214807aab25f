#include "grgraph/bitset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace grgraph {

BitSet::BitSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

BitSet BitSet::full(std::size_t width) {
  BitSet s(width);
  for (std::size_t i = 0; i < width; ++i) s.set(i);
  return s;
}

BitSet BitSet::from_indices(std::size_t width, const std::vector<std::size_t>& indices) {
  BitSet s(width);
  for (std::size_t i : indices) {
    if (i >= width) throw std::out_of_range("BitSet index out of range");
    s.set(i);
  }
  return s;
}

std::size_t BitSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitSet::next(std::size_t from) const {
  if (from >= width_) return width_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) return std::min(width_, w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
    if (++w >= words_.size()) return width_;
    word = words_[w];
  }
}

std::vector<std::size_t> BitSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool BitSet::is_subset_of(const BitSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool BitSet::intersects(const BitSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::size_t BitSet::intersection_count(const BitSet& other) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return n;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitSet& BitSet::operator|=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitSet& BitSet::subtract(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool BitSet::canonical_less(const BitSet& a, const BitSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal cardinality: the first differing index decides; the set holding
  // the smaller element comes first.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) != 0;
    }
  }
  return false;
}

std::size_t BitSet::hash() const {
  std::size_t h = 1469598103934665603ull ^ width_;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string BitSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace grgraph
