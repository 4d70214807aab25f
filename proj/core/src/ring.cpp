#include "grgraph/ring.hpp"

#include <algorithm>

#include "grgraph/errors.hpp"

namespace grgraph {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

AbelianCheck check_abelian_group(std::size_t n, const std::vector<Elem>& add) {
  AbelianCheck out;
  if (add.size() != n * n) {
    out.failure = "addition table has wrong size";
    return out;
  }
  for (Elem v : add) {
    if (v >= n) {
      out.failure = "addition table entry out of range";
      return out;
    }
  }
  auto op = [&](Elem a, Elem b) { return add[a * n + b]; };
  for (Elem z = 0; z < n && !out.zero; ++z) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = op(z, a) == a;
    if (ok) out.zero = z;
  }
  if (!out.zero) {
    out.failure = "addition has no neutral element";
    return out;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a)) {
        out.failure = "addition not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        out.zero.reset();
        return out;
      }
      const Elem ab = op(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (op(ab, c) != op(a, op(b, c))) {
          out.failure = "addition not associative at " + triple(a, b, c);
          out.zero.reset();
          return out;
        }
      }
    }
  }
  out.neg.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) {
      if (op(a, b) == *out.zero) {
        out.neg[a] = b;
        found = true;
      }
    }
    if (!found) {
      out.failure = "element " + std::to_string(a) + " has no additive inverse";
      out.zero.reset();
      return out;
    }
  }
  return out;
}

RingPtr FiniteRing::from_tables(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul,
                                std::vector<std::string> names, Construction construction) {
  if (size < 2) throw Error(ErrorKind::InvalidConstruction, "a unital ring with 1 != 0 needs at least 2 elements");
  AbelianCheck group = check_abelian_group(size, add);
  if (!group.zero) throw Error(ErrorKind::InvalidConstruction, group.failure);
  if (mul.size() != size * size) throw Error(ErrorKind::InvalidConstruction, "multiplication table has wrong size");
  for (Elem v : mul)
    if (v >= size) throw Error(ErrorKind::InvalidConstruction, "multiplication table entry out of range");

  const std::size_t n = size;
  auto plus = [&](Elem a, Elem b) { return add[a * n + b]; };
  auto times = [&](Elem a, Elem b) { return mul[a * n + b]; };

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = times(a, b);
      const Elem* row_ab = &mul[ab * n];
      const Elem* row_a = &mul[a * n];
      const Elem* row_b = &mul[b * n];
      for (Elem c = 0; c < n; ++c) {
        if (row_ab[c] != row_a[row_b[c]])
          throw Error(ErrorKind::InvalidConstruction, "multiplication not associative at " + triple(a, b, c));
        const Elem bc_sum = plus(b, c);
        if (row_a[bc_sum] != plus(ab, row_a[c]))
          throw Error(ErrorKind::InvalidConstruction, "left distributivity fails at " + triple(a, b, c));
        if (times(bc_sum, a) != plus(times(b, a), times(c, a)))
          throw Error(ErrorKind::InvalidConstruction, "right distributivity fails at " + triple(a, b, c));
      }
    }
  }

  std::optional<Elem> one;
  for (Elem u = 0; u < n && !one; ++u) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = times(u, a) == a && times(a, u) == a;
    if (ok) one = u;
  }
  if (!one) throw Error(ErrorKind::InvalidConstruction, "multiplication has no two-sided identity");
  if (*one == *group.zero) throw Error(ErrorKind::InvalidConstruction, "unity equals zero");

  if (names.empty())
    for (std::size_t a = 0; a < n; ++a) names.push_back(std::to_string(a));
  if (names.size() != n) throw Error(ErrorKind::InvalidConstruction, "element name list has wrong length");
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(ErrorKind::InvalidConstruction, "duplicate element name '" + *dup + "'");
  }

  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->size_ = n;
  ring->add_ = std::move(add);
  ring->mul_ = std::move(mul);
  ring->neg_ = std::move(group.neg);
  ring->zero_ = *group.zero;
  ring->one_ = *one;
  ring->names_ = std::move(names);
  ring->construction_ = std::move(construction);
  for (Elem a = 0; a < n && ring->commutative_; ++a)
    for (Elem b = a + 1; b < n && ring->commutative_; ++b) ring->commutative_ = ring->mul(a, b) == ring->mul(b, a);
  return ring;
}

std::optional<Elem> FiniteRing::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

bool FiniteRing::is_unit(Elem a) const {
  for (Elem b = 0; b < size_; ++b)
    if (mul(a, b) == one_ && mul(b, a) == one_) return true;
  return false;
}

bool FiniteRing::is_nilpotent(Elem a) const {
  Elem p = a;
  for (std::size_t k = 0; k <= size_; ++k) {
    if (p == zero_) return true;
    p = mul(p, a);
  }
  return false;
}

}  // namespace grgraph
