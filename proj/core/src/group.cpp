#include "grgraph/group.hpp"

#include <algorithm>

#include "grgraph/errors.hpp"

namespace grgraph {

namespace {

std::string power_name(std::string_view base, std::size_t k) {
  if (k == 0) return "e";
  if (k == 1) return std::string(base);
  return std::string(base) + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Index>> table,
                                    std::vector<std::string> names, std::string description) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidConstruction, "group table is empty");
  FiniteGroup g;
  g.size_ = n;
  g.table_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::InvalidConstruction, "group table row " + std::to_string(a) + " has wrong length");
    for (Index v : table[a]) {
      if (v >= n) throw Error(ErrorKind::InvalidConstruction, "group table entry out of range in row " + std::to_string(a));
      g.table_.push_back(v);
    }
  }

  std::optional<Index> identity;
  for (Index e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = g.op(e, a) == a && g.op(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::InvalidConstruction, "group table has no identity");
  g.identity_ = *identity;

  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw Error(ErrorKind::InvalidConstruction, "group operation not associative at (" + std::to_string(a) +
                                                          "," + std::to_string(b) + "," + std::to_string(c) + ")");

  g.inverse_.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    bool found = false;
    for (Index b = 0; b < n && !found; ++b) {
      if (g.op(a, b) == g.identity_ && g.op(b, a) == g.identity_) {
        g.inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::InvalidConstruction, "element " + std::to_string(a) + " has no inverse");
  }

  for (Index a = 0; a < n && g.abelian_; ++a)
    for (Index b = 0; b < n && g.abelian_; ++b) g.abelian_ = g.op(a, b) == g.op(b, a);

  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back(a == g.identity_ ? "e" : "g" + std::to_string(a));
  }
  if (names.size() != n) throw Error(ErrorKind::InvalidConstruction, "group name list has wrong length");
  g.names_ = std::move(names);
  g.description_ = std::move(description);
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidConstruction, "cyclic group order must be positive");
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(power_name("g", a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Index>((a + b) % n);
  }
  return from_table(std::move(table), std::move(names), "C_" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidConstruction, "dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  // (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
  auto encode = [n](std::size_t flip, std::size_t rot) { return static_cast<Index>(flip * n + rot); };
  std::vector<std::vector<Index>> table(order, std::vector<Index>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / n, i = x % n;
    names[x] = a == 0 ? power_name("r", i) : (i == 0 ? std::string("s") : "s" + power_name("r", i));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y / n, j = y % n;
      const std::size_t rot = ((b == 0 ? i : (n - i) % n) + j) % n;
      table[x][y] = encode((a + b) % 2, rot);
    }
  }
  return from_table(std::move(table), std::move(names), "D_" + std::to_string(n));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> names(n);
  for (Index x = 0; x < n; ++x) {
    const Index xa = x / static_cast<Index>(b.size()), xb = x % static_cast<Index>(b.size());
    names[x] = "(" + a.name(xa) + "," + b.name(xb) + ")";
    for (Index y = 0; y < n; ++y) {
      const Index ya = y / static_cast<Index>(b.size()), yb = y % static_cast<Index>(b.size());
      table[x][y] = a.op(xa, ya) * static_cast<Index>(b.size()) + b.op(xb, yb);
    }
  }
  return from_table(std::move(table), std::move(names), a.description() + "x" + b.description());
}

std::optional<FiniteGroup::Index> FiniteGroup::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Index>(it - names_.begin());
}

}  // namespace grgraph
