#include "grgraph/constructions.hpp"

#include <algorithm>

#include "grgraph/errors.hpp"

namespace grgraph {

namespace {

std::size_t checked_size(std::size_t base, std::size_t exponent, std::size_t cap, const std::string& what) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (total > cap / std::max<std::size_t>(base, 1))
      throw Error(ErrorKind::SizeLimit, what + " exceeds the ring size cap of " + std::to_string(cap));
    total *= base;
  }
  return total;
}

bool needs_parens(const std::string& name) {
  return name.find_first_of("+ ") != std::string::npos;
}

/// Formats sum c_i b_i where b_0 is the unit; `coef_names[i]` is empty for zero terms.
std::string format_sum(const std::vector<std::string>& coef_names, const std::vector<bool>& coef_is_one,
                       const std::vector<std::string>& basis_names, std::size_t unit_index) {
  std::string out;
  for (std::size_t i = 0; i < coef_names.size(); ++i) {
    if (coef_names[i].empty()) continue;
    std::string term;
    if (i == unit_index) {
      term = coef_names[i];
    } else if (coef_is_one[i]) {
      term = basis_names[i];
    } else {
      term = (needs_parens(coef_names[i]) ? "(" + coef_names[i] + ")" : coef_names[i]) + basis_names[i];
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

/// Little-endian digits of x in base b, `len` of them.
std::vector<Elem> digits(std::size_t x, std::size_t b, std::size_t len) {
  std::vector<Elem> d(len);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<Elem>(x % b);
    x /= b;
  }
  return d;
}

std::size_t undigits(const std::vector<Elem>& d, std::size_t b) {
  std::size_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * b + d[i];
  return x;
}

}  // namespace

RingPtr make_cyclic_ring(std::size_t n, std::size_t cap) {
  if (n < 2) throw Error(ErrorKind::InvalidConstruction, "Z_n needs n >= 2 (got " + std::to_string(n) + ")");
  if (n > cap) throw Error(ErrorKind::SizeLimit, "Z_" + std::to_string(n) + " exceeds the ring size cap");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  Construction c;
  c.kind = ConstructionKind::cyclic;
  c.description = "Z_" + std::to_string(n);
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), {}, std::move(c));
}

RingPtr direct_product(const RingPtr& r, const RingPtr& s, std::size_t cap) {
  const std::size_t nr = r->size(), ns = s->size();
  if (nr > cap / ns) throw Error(ErrorKind::SizeLimit, "product " + r->description() + " x " + s->description() +
                                                           " exceeds the ring size cap of " + std::to_string(cap));
  const std::size_t n = nr * ns;
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xr = x / ns, xs = x % ns;
    names[x] = "(" + r->name(xr) + "," + s->name(xs) + ")";
    for (Elem y = 0; y < n; ++y) {
      const Elem yr = y / ns, ys = y % ns;
      add[x * n + y] = r->add(xr, yr) * static_cast<Elem>(ns) + s->add(xs, ys);
      mul[x * n + y] = r->mul(xr, yr) * static_cast<Elem>(ns) + s->mul(xs, ys);
    }
  }
  Construction c;
  c.kind = ConstructionKind::product;
  c.description = r->description() + "x" + s->description();
  c.parts = {r, s};
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(c));
}

RingPtr polynomial_quotient(const RingPtr& base, const std::vector<Elem>& modulus, std::size_t cap) {
  const FiniteRing& B = *base;
  if (!B.commutative()) throw Error(ErrorKind::InvalidConstruction, "polynomial quotient needs a commutative base");
  if (modulus.size() < 2) throw Error(ErrorKind::InvalidConstruction, "modulus must have degree >= 1");
  for (Elem c : modulus)
    if (c >= B.size()) throw Error(ErrorKind::InvalidConstruction, "modulus coefficient out of range");
  if (modulus.back() != B.one()) throw Error(ErrorKind::InvalidConstruction, "modulus is not monic");
  const std::size_t d = modulus.size() - 1;
  const std::size_t b = B.size();
  const std::size_t n = checked_size(b, d, cap, B.description() + "[x]/(deg " + std::to_string(d) + ")");

  std::vector<std::vector<Elem>> coeffs(n);
  for (std::size_t x = 0; x < n; ++x) coeffs[x] = digits(x, b, d);

  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> prod(2 * d);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<Elem> sum(d);
      for (std::size_t i = 0; i < d; ++i) sum[i] = B.add(coeffs[x][i], coeffs[y][i]);
      add[x * n + y] = static_cast<Elem>(undigits(sum, b));

      std::fill(prod.begin(), prod.end(), B.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = B.add(prod[i + j], B.mul(coeffs[x][i], coeffs[y][j]));
      // x^k = x^(k-d) * x^d and x^d = -(m_0 + ... + m_{d-1} x^(d-1)).
      for (std::size_t k = 2 * d - 1; k-- > d;) {
        const Elem top = prod[k];
        if (top == B.zero()) continue;
        for (std::size_t i = 0; i < d; ++i)
          prod[k - d + i] = B.sub(prod[k - d + i], B.mul(top, modulus[i]));
        prod[k] = B.zero();
      }
      mul[x * n + y] = static_cast<Elem>(undigits(std::vector<Elem>(prod.begin(), prod.begin() + d), b));
    }
  }

  std::vector<std::string> basis(d);
  for (std::size_t i = 0; i < d; ++i) basis[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::string> cn(d);
    std::vector<bool> one(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (coeffs[x][i] != B.zero()) cn[i] = B.name(coeffs[x][i]);
      one[i] = coeffs[x][i] == B.one();
    }
    names[x] = format_sum(cn, one, basis, 0);
  }

  std::string poly;
  {
    std::vector<std::string> cn(d + 1), full_basis(d + 1);
    std::vector<bool> one(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      full_basis[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
      if (modulus[i] != B.zero()) cn[i] = B.name(modulus[i]);
      one[i] = modulus[i] == B.one();
    }
    poly = format_sum(cn, one, full_basis, 0);
  }
  Construction c;
  c.kind = ConstructionKind::poly_quotient;
  c.description = B.description() + "[x]/(" + poly + ")";
  c.parts = {base};
  c.modulus = modulus;
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(c));
}

RingPtr algebra_over_zn(std::size_t n, std::size_t dim, const std::vector<std::vector<std::vector<long>>>& structure,
                        std::vector<std::string> basis_names, std::size_t cap) {
  if (n < 2) throw Error(ErrorKind::InvalidConstruction, "algebra coefficients need Z_n with n >= 2");
  if (dim < 1) throw Error(ErrorKind::InvalidConstruction, "algebra rank must be >= 1");
  if (structure.size() != dim) throw Error(ErrorKind::InvalidConstruction, "structure table must have dim rows");
  auto reduce = [n](long v) { return static_cast<Elem>(((v % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n)); };
  std::vector<std::vector<std::vector<Elem>>> table(dim, std::vector<std::vector<Elem>>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (structure[i].size() != dim) throw Error(ErrorKind::InvalidConstruction, "structure row " + std::to_string(i) + " must have dim entries");
    for (std::size_t j = 0; j < dim; ++j) {
      if (structure[i][j].size() != dim)
        throw Error(ErrorKind::InvalidConstruction, "structure entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                        ") must be a coefficient vector of length dim");
      for (long v : structure[i][j]) table[i][j].push_back(reduce(v));
    }
  }
  if (basis_names.empty()) {
    basis_names.push_back("1");
    for (std::size_t i = 1; i < dim; ++i) basis_names.push_back("e" + std::to_string(i));
  }
  if (basis_names.size() != dim) throw Error(ErrorKind::InvalidConstruction, "basis name list must have dim entries");

  const std::size_t size = checked_size(n, dim, cap, "algebra of rank " + std::to_string(dim) + " over Z_" + std::to_string(n));
  std::vector<std::vector<Elem>> coeffs(size);
  for (std::size_t x = 0; x < size; ++x) coeffs[x] = digits(x, n, dim);

  std::vector<Elem> add(size * size), mul(size * size);
  std::vector<Elem> acc(dim);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t k = 0; k < dim; ++k) acc[k] = static_cast<Elem>((coeffs[x][k] + coeffs[y][k]) % n);
      add[x * size + y] = static_cast<Elem>(undigits(acc, n));
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!coeffs[x][i]) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          const std::size_t c = static_cast<std::size_t>(coeffs[x][i]) * coeffs[y][j] % n;
          if (!c) continue;
          for (std::size_t k = 0; k < dim; ++k) acc[k] = static_cast<Elem>((acc[k] + c * table[i][j][k]) % n);
        }
      }
      mul[x * size + y] = static_cast<Elem>(undigits(acc, n));
    }
  }

  std::vector<std::string> names(size);
  for (std::size_t x = 0; x < size; ++x) {
    std::vector<std::string> cn(dim);
    std::vector<bool> one(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (coeffs[x][i]) cn[i] = std::to_string(coeffs[x][i]);
      one[i] = coeffs[x][i] == 1;
    }
    names[x] = format_sum(cn, one, basis_names, 0);
  }

  std::string basis_list;
  for (std::size_t i = 0; i < dim; ++i) basis_list += (i ? "," : "") + basis_names[i];
  Construction c;
  c.kind = ConstructionKind::algebra;
  c.description = "Z_" + std::to_string(n) + "{" + basis_list + "}";
  RingPtr ring = FiniteRing::from_tables(size, std::move(add), std::move(mul), std::move(names), std::move(c));
  if (ring->one() != 1) throw Error(ErrorKind::InvalidConstruction, "basis element 0 is not the unity");
  return ring;
}

RingPtr group_ring(const RingPtr& base, const FiniteGroup& group, std::size_t cap) {
  const FiniteRing& B = *base;
  const std::size_t b = B.size(), g = group.size();
  const std::size_t n = checked_size(b, g, cap, B.description() + "[" + group.description() + "]");
  std::vector<std::vector<Elem>> coeffs(n);
  for (std::size_t x = 0; x < n; ++x) coeffs[x] = digits(x, b, g);

  std::vector<Elem> add(n * n), mul(n * n), acc(g);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < g; ++i) acc[i] = B.add(coeffs[x][i], coeffs[y][i]);
      add[x * n + y] = static_cast<Elem>(undigits(acc, b));
      std::fill(acc.begin(), acc.end(), B.zero());
      for (FiniteGroup::Index s = 0; s < g; ++s) {
        if (coeffs[x][s] == B.zero()) continue;
        for (FiniteGroup::Index t = 0; t < g; ++t) {
          const auto st = group.op(s, t);
          acc[st] = B.add(acc[st], B.mul(coeffs[x][s], coeffs[y][t]));
        }
      }
      mul[x * n + y] = static_cast<Elem>(undigits(acc, b));
    }
  }

  std::vector<std::string> basis(g);
  for (FiniteGroup::Index s = 0; s < g; ++s) basis[s] = group.name(s);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::string> cn(g);
    std::vector<bool> one(g);
    for (std::size_t i = 0; i < g; ++i) {
      if (coeffs[x][i] != B.zero()) cn[i] = B.name(coeffs[x][i]);
      one[i] = coeffs[x][i] == B.one();
    }
    names[x] = format_sum(cn, one, basis, group.identity());
  }
  Construction c;
  c.kind = ConstructionKind::group_ring;
  c.description = B.description() + "[" + group.description() + "]";
  c.parts = {base};
  c.group = group;
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(c));
}

RingPtr idealization(const RingPtr& base, const ModulePtr& module, std::size_t cap) {
  const FiniteRing& R = *base;
  if (!R.commutative()) throw Error(ErrorKind::InvalidConstruction, "idealization needs a commutative base ring");
  if (module->ring_ptr() != base) throw Error(ErrorKind::InvalidConstruction, "module is not over the given base ring");
  const FiniteModule& M = *module;
  const std::size_t nr = R.size(), nm = M.size();
  if (nr > cap / nm) throw Error(ErrorKind::SizeLimit, R.description() + "(+)" + M.description() +
                                                           " exceeds the ring size cap of " + std::to_string(cap));
  const std::size_t n = nr * nm;
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  const Elem m_count = static_cast<Elem>(nm);
  for (Elem x = 0; x < n; ++x) {
    const Elem r = x / m_count, m = x % m_count;
    names[x] = "(" + R.name(r) + "," + M.name(m) + ")";
    for (Elem y = 0; y < n; ++y) {
      const Elem r2 = y / m_count, m2 = y % m_count;
      add[x * n + y] = R.add(r, r2) * m_count + M.add(m, m2);
      mul[x * n + y] = R.mul(r, r2) * m_count + M.add(M.act(r, m2), M.act(r2, m));
    }
  }
  Construction c;
  c.kind = ConstructionKind::idealization;
  c.description = R.description() + "(+)" + M.description();
  c.parts = {base};
  c.module = module;
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(c));
}

Subring subring_on(const RingPtr& ring, const BitSet& subset) {
  const FiniteRing& R = *ring;
  if (subset.width() != R.size()) throw Error(ErrorKind::NotASubring, "subset width does not match the ring");
  if (!subset.test(R.zero())) throw Error(ErrorKind::NotASubring, "subset does not contain zero");
  if (!subset.test(R.one())) throw Error(ErrorKind::NotASubring, "subset does not contain one");
  const std::vector<std::size_t> members = subset.indices();
  for (auto a : members) {
    if (!subset.test(R.neg(static_cast<Elem>(a))))
      throw Error(ErrorKind::NotASubring, "not closed under negation at " + R.name(static_cast<Elem>(a)));
    for (auto b : members) {
      const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
      if (!subset.test(R.add(ea, eb)))
        throw Error(ErrorKind::NotASubring, "not closed under addition: " + R.name(ea) + " + " + R.name(eb));
      if (!subset.test(R.mul(ea, eb)))
        throw Error(ErrorKind::NotASubring, "not closed under multiplication: " + R.name(ea) + " * " + R.name(eb));
    }
  }
  const std::size_t n = members.size();
  std::vector<Elem> new_index(R.size(), 0);
  std::vector<Elem> embedding(n);
  for (std::size_t i = 0; i < n; ++i) {
    embedding[i] = static_cast<Elem>(members[i]);
    new_index[members[i]] = static_cast<Elem>(i);
  }
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = R.name(embedding[i]);
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = new_index[R.add(embedding[i], embedding[j])];
      mul[i * n + j] = new_index[R.mul(embedding[i], embedding[j])];
    }
  }
  Construction c;
  c.kind = ConstructionKind::subring;
  c.description = "subring of " + R.description();
  c.parts = {ring};
  return Subring{FiniteRing::from_tables(n, std::move(add), std::move(mul), std::move(names), std::move(c)),
                 std::move(embedding)};
}

}  // namespace grgraph
