#include <algorithm>
#include <map>

#include "grgraph/errors.hpp"
#include "grgraph/ring.hpp"
#include "span.hpp"

namespace grgraph {

ModulePtr FiniteModule::from_tables(RingPtr ring, std::size_t size, std::vector<Elem> add, std::vector<Elem> action,
                                    std::vector<std::string> names, std::string description) {
  if (!ring) throw Error(ErrorKind::InvalidConstruction, "module without a ring");
  if (size == 0) throw Error(ErrorKind::InvalidConstruction, "module must be nonempty");
  AbelianCheck group = check_abelian_group(size, add);
  if (!group.zero) throw Error(ErrorKind::InvalidConstruction, "module " + group.failure);
  const FiniteRing& R = *ring;
  if (action.size() != R.size() * size) throw Error(ErrorKind::InvalidConstruction, "action table has wrong size");
  for (Elem v : action)
    if (v >= size) throw Error(ErrorKind::InvalidConstruction, "action table entry out of range");

  auto plus = [&](Elem m, Elem n) { return add[m * size + n]; };
  auto act = [&](Elem r, Elem m) { return action[r * size + m]; };
  auto witness = [](Elem r, Elem s, Elem m) {
    return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(m) + ")";
  };

  for (Elem m = 0; m < size; ++m)
    if (act(R.one(), m) != m)
      throw Error(ErrorKind::InvalidConstruction, "unity does not act trivially on " + std::to_string(m));
  for (Elem r = 0; r < R.size(); ++r) {
    for (Elem m = 0; m < size; ++m) {
      for (Elem n = 0; n < size; ++n)
        if (act(r, plus(m, n)) != plus(act(r, m), act(r, n)))
          throw Error(ErrorKind::InvalidConstruction, "action not additive in the module at " + witness(r, m, n));
      for (Elem s = 0; s < R.size(); ++s) {
        if (act(R.add(r, s), m) != plus(act(r, m), act(s, m)))
          throw Error(ErrorKind::InvalidConstruction, "action not additive in the ring at " + witness(r, s, m));
        if (act(R.mul(r, s), m) != act(r, act(s, m)))
          throw Error(ErrorKind::InvalidConstruction, "action not associative at " + witness(r, s, m));
      }
    }
  }

  if (names.empty())
    for (std::size_t m = 0; m < size; ++m) names.push_back(std::to_string(m));
  if (names.size() != size) throw Error(ErrorKind::InvalidConstruction, "module name list has wrong length");

  auto module = std::shared_ptr<FiniteModule>(new FiniteModule());
  module->ring_ = std::move(ring);
  module->size_ = size;
  module->add_ = std::move(add);
  module->action_ = std::move(action);
  module->neg_ = std::move(group.neg);
  module->zero_ = *group.zero;
  module->names_ = std::move(names);
  module->description_ = std::move(description);
  return module;
}

ModulePtr FiniteModule::regular(RingPtr ring) {
  const FiniteRing& R = *ring;
  const std::size_t n = R.size();
  std::vector<Elem> add(n * n), action(n * n);
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    names[a] = R.name(a);
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = R.add(a, b);
      action[a * n + b] = R.mul(a, b);
    }
  }
  std::string description = R.description();
  return from_tables(std::move(ring), n, std::move(add), std::move(action), std::move(names), description);
}

ModulePtr FiniteModule::quotient(RingPtr ring, const std::vector<Elem>& generators) {
  const FiniteRing& R = *ring;
  const std::size_t n = R.size();
  detail::SubgroupBuilder left_ideal(n, R.zero());
  auto plus = [&](Elem a, Elem b) { return R.add(a, b); };
  for (Elem g : generators) {
    if (g >= n) throw Error(ErrorKind::InvalidConstruction, "quotient generator out of range");
    for (Elem r = 0; r < n; ++r) left_ideal.adjoin(R.mul(r, g), plus);
  }

  // Coset representative = smallest index in the coset.
  std::vector<Elem> coset_of(n, 0);
  std::vector<Elem> representatives;
  std::vector<bool> seen(n, false);
  for (Elem a = 0; a < n; ++a) {
    if (seen[a]) continue;
    const Elem index = static_cast<Elem>(representatives.size());
    representatives.push_back(a);
    for (Elem l : left_ideal.list) {
      const Elem x = R.add(a, l);
      seen[x] = true;
      coset_of[x] = index;
    }
  }
  const std::size_t q = representatives.size();
  std::vector<Elem> add(q * q), action(n * q);
  std::vector<std::string> names(q);
  for (Elem i = 0; i < q; ++i) {
    names[i] = "[" + R.name(representatives[i]) + "]";
    for (Elem j = 0; j < q; ++j) add[i * q + j] = coset_of[R.add(representatives[i], representatives[j])];
  }
  for (Elem r = 0; r < n; ++r)
    for (Elem i = 0; i < q; ++i) action[r * q + i] = coset_of[R.mul(r, representatives[i])];

  std::string gen_names;
  for (std::size_t i = 0; i < generators.size(); ++i) gen_names += (i ? "," : "") + R.name(generators[i]);
  std::string description = R.description() + "/(" + gen_names + ")";
  return from_tables(std::move(ring), q, std::move(add), std::move(action), std::move(names), description);
}

ModulePtr FiniteModule::direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (a->ring_ptr() != b->ring_ptr())
    throw Error(ErrorKind::InvalidConstruction, "direct sum of modules over different rings");
  const FiniteRing& R = a->ring();
  const std::size_t na = a->size(), nb = b->size(), n = na * nb;
  std::vector<Elem> add(n * n), action(R.size() * n);
  std::vector<std::string> names(n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xa = x / nb, xb = x % nb;
    names[x] = "(" + a->name(xa) + "," + b->name(xb) + ")";
    for (Elem y = 0; y < n; ++y) {
      const Elem ya = y / nb, yb = y % nb;
      add[x * n + y] = a->add(xa, ya) * static_cast<Elem>(nb) + b->add(xb, yb);
    }
    for (Elem r = 0; r < R.size(); ++r) action[r * n + x] = a->act(r, xa) * static_cast<Elem>(nb) + b->act(r, xb);
  }
  return from_tables(a->ring_ptr(), n, std::move(add), std::move(action), std::move(names),
                     a->description() + "+" + b->description());
}

}  // namespace grgraph
