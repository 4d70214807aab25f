#pragma once

#include <vector>

#include "grgraph/bitset.hpp"
#include "grgraph/ring.hpp"

namespace grgraph::detail {

/// Additive subgroup under construction: membership bits plus the member
/// list, grown one generator at a time.
struct SubgroupBuilder {
  BitSet members;
  std::vector<Elem> list;

  SubgroupBuilder(std::size_t n, Elem zero) : members(n) {
    members.set(zero);
    list.push_back(zero);
  }

  SubgroupBuilder(BitSet members_in, std::vector<Elem> list_in)
      : members(std::move(members_in)), list(std::move(list_in)) {}

  /// H <- H + <g>, as the disjoint union of cosets H + k*g.
  template <typename Add>
  void adjoin(Elem g, Add&& add) {
    if (members.test(g)) return;
    const std::size_t base = list.size();
    Elem multiple = g;
    while (!members.test(multiple)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Elem x = add(list[i], multiple);
        members.set(x);
        list.push_back(x);
      }
      multiple = add(multiple, g);
    }
  }
};

}  // namespace grgraph::detail
