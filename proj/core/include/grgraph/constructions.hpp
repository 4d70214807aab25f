#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grgraph/bitset.hpp"
#include "grgraph/group.hpp"
#include "grgraph/ring.hpp"

namespace grgraph {

inline constexpr std::size_t kDefaultRingCap = 1024;

/// Z_n. Throws InvalidConstruction for n < 2.
RingPtr make_cyclic_ring(std::size_t n, std::size_t cap = kDefaultRingCap);

/// R x S with row-major layout (r, s) -> r*|S| + s.
RingPtr direct_product(const RingPtr& r, const RingPtr& s, std::size_t cap = kDefaultRingCap);

/// base[x] / (modulus). `modulus` lists base elements little-endian and must
/// be monic of degree >= 1; elements are coefficient tuples c_0 + c_1 x + ...
/// indexed little-endian in base |base|.
RingPtr polynomial_quotient(const RingPtr& base, const std::vector<Elem>& modulus,
                            std::size_t cap = kDefaultRingCap);

/// Free Z_n-module of rank `dim` with the product of basis elements i and j
/// given by `structure[i][j]` (a coefficient vector of length dim). Basis
/// element 0 must be the unity. `basis_names` defaults to 1, e1, e2, ...
RingPtr algebra_over_zn(std::size_t n, std::size_t dim,
                        const std::vector<std::vector<std::vector<long>>>& structure,
                        std::vector<std::string> basis_names = {}, std::size_t cap = kDefaultRingCap);

/// base[G] with elements written sum c_g g; layout is |base|-ary digits by group index.
RingPtr group_ring(const RingPtr& base, const FiniteGroup& group, std::size_t cap = kDefaultRingCap);

/// R(+)M on R x M (row-major) with (r,m)(r',m') = (rr', rm' + r'm). R must be commutative.
RingPtr idealization(const RingPtr& base, const ModulePtr& module, std::size_t cap = kDefaultRingCap);

struct Subring {
  RingPtr ring;
  std::vector<Elem> embedding;  // new index -> old index
};

/// Re-indexes `subset` (ascending old indices) as a ring. Throws NotASubring.
Subring subring_on(const RingPtr& ring, const BitSet& subset);

}  // namespace grgraph
