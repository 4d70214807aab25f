#include <gtest/gtest.h>

#include "grgraph/constructions.hpp"
#include "grgraph/errors.hpp"

using namespace grgraph;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no grgraph::Error thrown";
  return ErrorKind::SchemaError;
}

bool is_field(const FiniteRing& R) {
  for (Elem x = 0; x < R.size(); ++x)
    if (x != R.zero() && !R.is_unit(x)) return false;
  return R.commutative();
}

}  // namespace

TEST(Ring, CyclicTables) {
  auto r = make_cyclic_ring(12);
  EXPECT_EQ(r->size(), 12u);
  EXPECT_EQ(r->add(7, 8), 3u);
  EXPECT_EQ(r->mul(5, 7), 11u);
  EXPECT_EQ(r->neg(5), 7u);
  EXPECT_EQ(r->zero(), 0u);
  EXPECT_EQ(r->one(), 1u);
  EXPECT_TRUE(r->commutative());
  EXPECT_TRUE(r->is_unit(5));
  EXPECT_FALSE(r->is_unit(4));
  EXPECT_TRUE(r->is_nilpotent(6));
  EXPECT_FALSE(r->is_nilpotent(2));
}

TEST(Ring, CyclicGuards) {
  EXPECT_EQ(kind_of([] { make_cyclic_ring(1); }), ErrorKind::InvalidConstruction);
  EXPECT_EQ(kind_of([] { make_cyclic_ring(2000); }), ErrorKind::SizeLimit);
}

TEST(Ring, ProductIsRowMajor) {
  auto r = direct_product(make_cyclic_ring(2), make_cyclic_ring(3));
  ASSERT_EQ(r->size(), 6u);
  // (1,2) + (1,2) = (0,1); index = a*3 + b.
  EXPECT_EQ(r->add(5, 5), 1u);
  EXPECT_EQ(r->one(), 4u);
  EXPECT_EQ(kind_of([] { direct_product(make_cyclic_ring(64), make_cyclic_ring(64), 1024); }), ErrorKind::SizeLimit);
}

TEST(Ring, PolynomialQuotients) {
  auto z2 = make_cyclic_ring(2);
  auto f4 = polynomial_quotient(z2, {1, 1, 1});
  EXPECT_EQ(f4->size(), 4u);
  EXPECT_TRUE(is_field(*f4));
  auto x3 = polynomial_quotient(z2, {0, 0, 0, 1});
  EXPECT_EQ(x3->size(), 8u);
  EXPECT_FALSE(is_field(*x3));
  const Elem x = *x3->find("x");
  EXPECT_EQ(x3->mul(x, x3->mul(x, x)), x3->zero());
  EXPECT_EQ(kind_of([&] { polynomial_quotient(z2, {1, 1, 0}); }), ErrorKind::InvalidConstruction);
}

TEST(Ring, RejectsBadTables) {
  std::vector<Elem> add = {0, 1, 1, 0};
  std::vector<Elem> no_unity = {0, 0, 0, 0};
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(2, add, no_unity, {"0", "1"}, {}); }),
            ErrorKind::InvalidConstruction);
  std::vector<Elem> good = {0, 0, 0, 1};
  std::vector<Elem> bad_add = {0, 1, 1, 1};
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(2, bad_add, good, {"0", "1"}, {}); }),
            ErrorKind::InvalidConstruction);
  // Z_4 addition with x*y = 2xy is not unital.
  std::vector<Elem> add4(16), mul4(16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      add4[a * 4 + b] = (a + b) % 4;
      mul4[a * 4 + b] = (2 * a * b) % 4;
    }
  EXPECT_EQ(kind_of([&] { FiniteRing::from_tables(4, add4, mul4, {"0", "1", "2", "3"}, {}); }),
            ErrorKind::InvalidConstruction);
}

TEST(Ring, GroupRingAndIdealization) {
  auto z4 = make_cyclic_ring(4);
  auto gr = group_ring(z4, FiniteGroup::cyclic(2));
  EXPECT_EQ(gr->size(), 16u);
  EXPECT_TRUE(gr->commutative());
  EXPECT_EQ(gr->construction().kind, ConstructionKind::group_ring);

  auto d3 = group_ring(make_cyclic_ring(2), FiniteGroup::dihedral(3));
  EXPECT_EQ(d3->size(), 64u);
  EXPECT_FALSE(d3->commutative());

  auto id = idealization(z4, FiniteModule::regular(z4));
  EXPECT_EQ(id->size(), 16u);
  EXPECT_EQ(id->construction().kind, ConstructionKind::idealization);
  // (0,m)(0,m') = 0 for every m, m'.
  for (Elem m = 0; m < 4; ++m)
    for (Elem n = 0; n < 4; ++n) EXPECT_EQ(id->mul(m, n), id->zero());
  EXPECT_EQ(kind_of([&] { idealization(d3, FiniteModule::regular(d3)); }), ErrorKind::InvalidConstruction);
}

TEST(Ring, AlgebraOverZn) {
  // Z_2[x,y]/(x,y)^2.
  std::vector<std::vector<std::vector<long>>> t = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}},
      {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}},
  };
  auto r = algebra_over_zn(2, 3, t, {"1", "x", "y"});
  EXPECT_EQ(r->size(), 8u);
  EXPECT_TRUE(r->find("x+y").has_value());
  t[0][0] = {0, 1, 0};
  EXPECT_EQ(kind_of([&] { algebra_over_zn(2, 3, t, {"1", "x", "y"}); }), ErrorKind::InvalidConstruction);
}

TEST(Ring, Subring) {
  auto r = direct_product(make_cyclic_ring(2), make_cyclic_ring(2));
  BitSet diag(4);
  diag.set(0);
  diag.set(3);
  auto s = subring_on(r, diag);
  EXPECT_EQ(s.ring->size(), 2u);
  EXPECT_EQ(s.embedding, (std::vector<Elem>{0, 3}));
  BitSet half(4);
  half.set(0);
  half.set(2);
  EXPECT_EQ(kind_of([&] { subring_on(r, half); }), ErrorKind::NotASubring);
}

TEST(Group, Dihedral) {
  auto d = FiniteGroup::dihedral(3);
  EXPECT_EQ(d.size(), 6u);
  EXPECT_FALSE(d.is_abelian());
  for (FiniteGroup::Index a = 0; a < 6; ++a) EXPECT_EQ(d.op(a, d.inverse(a)), d.identity());
  EXPECT_EQ(kind_of([] { FiniteGroup::from_table({{0, 1}, {0, 1}}); }), ErrorKind::InvalidConstruction);
}

TEST(Module, QuotientAndSum) {
  auto z4 = make_cyclic_ring(4);
  auto q = FiniteModule::quotient(z4, {2});
  EXPECT_EQ(q->size(), 2u);
  auto s = FiniteModule::direct_sum(q, q);
  EXPECT_EQ(s->size(), 4u);
  for (Elem m = 0; m < s->size(); ++m) EXPECT_EQ(s->act(2, m), s->zero());
}
