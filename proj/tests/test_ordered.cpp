#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "grgraph/analysis.hpp"
#include "grgraph/errors.hpp"
#include "grgraph/ordered.hpp"
#include "oracles.hpp"

using namespace grgraph;

namespace {

IdealSet ideal_of(const FiniteRing& R, std::initializer_list<const char*> gens) {
  std::vector<Elem> g;
  for (const char* n : gens) g.push_back(*R.find(n));
  return generated_left_ideal(R, g);
}

/// I~ computed from scratch: top components by scanning the support.
BitSet leading_oracle(const Grading& g, const BitSet& ideal) {
  const FiniteRing& R = g.ring();
  std::vector<BitSet> comps;
  for (Degree d : g.support()) comps.push_back(g.component(d));
  std::vector<Elem> tops;
  for (std::size_t x : ideal.indices()) {
    if (x == R.zero()) continue;
    // Find the decomposition x = sum x_d by brute force over component tuples.
    std::vector<Elem> choice(comps.size(), R.zero());
    std::function<bool(std::size_t, Elem)> search = [&](std::size_t k, Elem acc) {
      if (k == comps.size()) return acc == x;
      for (std::size_t c : comps[k].indices()) {
        choice[k] = static_cast<Elem>(c);
        if (search(k + 1, R.add(acc, static_cast<Elem>(c)))) return true;
      }
      return false;
    };
    if (!search(0, R.zero())) ADD_FAILURE() << "no decomposition";
    for (std::size_t k = comps.size(); k-- > 0;)
      if (choice[k] != R.zero()) {
        tops.push_back(choice[k]);
        break;
      }
  }
  // Smallest left ideal holding every top: intersect all that do.
  BitSet out = BitSet::full(R.size());
  for (const auto& I : oracle::left_ideals(R))
    if (std::all_of(tops.begin(), tops.end(), [&](Elem t) { return I.test(t); })) out &= I;
  return out;
}

}  // namespace

TEST(Ordered, LeadingIdealOfXPlusY) {
  const auto inst = oracle::corpus("f2_xy");
  const FiniteRing& R = inst.ring();
  const IdealSet I = ideal_of(R, {"x+y"});
  EXPECT_EQ(leading_ideal(inst.grading, I).leading, ideal_of(R, {"y"}));
}

class LemmaLL : public ::testing::TestWithParam<const char*> {};

TEST_P(LemmaLL, AllPartsHold) {
  Analysis a(oracle::corpus(GetParam()));
  const LemmaLLReport r = lemma_ll_check(a.grading(), a.all_ideals());
  EXPECT_TRUE(r.ok()) << r.witness.value_or("");
  EXPECT_EQ(r.ideals_checked, a.all_ideals().size());
  for (const auto& I : a.all_ideals())
    EXPECT_EQ(leading_ideal(a.grading(), I).leading.members, leading_oracle(a.grading(), I.members));
}

INSTANTIATE_TEST_SUITE_P(IntegerGraded, LemmaLL, ::testing::Values("f2_x3", "f2_x4", "f2_xy", "f2_xy_xy", "t2_f2"));

TEST(Ordered, RequiresIntegers) {
  const auto inst = oracle::corpus("z12");
  try {
    leading_ideal(inst.grading, whole_ring(inst.ring()));
    FAIL() << "expected NotIntegerGraded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIntegerGraded);
  }
}

TEST(Ordered, ChainLengths) {
  auto z8 = oracle::corpus("f2_x3");
  const auto chains = maximal_chain_lengths(enumerate_left_ideals(z8.ring()));
  EXPECT_EQ(chains, (std::map<std::size_t, std::size_t>{{4, 1}}));
  const auto f = oracle::corpus("f2_xy");
  // 0 < (x) | (y) | (x+y) < (x, y) < R.
  EXPECT_EQ(maximal_chain_lengths(enumerate_left_ideals(f.ring())), (std::map<std::size_t, std::size_t>{{4, 3}}));
}

TEST(Ordered, ComparisonOnLocalRings) {
  for (const char* stem : {"f2_x3", "f2_x4", "f2_xy", "f2_xy_xy"}) {
    Analysis a(oracle::corpus(stem));
    const OrderedComparison c = ordered_comparison_check(a.grading(), a.all_ideals(), a.graded_ideals());
    EXPECT_TRUE(c.local) << stem;
    EXPECT_TRUE(c.connectivity_equivalent()) << stem;
    EXPECT_EQ(c.graded_girth, c.ungraded_girth) << stem;
    EXPECT_FALSE(c.remark_triggered) << stem;
  }
}
