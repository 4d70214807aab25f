#include <gtest/gtest.h>

#include <map>

#include "grgraph/analysis.hpp"
#include "grgraph/errors.hpp"
#include "oracles.hpp"

using namespace grgraph;

namespace {

const char* const kEFaithful[] = {"z2", "z4", "z8", "z12", "z16", "z2xz2", "z4xz4", "f4",
                                  "z2_c2", "z4_c2", "z8_c2", "z2xz2_c2", "f2_d3"};

/// Traces I ∩ R_e, as sets of R indices, straight from the component.
std::map<std::vector<std::size_t>, std::vector<std::size_t>> classes_by_trace(Analysis& a) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> out;
  const BitSet re = a.grading().component(a.grading().identity());
  const auto& v = a.graded_vertices();
  for (std::size_t i = 0; i < v.size(); ++i) out[(v[i].members & re).indices()].push_back(i);
  return out;
}

}  // namespace

TEST(StructureMaps, IdentityComponentRing) {
  const auto inst = oracle::corpus("z4_c2");
  const Subring re = identity_component_ring(inst.grading);
  EXPECT_EQ(re.ring->size(), 4u);
  EXPECT_EQ(oracle::left_ideals(*re.ring).size(), 3u);
}

TEST(StructureMaps, Z4C2SingleVertex) {
  Analysis a(oracle::corpus("z4_c2"));
  EXPECT_EQ(a.graded_graph().order(), 1u);
  EXPECT_EQ(a.identity().graph.order(), 1u);
  const PhiReport r = phi_iso_check(a.grading(), a.identity(), a.graded_graph(), PhiVariant::direct);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.mapping.size(), 1u);
  EXPECT_EQ(r.mapping[0], std::optional<std::size_t>(0));
}

class EFaithful : public ::testing::TestWithParam<const char*> {};

TEST_P(EFaithful, PartitionAndTransfer) {
  Analysis a(oracle::corpus(GetParam()));
  ASSERT_TRUE(a.classification().e_faithful);
  const SimPartition p = sim_partition(a.grading(), a.identity().re, a.graded_vertices());
  const auto expected = classes_by_trace(a);
  ASSERT_EQ(p.classes.size(), expected.size());
  std::vector<std::vector<std::size_t>> got = p.classes, want;
  for (const auto& [k, c] : expected) want.push_back(c);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);

  // Classes are cliques in Gr, checked on the raw adjacency.
  for (const auto& c : p.classes)
    for (std::size_t i : c)
      for (std::size_t j : c)
        if (i != j) EXPECT_TRUE(a.graded_graph().graph.adjacent(i, j));
  EXPECT_FALSE(class_clique_violation(p, a.graded_graph()));

  const IntersectionGraph q = quotient_graph(p, a.graded_graph());
  EXPECT_EQ(q.order(), p.classes.size());
  const PhiReport phi = phi_iso_check(a.grading(), a.identity(), a.graded_graph(), PhiVariant::classes);
  EXPECT_TRUE(phi.ok()) << phi.witness.value_or("");
  // The quotient and G(R_e) have the same order, edge count and degrees.
  EXPECT_EQ(q.graph.degree_sequence(), a.identity().graph.graph.degree_sequence());

  const TransferReport t = gamma_omega_transfer(a.grading(), a.identity(), a.graded_graph());
  EXPECT_EQ(t.gamma_identity, oracle::domination_number(a.identity().graph.graph));
  EXPECT_EQ(t.gamma_graded, oracle::domination_number(a.graded_graph().graph));
  EXPECT_EQ(t.omega_graded, oracle::clique_number(a.graded_graph().graph));
  EXPECT_TRUE(t.gamma_equal());
  EXPECT_TRUE(t.omega_equal());
}

INSTANTIATE_TEST_SUITE_P(Corpus, EFaithful, ::testing::ValuesIn(kEFaithful));

TEST(StructureMaps, NotEFaithfulThrows) {
  Analysis a(oracle::corpus("f2_xy"));
  EXPECT_FALSE(a.classification().e_faithful);
  try {
    sim_partition(a.grading(), a.identity().re, a.graded_vertices());
    FAIL() << "expected NotEFaithful";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEFaithful);
  }
}

TEST(StructureMaps, TraceAndExtension) {
  Analysis a(oracle::corpus("z8_c2"));
  const auto& side = a.identity();
  for (const auto& Ie : side.vertices) {
    const IdealSet RI = extend_from_identity(a.ring(), side.re, Ie);
    EXPECT_TRUE(is_graded(a.grading(), RI));
    EXPECT_EQ(trace_on_identity(side.re, RI), Ie);
  }
}
