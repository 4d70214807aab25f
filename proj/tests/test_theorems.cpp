#include <gtest/gtest.h>

#include <set>

#include "grgraph/errors.hpp"
#include "grgraph/report.hpp"
#include "grgraph/theorems.hpp"
#include "grgraph_cli/instance.hpp"
#include "oracles.hpp"

using namespace grgraph;

namespace {

TheoremReport check(const char* stem, const char* id) {
  Analysis a(oracle::corpus(stem));
  return run_check(id, a);
}

const PartVerdict* part(const TheoremReport& r, const std::string& prefix) {
  for (const auto& p : r.parts)
    if (p.name.rfind(prefix, 0) == 0) return &p;
  return nullptr;
}

}  // namespace

TEST(Theorems, RegistryIsUnique) {
  std::set<std::string> ids;
  for (const auto& info : theorem_registry()) EXPECT_TRUE(ids.insert(info.id).second) << info.id;
  for (const char* id : {"t1", "c11", "t2", "t51", "t52", "t6", "l187", "t3", "t4", "t100", "lemma51", "t1001",
                         "gamma_eq", "omega_formula", "lemma_l0", "t56", "lemma17", "t777", "t231", "planarity_cor",
                         "lemma_ll", "t543", "t544", "r545"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Theorems, SpecExamples) {
  EXPECT_EQ(check("z12", "t3").verdict, Verdict::pass);

  const TheoremReport t4 = check("f2_xy", "t4");
  EXPECT_EQ(t4.verdict, Verdict::pass);
  ASSERT_NE(part(t4, "(2)"), nullptr);
  EXPECT_EQ(part(t4, "(2)")->verdict, Verdict::pass);

  const TheoremReport t231 = check("z4_id_z4", "t231");
  EXPECT_EQ(t231.verdict, Verdict::pass);
  ASSERT_NE(part(t231, "(2) equality"), nullptr);
  EXPECT_EQ(part(t231, "(2) equality")->verdict, Verdict::pass);

  const TheoremReport c11 = check("z2xz2", "c11");
  EXPECT_EQ(c11.verdict, Verdict::pass);
  EXPECT_EQ(c11.parts.at(0).verdict, Verdict::pass);

  EXPECT_EQ(check("z2xz2", "t2").verdict, Verdict::vacuous);
}

TEST(Theorems, KindGuards) {
  Analysis a(oracle::corpus("z12"));
  try {
    run_check("t231", a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongInstanceKind);
  }
  try {
    run_check("no_such", a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownTheorem);
  }
}

TEST(Theorems, RunAllDispatch) {
  auto rows = [](const char* stem) {
    Analysis a(oracle::corpus(stem));
    std::map<std::string, Verdict> out;
    for (const auto& r : run_all(a)) out[r.id] = r.verdict;
    return out;
  };
  const auto z12 = rows("z12");
  EXPECT_EQ(z12.at("t231"), Verdict::skipped);
  EXPECT_EQ(z12.at("lemma_ll"), Verdict::skipped);
  for (const auto& [id, v] : z12) EXPECT_NE(v, Verdict::fail) << id;

  const auto id = rows("z4_id_z4");
  for (const char* k : {"lemma17", "t777", "t231", "planarity_cor"}) EXPECT_NE(id.at(k), Verdict::skipped) << k;
  const auto x3 = rows("f2_x3");
  for (const char* k : {"lemma_ll", "t543", "t544"}) EXPECT_NE(x3.at(k), Verdict::skipped) << k;
  EXPECT_EQ(rows("z4_id_z2").at("t231"), Verdict::skipped);
}

TEST(Theorems, ReportInvariantsOverCorpus) {
  for (const auto& path : oracle::corpus_files()) {
    Analysis a(grgraph::cli::load_instance(path));
    const auto reports = run_all(a);
    ASSERT_EQ(reports.size(), theorem_registry().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const TheoremReport& r = reports[i];
      EXPECT_EQ(r.id, theorem_registry()[i].id);
      if (r.verdict == Verdict::fail) EXPECT_TRUE(r.witness.has_value());
      if (r.verdict == Verdict::vacuous) EXPECT_FALSE(r.hypotheses_met);
      if (r.verdict == Verdict::pass) EXPECT_TRUE(r.hypotheses_met);
    }
  }
}

TEST(Theorems, T777ConditionThreeIsVacuous) {
  const TheoremReport r = check("z4_id_z2", "t777");
  const PartVerdict* p = part(r, "(2)(iii)");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->verdict, Verdict::vacuous);
}

TEST(Theorems, T6ProductOfFields) {
  // Z_2 x Z_2: gamma 2 and both factors are fields with empty graphs.
  const TheoremReport r = check("z2xz2", "t6");
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(part(r, "(2)")->verdict, Verdict::vacuous);
  // Z_4 x Z_4: factors Z_4 have one-vertex graphs, gamma 1 each, so gamma(R) != 2.
  const TheoremReport s = check("z4xz4", "t6");
  EXPECT_EQ(s.verdict, Verdict::pass);
  EXPECT_EQ(part(s, "(2)")->verdict, Verdict::pass);
}

TEST(Reports, JsonRoundTrip) {
  Analysis a(oracle::corpus("z4_id_z4"));
  const std::vector<InstanceReport> reports = {{"Z_4(+)Z_4", a.ring().description(), a.grading().describe(), run_all(a)}};
  const std::string text = reports_to_json(reports);
  EXPECT_EQ(reports_to_json(read_reports_json(text)), text);
  EXPECT_NE(reports_to_text(reports).find("t231"), std::string::npos);
  EXPECT_EQ(tally(reports).fail, 0u);
  EXPECT_THROW(read_reports_json("[]"), Error);
}
