#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "grgraph/errors.hpp"
#include "grgraph_cli/commands.hpp"
#include "grgraph_cli/instance.hpp"
#include "oracles.hpp"

using namespace grgraph;
using namespace grgraph::cli;

namespace {

ErrorKind parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::InvalidConstruction;
}

std::string parse_message(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

struct CliRun {
  int status;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(GRGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r{-1, ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Instance, SpecExamples) {
  const Instance z12 = parse_instance(R"({"ring":{"zn":12},"grading":{"trivial":{"group":{"cyclic":2}}}})");
  EXPECT_EQ(z12.ring().size(), 12u);
  EXPECT_EQ(z12.grading.group().description(), "C_2");
  EXPECT_EQ(z12.grading.kind(), GradingKind::trivial);

  const Instance id = parse_instance(R"({"ring":{"idealization":{"base":{"zn":4},"module":"self"}},"grading":"canonical"})");
  EXPECT_EQ(id.ring().size(), 16u);
  EXPECT_EQ(id.grading.kind(), GradingKind::idealization);

  EXPECT_EQ(parse_error(R"({"ring":{"zn":0}})"), ErrorKind::SchemaError);
}

TEST(Instance, ErrorsNamePaths) {
  EXPECT_EQ(parse_error(R"({"ring":{"quaternions":8}})"), ErrorKind::UnknownConstructor);
  EXPECT_EQ(parse_error(R"({"ring":{"zn":4},"grading":"canonical"})"), ErrorKind::WrongConstruction);
  EXPECT_EQ(parse_error(R"({"ring":{"zn":4},"colour":1})"), ErrorKind::SchemaError);
  EXPECT_EQ(parse_error("{"), ErrorKind::SchemaError);
  EXPECT_NE(parse_message(R"({"ring":{"product":[{"zn":2},{"zn":-3}]}})").find("$.ring.product[1].zn"),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"ring":{"zn":4},"grading":{"explicit":{"group":"integers","components":[{"degree":0,"generators":["7"]}]}}})")
                .find("$.grading.explicit.components[0].generators[0]"),
            std::string::npos);
  EXPECT_EQ(parse_error(R"({"ring":{"zn":64},"limits":{"ring_size":32}})"), ErrorKind::SizeLimit);
}

TEST(Instance, GroupsAndModules) {
  const Instance d3 = parse_instance(R"({"ring":{"group_ring":{"base":{"zn":2},"group":{"dihedral":3}}},"grading":"canonical"})");
  EXPECT_EQ(d3.grading.group().elements().size(), 6u);
  const Instance prod = parse_instance(
      R"({"ring":{"zn":3},"grading":{"trivial":{"group":{"product":[{"cyclic":2},{"cyclic":2}]}}}})");
  EXPECT_EQ(prod.grading.group().elements().size(), 4u);
  const Instance tab = parse_instance(R"({"ring":{"zn":3},"grading":{"trivial":{"group":{"table":[[0,1],[1,0]]}}}})");
  EXPECT_EQ(tab.grading.group().elements().size(), 2u);
  const Instance sum = parse_instance(
      R"({"ring":{"idealization":{"base":{"zn":2},"module":{"sum":["self","self"]}}},"grading":"canonical"})");
  EXPECT_EQ(sum.ring().size(), 8u);
  const Instance integers = parse_instance(R"({"ring":{"zn":5},"grading":{"trivial":"integers"}})");
  EXPECT_TRUE(integers.grading.group().is_integers());
}

TEST(Commands, GraphDot) {
  const std::string dot = cmd_graph(oracle::corpus("z12"), GraphWhich::graded, GraphFormat::dot);
  EXPECT_EQ(dot,
            "graph G {\n"
            "  n0 [label=\"(6)\"];\n"
            "  n1 [label=\"(4)\"];\n"
            "  n2 [label=\"(3)\"];\n"
            "  n3 [label=\"(2)\"];\n"
            "  n0 -- n2;\n"
            "  n0 -- n3;\n"
            "  n1 -- n3;\n"
            "  n2 -- n3;\n"
            "}\n");
}

TEST(Commands, OtherGraphs) {
  const Instance z8c2 = oracle::corpus("z8_c2");
  EXPECT_EQ(cmd_graph(z8c2, GraphWhich::quotient, GraphFormat::dot),
            cmd_graph(z8c2, GraphWhich::quotient, GraphFormat::dot));
  EXPECT_NE(cmd_graph(z8c2, GraphWhich::identity, GraphFormat::json).find("\"order\": 2"), std::string::npos);
  EXPECT_THROW(cmd_graph(oracle::corpus("f2_xy"), GraphWhich::quotient, GraphFormat::dot), Error);
}

TEST(Commands, IdealsAndClassify) {
  const std::string all = cmd_ideals(oracle::corpus("f2_xy"), false);
  EXPECT_NE(all.find("6 left ideals"), std::string::npos);
  EXPECT_NE(all.find("not graded"), std::string::npos);
  const std::string graded = cmd_ideals(oracle::corpus("f2_xy"), true);
  EXPECT_NE(graded.find("5 graded left ideals"), std::string::npos);
  const std::string c = cmd_classify(oracle::corpus("z4_c2"));
  EXPECT_NE(c.find("strong: yes"), std::string::npos);
}

TEST(Commands, VerifyAndCorpus) {
  const InstanceReport r = cmd_verify(oracle::corpus("z4_id_z4"), {"all"});
  const auto it = std::find_if(r.theorems.begin(), r.theorems.end(), [](const auto& t) { return t.id == "t231"; });
  ASSERT_NE(it, r.theorems.end());
  EXPECT_EQ(it->verdict, Verdict::pass);
  EXPECT_EQ(cmd_verify(oracle::corpus("z12"), {"t3", "t2"}).theorems.size(), 2u);

  const auto first = render(cmd_corpus(oracle::corpus_dir()), ReportFormat::json);
  const auto second = render(cmd_corpus(oracle::corpus_dir()), ReportFormat::json);
  EXPECT_EQ(first, second);
}

TEST(Binary, ExitCodes) {
  const std::string corpus = oracle::corpus_dir().string();
  const CliRun ok = run_cli("verify " + corpus + "/z4_id_z4.json --theorems t231");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("t231"), std::string::npos);
  EXPECT_EQ(run_cli("verify " + corpus + "/does_not_exist.json").status, 2);
  EXPECT_EQ(run_cli("verify " + corpus + "/z12.json --theorems t231").status, 2);
  EXPECT_EQ(run_cli("verify").status, 2);

  const std::string bad = testing::TempDir() + "bad_instance.json";
  std::ofstream(bad) << R"({"ring":{"zn":0}})";
  EXPECT_EQ(run_cli("verify " + bad).status, 2);

  const CliRun a = run_cli("graph " + corpus + "/z8_id_z8.json --format json");
  const CliRun b = run_cli("graph " + corpus + "/z8_id_z8.json --format json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}
