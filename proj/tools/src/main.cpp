#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "grgraph/errors.hpp"
#include "grgraph_cli/commands.hpp"
#include "grgraph_cli/instance.hpp"

namespace {

using namespace grgraph;
using namespace grgraph::cli;

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error(ErrorKind::SchemaError, out + ": cannot write");
  file << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grgraph: graded ideals of finite rings and their intersection graphs"};
  app.require_subcommand(1);

  std::string input, out, which = "graded", graph_format = "dot", report_format = "text";
  bool graded_only = false;
  std::vector<std::string> theorems;

  auto* ideals = app.add_subcommand("ideals", "list left ideals");
  ideals->add_option("instance", input, "instance file")->required();
  ideals->add_flag("--graded-only", graded_only, "only graded left ideals");
  ideals->add_option("--out", out, "write to a file instead of stdout");

  auto* graph = app.add_subcommand("graph", "export an intersection graph");
  graph->add_option("instance", input, "instance file")->required();
  graph->add_option("--which", which, "graded, all, identity or quotient")
      ->check(CLI::IsMember({"graded", "all", "identity", "quotient"}));
  graph->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", out, "write to a file instead of stdout");

  auto* classify = app.add_subcommand("classify", "classify the grading");
  classify->add_option("instance", input, "instance file")->required();
  classify->add_option("--out", out, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run theorem checks on one instance");
  verify->add_option("instance", input, "instance file")->required();
  verify->add_option("--theorems", theorems, "check ids, or all")->delimiter(',');
  verify->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out, "write to a file instead of stdout");

  auto* corpus = app.add_subcommand("corpus", "run every check on every instance in a directory");
  corpus->add_option("dir", input, "directory of instance files")->required();
  corpus->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  corpus->add_option("--out", out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const ReportFormat rf = report_format == "json" ? ReportFormat::json : ReportFormat::text;
    if (*ideals) return emit(cmd_ideals(load_instance(input), graded_only), out);
    if (*graph) {
      static const std::map<std::string, GraphWhich> kinds = {{"graded", GraphWhich::graded},
                                                              {"all", GraphWhich::all},
                                                              {"identity", GraphWhich::identity},
                                                              {"quotient", GraphWhich::quotient}};
      const GraphFormat gf = graph_format == "json" ? GraphFormat::json : GraphFormat::dot;
      return emit(cmd_graph(load_instance(input), kinds.at(which), gf), out);
    }
    if (*classify) return emit(cmd_classify(load_instance(input)), out);
    if (*verify) {
      const std::vector<InstanceReport> reports = {cmd_verify(load_instance(input), theorems)};
      emit(render(reports, rf), out);
      return verify_exit_code(reports);
    }
    const auto reports = cmd_corpus(input);
    emit(render(reports, rf), out);
    return verify_exit_code(reports);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
