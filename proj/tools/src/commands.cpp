#include "grgraph_cli/commands.hpp"

#include <algorithm>

#include "grgraph/errors.hpp"
#include "grgraph/graph_export.hpp"
#include "grgraph_cli/instance.hpp"

namespace grgraph::cli {

namespace {

std::string member_names(const FiniteRing& ring, const IdealSet& I) {
  std::string out = "{";
  bool first = true;
  I.members.for_each([&](std::size_t x) {
    out += (first ? "" : ", ") + ring.name(static_cast<Elem>(x));
    first = false;
  });
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string cmd_ideals(const Instance& instance, bool graded_only) {
  Analysis a(instance);
  const FiniteRing& R = a.ring();
  const auto& family = graded_only ? a.graded_ideals() : a.all_ideals();
  std::string out = R.description() + "; " + a.grading().describe() + "\n";
  out += std::to_string(family.size()) + (graded_only ? " graded" : "") + " left ideals\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    const IdealSet& I = family[i];
    const bool graded = I.graded.value_or(is_graded(a.grading(), I));
    out += std::to_string(i) + "\t" + describe_ideal(R, I, graded ? &a.grading() : nullptr) + "\t|I|=" +
           std::to_string(I.size()) + "\t" + (graded ? "graded" : "not graded") + "\t" + member_names(R, I) + "\n";
  }
  return out;
}

std::string cmd_graph(const Instance& instance, GraphWhich which, GraphFormat format) {
  Analysis a(instance);
  IntersectionGraph g;
  switch (which) {
    case GraphWhich::graded:
      g = a.graded_graph();
      break;
    case GraphWhich::all:
      g = a.ungraded_graph();
      break;
    case GraphWhich::identity:
      g = a.identity().graph;
      break;
    case GraphWhich::quotient:
      g = quotient_graph(sim_partition(a.grading(), a.identity().re, a.graded_vertices()), a.graded_graph());
      break;
  }
  return format == GraphFormat::dot ? export_dot(g) : export_json(g, a.limits().graph_order);
}

std::string cmd_classify(const Instance& instance) {
  Analysis a(instance);
  const Grading& g = a.grading();
  const GradingClassification& c = a.classification();
  std::string out = a.ring().description() + "\n";
  out += "grading: " + g.describe() + "\n";
  out += "commutative: " + yes_no(a.ring().commutative()) + "\n";
  out += "support:";
  for (Degree d : g.support())
    out += " " + g.group().degree_name(d) + "(" + std::to_string(g.component(d).count()) + ")";
  out += "\n";
  out += "e-faithful: " + yes_no(c.e_faithful) + "\n";
  out += "faithful: " + yes_no(c.faithful) + "\n";
  out += "strong: " + yes_no(c.strong) + "\n";
  out += "first strong: " + yes_no(c.first_strong) + "\n";
  out += "sigma-faithful at:";
  for (Degree d : c.faithful_degrees) out += " " + g.group().degree_name(d);
  out += "\n";
  return out;
}

InstanceReport cmd_verify(const Instance& instance, const std::vector<std::string>& ids) {
  Analysis a(instance);
  InstanceReport rep{instance.name, a.ring().description(), a.grading().describe(), {}};
  const bool all = ids.empty() || (ids.size() == 1 && ids.front() == "all");
  if (all) {
    rep.theorems = run_all(a);
  } else {
    for (const auto& id : ids) rep.theorems.push_back(run_check(id, a));
  }
  return rep;
}

std::vector<InstanceReport> cmd_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error(ErrorKind::SchemaError, dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<InstanceReport> out;
  for (const auto& f : files) out.push_back(cmd_verify(load_instance(f), {}));
  return out;
}

std::string render(const std::vector<InstanceReport>& reports, ReportFormat format) {
  return format == ReportFormat::json ? reports_to_json(reports) : reports_to_text(reports);
}

int verify_exit_code(const std::vector<InstanceReport>& reports) { return tally(reports).fail == 0 ? 0 : 1; }

}  // namespace grgraph::cli
