#include "grgraph/report.hpp"

#include "grgraph/errors.hpp"
#include "json_util.hpp"

namespace grgraph {

namespace {

using detail::ordered_json;

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::pass, Verdict::vacuous, Verdict::fail, Verdict::skipped})
    if (to_string(v) == s) return v;
  throw Error(ErrorKind::SchemaError, "report json: unknown verdict '" + s + "'");
}

ordered_json to_json(const TheoremReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["verdict"] = to_string(r.verdict);
  j["hypotheses_met"] = r.hypotheses_met;
  j["hypothesis_details"] = r.hypothesis_details;
  j["conclusion_details"] = r.conclusion_details;
  j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
  auto& parts = j["parts"] = ordered_json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"name", p.name}, {"verdict", to_string(p.verdict)}, {"detail", p.detail}});
  j["notes"] = r.notes;
  return j;
}

}  // namespace

VerdictTally tally(const std::vector<InstanceReport>& reports) {
  VerdictTally t;
  for (const auto& rep : reports)
    for (const auto& r : rep.theorems) switch (r.verdict) {
        case Verdict::pass:
          ++t.pass;
          break;
        case Verdict::vacuous:
          ++t.vacuous;
          break;
        case Verdict::fail:
          ++t.fail;
          break;
        case Verdict::skipped:
          ++t.skipped;
          break;
      }
  return t;
}

std::string reports_to_json(const std::vector<InstanceReport>& reports) {
  ordered_json j;
  auto& instances = j["instances"] = ordered_json::array();
  for (const auto& rep : reports) {
    ordered_json i;
    i["instance"] = rep.instance;
    i["ring"] = rep.ring;
    i["grading"] = rep.grading;
    auto& th = i["theorems"] = ordered_json::array();
    for (const auto& r : rep.theorems) th.push_back(to_json(r));
    instances.push_back(std::move(i));
  }
  const VerdictTally t = tally(reports);
  j["summary"] = {{"pass", t.pass}, {"vacuous", t.vacuous}, {"fail", t.fail}, {"skipped", t.skipped}};
  return j.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<InstanceReport>& reports) {
  std::string out;
  for (const auto& rep : reports) {
    out += "== " + rep.instance + ": " + rep.ring + ", " + rep.grading + "\n";
    for (const auto& r : rep.theorems) {
      std::string id = r.id;
      id.resize(std::max<std::size_t>(id.size(), 20), ' ');
      out += "  " + id + to_string(r.verdict);
      if (!r.conclusion_details.empty()) out += "  " + r.conclusion_details;
      else if (!r.hypothesis_details.empty()) out += "  " + r.hypothesis_details;
      out += "\n";
      for (const auto& p : r.parts) out += "      [" + to_string(p.verdict) + "] " + p.name + ": " + p.detail + "\n";
      if (r.witness) out += "      witness: " + *r.witness + "\n";
      for (const auto& n : r.notes) out += "      note: " + n + "\n";
    }
  }
  const VerdictTally t = tally(reports);
  out += "summary: " + std::to_string(t.pass) + " PASS, " + std::to_string(t.vacuous) + " VACUOUS, " +
         std::to_string(t.fail) + " FAIL, " + std::to_string(t.skipped) + " SKIPPED\n";
  return out;
}

std::vector<InstanceReport> read_reports_json(const std::string& text) {
  std::vector<InstanceReport> out;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& i : j.at("instances")) {
      InstanceReport rep;
      rep.instance = i.at("instance").get<std::string>();
      rep.ring = i.at("ring").get<std::string>();
      rep.grading = i.at("grading").get<std::string>();
      for (const auto& t : i.at("theorems")) {
        TheoremReport r;
        r.id = t.at("id").get<std::string>();
        r.verdict = verdict_from(t.at("verdict").get<std::string>());
        r.hypotheses_met = t.at("hypotheses_met").get<bool>();
        r.hypothesis_details = t.at("hypothesis_details").get<std::string>();
        r.conclusion_details = t.at("conclusion_details").get<std::string>();
        if (!t.at("witness").is_null()) r.witness = t.at("witness").get<std::string>();
        for (const auto& p : t.at("parts"))
          r.parts.push_back({p.at("name").get<std::string>(), verdict_from(p.at("verdict").get<std::string>()),
                             p.at("detail").get<std::string>()});
        r.notes = t.at("notes").get<std::vector<std::string>>();
        rep.theorems.push_back(std::move(r));
      }
      out.push_back(std::move(rep));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("report json: ") + e.what());
  }
  return out;
}

}  // namespace grgraph
