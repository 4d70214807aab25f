#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grgraph/analysis.hpp"

namespace grgraph {

enum class Verdict { pass, vacuous, fail, skipped };
std::string to_string(Verdict v);

/// One direction or item of a theorem.
struct PartVerdict {
  std::string name;
  Verdict verdict = Verdict::vacuous;
  std::string detail;
};

struct TheoremReport {
  std::string id;
  Verdict verdict = Verdict::vacuous;
  bool hypotheses_met = false;
  std::string hypothesis_details;
  std::string conclusion_details;
  std::optional<std::string> witness;  // present on FAIL
  std::vector<PartVerdict> parts;
  std::vector<std::string> notes;
};

/// Which instances a check can run on at all.
enum class InstanceRequirement { any, idealization, self_idealization, group_ring, integer_grading };

struct TheoremInfo {
  std::string id;
  std::string hypotheses;
  std::string conclusion;
  InstanceRequirement requirement = InstanceRequirement::any;
};

/// Every registered check, in run order.
const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(const std::string& id);

/// Throws UnknownTheorem, or WrongInstanceKind when the instance does not
/// have the shape the check needs.
TheoremReport run_check(const std::string& id, Analysis& analysis);

/// Every check in registry order; inapplicable ones come back SKIPPED.
std::vector<TheoremReport> run_all(Analysis& analysis);

bool applies_to(InstanceRequirement requirement, const Grading& g);

}  // namespace grgraph
