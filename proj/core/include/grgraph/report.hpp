#pragma once

#include <string>
#include <vector>

#include "grgraph/theorems.hpp"

namespace grgraph {

/// The verification run of one instance.
struct InstanceReport {
  std::string instance;
  std::string ring;
  std::string grading;
  std::vector<TheoremReport> theorems;
};

/// Counts over the theorem-level verdicts.
struct VerdictTally {
  std::size_t pass = 0, vacuous = 0, fail = 0, skipped = 0;
};
VerdictTally tally(const std::vector<InstanceReport>& reports);

/// Byte-deterministic JSON, indented by two, trailing newline.
std::string reports_to_json(const std::vector<InstanceReport>& reports);
/// One block per instance, one line per check plus indented parts and notes.
std::string reports_to_text(const std::vector<InstanceReport>& reports);

/// Inverse of reports_to_json. Throws Error(SchemaError).
std::vector<InstanceReport> read_reports_json(const std::string& text);

}  // namespace grgraph
