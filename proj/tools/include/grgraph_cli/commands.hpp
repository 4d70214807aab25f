#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "grgraph/analysis.hpp"
#include "grgraph/report.hpp"

namespace grgraph::cli {

enum class GraphWhich { graded, all, identity, quotient };
enum class GraphFormat { dot, json };
enum class ReportFormat { text, json };

/// Left ideals one per line, with size, generators, grading status and members.
std::string cmd_ideals(const Instance& instance, bool graded_only);

/// Gr_G(R), G(R), G(R_e) or the quotient Gr_e(R).
std::string cmd_graph(const Instance& instance, GraphWhich which, GraphFormat format);

/// Support, components and the faithful / strong / first strong flags.
std::string cmd_classify(const Instance& instance);

/// `ids` empty or {"all"} runs the whole registry.
InstanceReport cmd_verify(const Instance& instance, const std::vector<std::string>& ids);

/// Every *.json file in `dir`, by path order.
std::vector<InstanceReport> cmd_corpus(const std::filesystem::path& dir);

std::string render(const std::vector<InstanceReport>& reports, ReportFormat format);

/// 0 when no FAIL, 1 otherwise.
int verify_exit_code(const std::vector<InstanceReport>& reports);

}  // namespace grgraph::cli
