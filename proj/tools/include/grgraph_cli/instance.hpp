#pragma once

#include <filesystem>
#include <string>

#include "grgraph/analysis.hpp"

namespace grgraph::cli {

/// Parses an instance document:
///   {"name": ..., "ring": <ring>, "grading": <grading>, "limits": {...}}
/// Throws Error(SchemaError) naming the offending path, or
/// Error(UnknownConstructor).
Instance parse_instance(const std::string& text, const std::string& fallback_name = "instance");

/// Reads and parses a file; the file stem names the instance unless the
/// document has a "name".
Instance load_instance(const std::filesystem::path& path);

}  // namespace grgraph::cli
