#pragma once

// Run configuration as line-oriented "key = value" text. '#' starts a
// comment; blank lines are ignored. Keys: seed, trials, tolerance, group,
// dimension. Every key is optional and may appear once; unknown keys are
// errors.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace erlangen {

struct RunConfig {
  std::optional<std::uint64_t> seed;
  std::size_t trials = 100;
  double tolerance = 1e-9;
  std::string group = "principal";
  int dimension = 2;
};

/// Throws ConfigError carrying "origin:line:" for syntax errors and the
/// field name for validation errors.
RunConfig parse_config(const std::string& text,
                       const std::string& origin = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Checks trials >= 1, tolerance > 0 and that group/dimension name a
/// builtin group.
void validate(const RunConfig& config);

}  // namespace erlangen
