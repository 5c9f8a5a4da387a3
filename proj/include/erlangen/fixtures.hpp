#pragma once

// Fixture files: named sets of expected values, each tagged with where the
// value comes from and, for computed values, which oracle regenerates it.
//
// JSON layout:
//   { "name": "...",
//     "values": [ { "id": "...", "provenance": "reference|trivial|derived",
//                   "oracle": "...", "inputs": { "f": [1, 0, 0, 1] },
//                   "value": [ ... ], "tolerance": 1e-12 } ] }

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace erlangen {

enum class Provenance {
  /// Read off a published table or statement.
  Reference,
  /// Immediate from a definition.
  Trivial,
  /// Produced by a named independent oracle.
  Derived
};

struct FixtureValue {
  std::string id;
  Provenance provenance = Provenance::Trivial;
  /// Required for Derived values.
  std::string oracle;
  std::map<std::string, std::vector<double>> inputs;
  std::vector<double> value;
  double tolerance = 0.0;
};

struct FixtureSet {
  std::string name;
  std::vector<FixtureValue> values;

  /// Throws PreconditionError for an unknown id.
  const FixtureValue& get(const std::string& id) const;
};

/// Throws ConfigError for malformed JSON, a missing or unknown provenance,
/// a derived value without oracle, or a non-positive tolerance.
FixtureSet parse_fixtures(const std::string& json_text);
FixtureSet load_fixtures(const std::filesystem::path& path);
/// Deterministic JSON text (two-space indent, fixed key order).
std::string dump_fixtures(const FixtureSet& set);

const char* to_string(Provenance p);

}  // namespace erlangen
