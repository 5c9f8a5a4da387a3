#include "erlangen/fixtures.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "erlangen/error.hpp"

namespace erlangen {

namespace {

using nlohmann::ordered_json;

Provenance parse_provenance(const std::string& s, const std::string& id) {
  if (s == "reference") return Provenance::Reference;
  if (s == "trivial") return Provenance::Trivial;
  if (s == "derived") return Provenance::Derived;
  throw ConfigError("fixture '" + id + "': unknown provenance '" + s + "'");
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Reference: return "reference";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "?";
}

const FixtureValue& FixtureSet::get(const std::string& id) const {
  for (const FixtureValue& v : values) {
    if (v.id == id) return v;
  }
  throw PreconditionError("no fixture value '" + id + "' in " + name);
}

FixtureSet parse_fixtures(const std::string& json_text) {
  FixtureSet set;
  try {
    const ordered_json doc = ordered_json::parse(json_text);
    set.name = doc.at("name").get<std::string>();
    for (const auto& item : doc.at("values")) {
      FixtureValue v;
      v.id = item.at("id").get<std::string>();
      if (!item.contains("provenance")) {
        throw ConfigError("fixture '" + v.id + "': missing provenance");
      }
      v.provenance = parse_provenance(item.at("provenance"), v.id);
      if (item.contains("oracle")) v.oracle = item.at("oracle");
      if (v.provenance == Provenance::Derived && v.oracle.empty()) {
        throw ConfigError("fixture '" + v.id + "': derived value needs oracle");
      }
      if (item.contains("inputs")) {
        for (const auto& [key, arr] : item.at("inputs").items()) {
          v.inputs[key] = arr.get<std::vector<double>>();
        }
      }
      v.value = item.at("value").get<std::vector<double>>();
      v.tolerance = item.at("tolerance").get<double>();
      if (!(v.tolerance > 0.0)) {
        throw ConfigError("fixture '" + v.id + "': tolerance must be > 0");
      }
      set.values.push_back(std::move(v));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed fixture file: ") + e.what());
  }
  return set;
}

FixtureSet load_fixtures(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open fixture file: " + path.string());
  std::ostringstream text;
  text << file.rdbuf();
  return parse_fixtures(text.str());
}

std::string dump_fixtures(const FixtureSet& set) {
  ordered_json doc;
  doc["name"] = set.name;
  doc["values"] = ordered_json::array();
  for (const FixtureValue& v : set.values) {
    ordered_json item;
    item["id"] = v.id;
    item["provenance"] = to_string(v.provenance);
    if (!v.oracle.empty()) item["oracle"] = v.oracle;
    if (!v.inputs.empty()) {
      ordered_json inputs;
      for (const auto& [key, arr] : v.inputs) inputs[key] = arr;
      item["inputs"] = inputs;
    }
    item["value"] = v.value;
    item["tolerance"] = v.tolerance;
    doc["values"].push_back(item);
  }
  return doc.dump(2) + "\n";
}

}  // namespace erlangen
