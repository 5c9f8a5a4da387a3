#include "erlangen/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "erlangen/error.hpp"
#include "erlangen/groups.hpp"

namespace erlangen {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_integer(const std::string& value, const std::string& where,
                const std::string& key) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(where + ": invalid integer for '" + key + "': " + value);
  }
  return out;
}

double parse_real(const std::string& value, const std::string& where,
                  const std::string& key) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw ConfigError(where + ": invalid number for '" + key + "': " + value);
  }
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
  RunConfig config;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(number);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(where + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(where + ": expected 'key = value'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(where + ": duplicate key '" + key + "'");
    }
    if (key == "seed") {
      config.seed = parse_integer<std::uint64_t>(value, where, key);
    } else if (key == "trials") {
      if (value.front() == '-') {
        throw ConfigError(where + ": invalid value for 'trials': must be >= 1");
      }
      config.trials = parse_integer<std::size_t>(value, where, key);
    } else if (key == "tolerance") {
      config.tolerance = parse_real(value, where, key);
    } else if (key == "group") {
      config.group = value;
    } else if (key == "dimension") {
      config.dimension = parse_integer<int>(value, where, key);
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw ConfigError("cannot open config file: " + path.string());
  }
  std::ostringstream text;
  text << file.rdbuf();
  return parse_config(text.str(), path.string());
}

void validate(const RunConfig& config) {
  if (config.trials < 1) {
    throw ConfigError("invalid value for 'trials': must be >= 1");
  }
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance)) {
    throw ConfigError("invalid value for 'tolerance': must be > 0");
  }
  const auto& names = builtin_group_names();
  if (std::find(names.begin(), names.end(), config.group) == names.end()) {
    throw ConfigError("invalid value for 'group': unknown group '" +
                      config.group + "'");
  }
  try {
    builtin_group(config.group, config.dimension);
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("invalid value for 'dimension': ") +
                      e.what());
  }
}

}  // namespace erlangen
