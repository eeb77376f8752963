#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "amp/exhaustive.hpp"

namespace amp {

enum class OutputFormat { text, json, csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw ContractError("unknown output format '" + s + "' (expected text, json or csv)");
}

inline std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "text";
}

/// Defaults reproduce the acceptance runs.
struct RunConfig {
  std::size_t enumeration_bound = kDefaultEnumerationBound;
  std::int64_t exhaustive_group_bound = kDefaultExhaustiveGroupBound;
  bool symmetry_reduction = true;
  OutputFormat output_format = OutputFormat::text;
  std::optional<std::string> output_path;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 500;

  void validate() const {
    if (enumeration_bound == 0 || exhaustive_group_bound <= 0 || samples == 0) {
      throw ContractError("configuration bounds must be positive");
    }
  }
};

// Environment variable naming a JSON file with default configuration.
inline constexpr const char* kConfigEnvVar = "AMP_CONFIG";

inline nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j = {{"enumeration_bound", c.enumeration_bound},
                      {"exhaustive_group_bound", c.exhaustive_group_bound},
                      {"symmetry_reduction", c.symmetry_reduction},
                      {"output_format", format_name(c.output_format)},
                      {"seed", c.seed},
                      {"samples", c.samples}};
  j["output_path"] = c.output_path ? nlohmann::json(*c.output_path) : nlohmann::json(nullptr);
  return j;
}

/// Overlays the keys present in `j` onto `base`.
inline RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {}) {
  try {
    if (j.contains("enumeration_bound")) base.enumeration_bound = j.at("enumeration_bound").get<std::size_t>();
    if (j.contains("exhaustive_group_bound")) {
      base.exhaustive_group_bound = j.at("exhaustive_group_bound").get<std::int64_t>();
    }
    if (j.contains("symmetry_reduction")) base.symmetry_reduction = j.at("symmetry_reduction").get<bool>();
    if (j.contains("output_format")) base.output_format = parse_format(j.at("output_format").get<std::string>());
    if (j.contains("output_path") && !j.at("output_path").is_null()) {
      base.output_path = j.at("output_path").get<std::string>();
    }
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) base.samples = j.at("samples").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("invalid configuration: ") + e.what());
  }
  base.validate();
  return base;
}

inline RunConfig load_config_file(const std::string& path, RunConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot read configuration file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ContractError("configuration file " + path + ": " + e.what());
  }
  return config_from_json(j, std::move(base));
}

/// Defaults, overlaid with $AMP_CONFIG when set.
inline RunConfig default_config() {
  if (const char* path = std::getenv(kConfigEnvVar); path != nullptr && *path != '\0') {
    return load_config_file(path);
  }
  return {};
}

}  // namespace amp
