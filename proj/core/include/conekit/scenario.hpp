#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conekit/cone_checks.hpp"

namespace conekit {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One verification run: a cone datum, a field, deltas and the checks to
/// run. Check names are the CLI names from the catalog.
struct ScenarioConfig {
  /// Preset name, or empty for a literal cone datum.
  std::string preset;
  std::string cone_name = "custom";
  int n = 0;
  int h = 0;
  std::string f;

  std::string field = "Fp:31991";
  /// Empty means default_deltas() of the cone datum.
  std::vector<DeltaRequest> deltas;
  std::vector<std::string> checks;
  EngineCaps caps;
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::string output;

  std::string label() const { return preset.empty() ? cone_name : preset; }
};

/// Config for a preset with every check and default deltas.
ScenarioConfig preset_scenario(const std::string& name);

/// Parses the JSON scenario format; throws ConfigError with a message
/// naming the offending key.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);
std::string scenario_to_json(const ScenarioConfig& cfg);

/// Throws ConfigError: empty or unknown checks, non-positive caps,
/// unknown preset, malformed cone datum or field.
void validate(const ScenarioConfig& cfg);

/// The cone datum of a validated config over `field`.
ConeData cone_data_for(const ScenarioConfig& cfg, const Field& field);

/// Prime used for agreement with `field`: the other default prime.
Field agreement_field(const Field& field);

}  // namespace conekit
