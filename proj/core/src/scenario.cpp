#include "conekit/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace conekit {

using nlohmann::json;

namespace {

const char* section_name(Section s) {
  switch (s) {
    case Section::whole: return "X";
    case Section::fixed_part: return "V";
    case Section::complement: return "complement";
  }
  return "?";
}

Section parse_section(const std::string& text) {
  if (text == "X") return Section::whole;
  if (text == "V") return Section::fixed_part;
  if (text == "complement") return Section::complement;
  throw ConfigError("delta 'on' must be X, V or complement, got '" + text + "'");
}

DeltaRequest::Kind parse_kind(const std::string& text) {
  for (auto k : {DeltaRequest::Kind::points, DeltaRequest::Kind::ideal, DeltaRequest::Kind::linear_section,
                 DeltaRequest::Kind::random_point})
    if (to_string(k) == text) return k;
  throw ConfigError("unknown delta kind '" + text + "'");
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": missing or malformed '" + key + "'");
  }
}

DeltaRequest parse_delta(const json& j, std::size_t index) {
  const std::string where = "deltas[" + std::to_string(index) + "]";
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  DeltaRequest r;
  r.kind = parse_kind(get<std::string>(j, "kind", where));
  r.label = j.contains("label") ? get<std::string>(j, "label", where) : "delta-" + std::to_string(index);
  switch (r.kind) {
    case DeltaRequest::Kind::points:
      r.points = get<std::vector<std::vector<long>>>(j, "points", where);
      if (r.points.empty()) throw ConfigError(where + ": 'points' is empty");
      break;
    case DeltaRequest::Kind::ideal:
      r.generators = get<std::vector<std::string>>(j, "generators", where);
      if (r.generators.empty()) throw ConfigError(where + ": 'generators' is empty");
      break;
    case DeltaRequest::Kind::linear_section:
      r.on = parse_section(j.contains("on") ? get<std::string>(j, "on", where) : "X");
      r.codim = j.contains("codim") ? get<int>(j, "codim", where) : 1;
      if (r.codim < 0) throw ConfigError(where + ": 'codim' must be non-negative");
      break;
    case DeltaRequest::Kind::random_point:
      r.on = parse_section(j.contains("on") ? get<std::string>(j, "on", where) : "X");
      break;
  }
  return r;
}

json delta_to_json(const DeltaRequest& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["label"] = r.label;
  switch (r.kind) {
    case DeltaRequest::Kind::points: j["points"] = r.points; break;
    case DeltaRequest::Kind::ideal: j["generators"] = r.generators; break;
    case DeltaRequest::Kind::linear_section:
      j["on"] = section_name(r.on);
      j["codim"] = r.codim;
      break;
    case DeltaRequest::Kind::random_point: j["on"] = section_name(r.on); break;
  }
  return j;
}

}  // namespace

ScenarioConfig preset_scenario(const std::string& name) {
  ScenarioConfig cfg;
  cfg.preset = name;
  cfg.checks = check_names();
  return cfg;
}

ScenarioConfig parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
  static const std::vector<std::string> known{"preset", "cone", "field", "deltas", "checks",
                                              "caps",   "seed", "cache", "output"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ConfigError("unknown scenario key '" + it.key() + "'");

  ScenarioConfig cfg;
  const std::string where = "scenario";
  if (j.contains("preset") == j.contains("cone")) throw ConfigError("scenario needs exactly one of 'preset' or 'cone'");
  if (j.contains("preset")) {
    cfg.preset = get<std::string>(j, "preset", where);
  } else {
    const json& c = j.at("cone");
    cfg.cone_name = c.contains("name") ? get<std::string>(c, "name", "cone") : "custom";
    cfg.n = get<int>(c, "n", "cone");
    cfg.h = get<int>(c, "h", "cone");
    cfg.f = get<std::string>(c, "f", "cone");
  }
  if (j.contains("field")) cfg.field = get<std::string>(j, "field", where);
  if (j.contains("deltas")) {
    const json& d = j.at("deltas");
    if (!d.is_array()) throw ConfigError("'deltas' must be an array");
    for (std::size_t i = 0; i < d.size(); ++i) cfg.deltas.push_back(parse_delta(d[i], i));
  }
  cfg.checks = j.contains("checks") ? get<std::vector<std::string>>(j, "checks", where) : check_names();
  if (j.contains("caps")) {
    const json& c = j.at("caps");
    auto cap = [&](const char* key, std::size_t& slot) {
      if (!c.contains(key)) return;
      long v = get<long>(c, key, "caps");
      if (v <= 0) throw ConfigError(std::string("caps.") + key + " must be positive");
      slot = static_cast<std::size_t>(v);
    };
    cap("basis", cfg.caps.max_basis);
    cap("bits", cfg.caps.max_coefficient_bits);
    cap("pairs", cfg.caps.max_pairs);
  }
  if (j.contains("seed")) cfg.seed = get<std::uint64_t>(j, "seed", where);
  if (j.contains("cache")) cfg.cache_dir = get<std::string>(j, "cache", where);
  if (j.contains("output")) cfg.output = get<std::string>(j, "output", where);
  validate(cfg);
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read scenario file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string scenario_to_json(const ScenarioConfig& cfg) {
  json j;
  if (!cfg.preset.empty()) {
    j["preset"] = cfg.preset;
  } else {
    j["cone"] = {{"name", cfg.cone_name}, {"n", cfg.n}, {"h", cfg.h}, {"f", cfg.f}};
  }
  j["field"] = cfg.field;
  json deltas = json::array();
  for (const auto& d : cfg.deltas) deltas.push_back(delta_to_json(d));
  j["deltas"] = deltas;
  j["checks"] = cfg.checks;
  j["caps"] = {{"basis", cfg.caps.max_basis}, {"bits", cfg.caps.max_coefficient_bits}, {"pairs", cfg.caps.max_pairs}};
  j["seed"] = cfg.seed;
  if (!cfg.cache_dir.empty()) j["cache"] = cfg.cache_dir;
  if (!cfg.output.empty()) j["output"] = cfg.output;
  return j.dump(2);
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.checks.empty()) throw ConfigError("'checks' must not be empty");
  for (const auto& c : cfg.checks)
    if (!find_check_by_name(c)) {
      std::string valid;
      for (const auto& n : check_names()) valid += (valid.empty() ? "" : ", ") + n;
      throw ConfigError("unknown check '" + c + "' (valid: " + valid + ")");
    }
  if (cfg.caps.max_basis == 0 || cfg.caps.max_coefficient_bits == 0 || cfg.caps.max_pairs == 0)
    throw ConfigError("caps must be positive");
  if (!cfg.preset.empty() && !is_preset(cfg.preset)) throw ConfigError("unknown preset '" + cfg.preset + "'");
  Field field = Field::rationals();
  try {
    field = Field::parse(cfg.field);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  try {
    cone_data_for(cfg, field);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid cone datum: ") + e.what());
  }
}

ConeData cone_data_for(const ScenarioConfig& cfg, const Field& field) {
  if (!cfg.preset.empty()) return preset(cfg.preset, field, cfg.seed);
  return make_cone_data(cfg.cone_name, cfg.n, cfg.h, cfg.f, field, cfg.seed);
}

Field agreement_field(const Field& field) {
  return Field::prime(field.characteristic() == kAgreementPrime ? kDefaultPrime : kAgreementPrime);
}

}  // namespace conekit
