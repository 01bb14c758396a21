#include "conekit/report.hpp"

#include <sstream>

#include "json.hpp"

#ifndef CONEKIT_VERSION
#define CONEKIT_VERSION "0.0.0"
#endif

namespace conekit {

using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "conekit-verification-report";
constexpr int kFormatVersion = 1;

ojson pairs_to_object(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ojson j = ojson::object();
  for (const auto& [k, v] : pairs) {
    std::string key = k;
    for (int i = 2; j.contains(key); ++i) key = k + "#" + std::to_string(i);
    j[key] = v;
  }
  return j;
}

std::vector<std::pair<std::string, std::string>> object_to_pairs(const ojson& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), it.value().get<std::string>());
  return out;
}

}  // namespace

std::string artifact_version() { return CONEKIT_VERSION; }

bool VerificationReport::has_fail() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return true;
  return false;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing) {
  ojson root;
  root["format"] = kFormat;
  root["format_version"] = kFormatVersion;
  ojson list = ojson::array();
  for (const auto& r : reports) {
    ojson j;
    j["scenario"] = r.scenario;
    j["environment"] = {{"field", r.field},
                        {"agreement_field", r.agreement_field},
                        {"seed", r.seed},
                        {"caps",
                         {{"basis", r.caps.max_basis},
                          {"bits", r.caps.max_coefficient_bits},
                          {"pairs", r.caps.max_pairs}}},
                        {"artifact_version", r.version}};
    j["genericity"] = {{"accepted", r.accepted}, {"details", pairs_to_object(r.genericity)}};
    ojson deltas = ojson::array();
    for (const auto& d : r.deltas)
      deltas.push_back({{"label", d.label}, {"kind", d.kind}, {"ideal", d.ideal}, {"dimension", d.dimension}});
    j["deltas"] = deltas;
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
      ojson cj;
      cj["name"] = c.name;
      cj["anchor"] = c.anchor;
      cj["status"] = to_string(c.status);
      cj["witnesses"] = pairs_to_object(c.witnesses);
      if (with_timing) cj["wall_time_s"] = c.wall_time;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    list.push_back(j);
  }
  root["reports"] = list;
  return root.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  ojson root = ojson::parse(text);
  if (root.at("format").get<std::string>() != kFormat) throw std::invalid_argument("not a conekit report");
  std::vector<VerificationReport> out;
  for (const auto& j : root.at("reports")) {
    VerificationReport r;
    r.scenario = j.at("scenario").get<std::string>();
    const auto& env = j.at("environment");
    r.field = env.at("field").get<std::string>();
    r.agreement_field = env.at("agreement_field").get<std::string>();
    r.seed = env.at("seed").get<std::uint64_t>();
    r.caps.max_basis = env.at("caps").at("basis").get<std::size_t>();
    r.caps.max_coefficient_bits = env.at("caps").at("bits").get<std::size_t>();
    r.caps.max_pairs = env.at("caps").at("pairs").get<std::size_t>();
    r.version = env.at("artifact_version").get<std::string>();
    r.accepted = j.at("genericity").at("accepted").get<bool>();
    r.genericity = object_to_pairs(j.at("genericity").at("details"));
    for (const auto& d : j.at("deltas"))
      r.deltas.push_back({d.at("label").get<std::string>(), d.at("kind").get<std::string>(),
                          d.at("ideal").get<std::string>(), d.at("dimension").get<int>()});
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.name = c.at("name").get<std::string>();
      rec.anchor = c.at("anchor").get<std::string>();
      auto st = parse_status(c.at("status").get<std::string>());
      if (!st) throw std::invalid_argument("bad status in report");
      rec.status = *st;
      rec.witnesses = object_to_pairs(c.at("witnesses"));
      if (c.contains("wall_time_s")) rec.wall_time = c.at("wall_time_s").get<double>();
      r.checks.push_back(std::move(rec));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string timings_to_json(const std::vector<VerificationReport>& reports) {
  ojson root = ojson::array();
  for (const auto& r : reports) {
    ojson checks = ojson::object();
    for (const auto& c : r.checks) checks[c.name] = c.wall_time;
    root.push_back({{"scenario", r.scenario}, {"field", r.field}, {"wall_time_s", checks}});
  }
  return root.dump(2) + "\n";
}

std::string summary_lines(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports)
    for (const auto& c : r.checks) os << r.scenario << " [" << r.field << "] " << c.name << " " << to_string(c.status) << "\n";
  return os.str();
}

}  // namespace conekit
