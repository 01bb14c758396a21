#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conekit/cone_checks.hpp"

namespace conekit {

/// Version string baked in at build time.
std::string artifact_version();

struct CheckRecord {
  std::string name;
  std::string anchor;
  Status status = Status::inconclusive;
  std::vector<std::pair<std::string, std::string>> witnesses;
  /// Seconds; kept out of the default serialization so reports stay
  /// byte-identical across runs.
  double wall_time = 0;
};

struct DeltaRecord {
  std::string label;
  std::string kind;
  std::string ideal;
  int dimension = -1;
};

struct VerificationReport {
  std::string scenario;
  std::string field;
  /// Empty when no second prime was used (runs over Q).
  std::string agreement_field;
  std::uint64_t seed = 1;
  EngineCaps caps;
  std::string version;
  /// Ordered (key, text) summary of the genericity gate.
  std::vector<std::pair<std::string, std::string>> genericity;
  bool accepted = true;
  std::vector<DeltaRecord> deltas;
  std::vector<CheckRecord> checks;

  bool has_fail() const;
};

/// A list of scenario reports under a versioned envelope. Keys are
/// emitted in a fixed order.
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing = false);
std::vector<VerificationReport> reports_from_json(const std::string& text);

/// Per-check wall times, for the optional timing sidecar.
std::string timings_to_json(const std::vector<VerificationReport>& reports);

/// One line per check: "<scenario> <check> <STATUS>".
std::string summary_lines(const std::vector<VerificationReport>& reports);

}  // namespace conekit
