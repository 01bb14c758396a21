#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conekit/check_catalog.hpp"
#include "conekit/cone_schemes.hpp"

namespace conekit {

enum class Status { pass, fail, inconclusive, not_applicable, rejected_genericity };

std::string to_string(Status status);
std::optional<Status> parse_status(const std::string& text);

/// Result of one check. Witnesses are ordered (key, text) pairs; every
/// FAIL and INCONCLUSIVE has at least one.
struct CheckOutcome {
  std::string id;
  Status status = Status::inconclusive;
  std::vector<std::pair<std::string, std::string>> witnesses;
  /// True when the outcome depends on random choices and so needs
  /// agreement across primes.
  bool randomized = false;

  void add(std::string key, std::string value) { witnesses.emplace_back(std::move(key), std::move(value)); }
};

/// How a cycle delta is requested in a scenario; realized per field.
struct DeltaRequest {
  enum class Kind { points, ideal, linear_section, random_point };
  Kind kind = Kind::ideal;
  std::string label;
  std::vector<std::vector<long>> points;
  std::vector<std::string> generators;
  Section on = Section::whole;
  int codim = 1;
};

std::string to_string(DeltaRequest::Kind kind);

/// nullopt when the request cannot be realized (random points over Q).
std::optional<DeltaSpec> realize(const Engine& engine, const ConeData& cd, const DeltaRequest& request);

/// Points of X and of V^h plus one line on X, chosen so that every
/// delta-dependent check has something in its domain. Random points are
/// used over F_p; fixed rational points over Q.
std::vector<DeltaRequest> default_deltas(const ConeData& cd);

/// Runs checks on one cone datum. Not thread-safe.
class CheckSuite {
 public:
  CheckSuite(const Engine& engine, ConeData cd, std::vector<DeltaSpec> deltas);

  const GenericityReport& genericity();
  /// Dispatch by catalog id; REJECTED-GENERICITY for every check when the
  /// cone data is not generic.
  CheckOutcome run(const std::string& id);

  CheckOutcome family_graph();
  CheckOutcome diagonal_component();
  CheckOutcome first_order_expansion();
  CheckOutcome covering_degree();
  CheckOutcome correspondence_image();
  CheckOutcome special_member();
  CheckOutcome projection_section();
  CheckOutcome join_support();
  CheckOutcome degree_shadow();

  /// Number of random points of X sampled by covering_degree.
  static constexpr int kCoveringSamples = 3;

 private:
  CheckOutcome correspondence_for(const DeltaSpec& delta);
  CheckOutcome special_member_for(const DeltaSpec& delta);
  CheckOutcome join_for(const DeltaSpec& delta);
  CheckOutcome degree_shadow_for(const DeltaSpec& delta);

  const Engine& engine_;
  ConeData cd_;
  std::vector<DeltaSpec> deltas_;
  ConeBuilder builder_;
  std::optional<GenericityReport> genericity_;
};

/// Folds per-delta outcomes: FAIL if any fails, then INCONCLUSIVE, then
/// PASS; NOT-APPLICABLE only when nothing applied. Witnesses are prefixed
/// by the delta label.
CheckOutcome combine(const std::string& id, const std::vector<std::pair<std::string, CheckOutcome>>& parts);

/// Engine self-test: S-pair certificate of computed bases, membership and
/// equality consistency, saturation idempotence, and Bezout degrees of
/// random complete intersections in P^3 and P^4.
struct SoundnessResult {
  bool ok = true;
  int cases = 0;
  std::vector<std::string> failures;
};
SoundnessResult engine_soundness(const Engine& engine, int trials_per_shape = 3);

}  // namespace conekit
