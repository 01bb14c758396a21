#pragma once

#include <memory>
#include <vector>

#include "conekit/basis_cache.hpp"
#include "conekit/report.hpp"
#include "conekit/scenario.hpp"

namespace conekit {

struct RunOptions {
  std::shared_ptr<BasisCache> cache;
  /// Over F_p, rerun over a second prime and downgrade disagreeing checks
  /// to INCONCLUSIVE.
  bool agreement = true;
  /// Worker threads; the two primes of one scenario count as two jobs.
  int jobs = 1;
};

/// Gated pipeline: genericity first, then the requested checks in catalog
/// order.
VerificationReport run_scenario(const ScenarioConfig& cfg, const RunOptions& options = {});
/// Runs independent scenarios on a bounded pool; results in input order.
std::vector<VerificationReport> run_scenarios(const std::vector<ScenarioConfig>& configs, const RunOptions& options);

}  // namespace conekit
