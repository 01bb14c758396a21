#include "conekit/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <thread>

#include "conekit/poly_io.hpp"

namespace conekit {

namespace {

struct SingleRun {
  std::vector<std::pair<std::string, std::string>> genericity;
  bool accepted = false;
  std::vector<DeltaRecord> deltas;
  std::vector<CheckOutcome> outcomes;
  std::vector<double> seconds;
};

std::string smoothness_text(const SmoothnessReport& r) {
  std::string s = "dim " + std::to_string(r.dimension) + " (expected " + std::to_string(r.expected_dimension) + ")";
  s += r.singular_dimension < 0 ? ", smooth" : ", singular locus of dim " + std::to_string(r.singular_dimension);
  return s;
}

std::vector<std::string> selected_ids(const ScenarioConfig& cfg) {
  std::vector<std::string> ids;
  for (const auto& info : check_catalog())
    if (std::find(cfg.checks.begin(), cfg.checks.end(), info.name) != cfg.checks.end()) ids.push_back(info.id);
  return ids;
}

SingleRun run_once(const ScenarioConfig& cfg, const Field& field, const std::shared_ptr<BasisCache>& cache) {
  Engine engine(cfg.caps, cfg.seed, cache);
  ConeData cd = cone_data_for(cfg, field);
  SingleRun out;

  std::vector<DeltaSpec> deltas;
  std::vector<DeltaRequest> requests = cfg.deltas.empty() ? default_deltas(cd) : cfg.deltas;
  for (const auto& req : requests) {
    std::optional<DeltaSpec> d;
    try {
      d = realize(engine, cd, req);
    } catch (const ResourceError&) {
    } catch (const std::invalid_argument& e) {
      throw ConfigError("delta '" + req.label + "': " + e.what());
    }
    DeltaRecord rec{req.label, to_string(req.kind), "unavailable", -1};
    if (d) {
      std::string ideal;
      for (const auto& g : d->ideal.generators()) ideal += (ideal.empty() ? "" : ", ") + print_polynomial(g);
      rec.ideal = "(" + ideal + ")";
      rec.dimension = d->dimension;
      deltas.push_back(*d);
    }
    out.deltas.push_back(rec);
  }

  CheckSuite suite(engine, cd, deltas);
  try {
    const GenericityReport& g = suite.genericity();
    out.accepted = g.accepted();
    out.genericity = {{"hypersurface", smoothness_text(g.hypersurface)},
                      {"fixed_part", smoothness_text(g.fixed_part)},
                      {"complement", smoothness_text(g.complement)},
                      {"expansion_order", std::to_string(g.expansion.order)},
                      {"expansion_z_dependent", g.expansion.z_dependent ? "yes" : "no"},
                      {"g1", print_polynomial(g.expansion.g1)}};
  } catch (const ResourceError& e) {
    out.accepted = false;
    out.genericity = {{"resource_cap", e.what()}};
  }

  for (const auto& id : selected_ids(cfg)) {
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome o;
    if (out.genericity.size() == 1) {
      o.id = id;
      o.status = Status::inconclusive;
      o.add("resource_cap", "genericity gate exceeded the caps: " + out.genericity[0].second);
    } else {
      o = suite.run(id);
    }
    out.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    out.outcomes.push_back(std::move(o));
  }
  return out;
}

}  // namespace

VerificationReport run_scenario(const ScenarioConfig& cfg, const RunOptions& options) {
  validate(cfg);
  const Field field = Field::parse(cfg.field);
  const bool agree = options.agreement && field.is_prime();
  const Field second = agreement_field(field);

  SingleRun primary, secondary;
  if (agree && options.jobs > 1) {
    auto fut = std::async(std::launch::async, [&] { return run_once(cfg, second, options.cache); });
    primary = run_once(cfg, field, options.cache);
    secondary = fut.get();
  } else {
    primary = run_once(cfg, field, options.cache);
    if (agree) secondary = run_once(cfg, second, options.cache);
  }

  VerificationReport report;
  report.scenario = cfg.label();
  report.field = field.to_string();
  report.agreement_field = agree ? second.to_string() : "";
  report.seed = cfg.seed;
  report.caps = cfg.caps;
  report.version = artifact_version();
  report.genericity = primary.genericity;
  report.accepted = primary.accepted;
  report.deltas = primary.deltas;

  for (std::size_t i = 0; i < primary.outcomes.size(); ++i) {
    const CheckOutcome& o = primary.outcomes[i];
    const CheckInfo* info = find_check_by_id(o.id);
    CheckRecord rec;
    rec.name = info->name;
    rec.anchor = info->anchor;
    rec.status = o.status;
    rec.witnesses = o.witnesses;
    rec.wall_time = primary.seconds[i];
    if (agree) {
      const CheckOutcome& other = secondary.outcomes[i];
      if (other.status == o.status) {
        rec.witnesses.emplace_back("agreement", report.agreement_field + " gives the same status");
      } else {
        rec.status = Status::inconclusive;
        rec.witnesses.emplace_back("agreement", "primes disagree: " + report.field + " " + to_string(o.status) +
                                                    ", " + report.agreement_field + " " + to_string(other.status));
        for (const auto& [k, v] : other.witnesses) rec.witnesses.emplace_back("second_prime." + k, v);
      }
      rec.wall_time += secondary.seconds[i];
    }
    if ((rec.status == Status::fail || rec.status == Status::inconclusive) && rec.witnesses.empty())
      rec.witnesses.emplace_back("note", "no further data");
    report.checks.push_back(std::move(rec));
  }
  return report;
}

std::vector<VerificationReport> run_scenarios(const std::vector<ScenarioConfig>& configs, const RunOptions& options) {
  std::vector<VerificationReport> out(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  const int workers = std::max(1, std::min<int>(options.jobs, static_cast<int>(configs.size())));
  RunOptions inner = options;
  // Spare workers go to the second prime of each scenario.
  inner.jobs = options.jobs > static_cast<int>(configs.size()) ? 2 : 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        out[i] = run_scenario(configs[i], inner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace conekit
