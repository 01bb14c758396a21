#include <gtest/gtest.h>

#include "conekit/runner.hpp"

using namespace conekit;

TEST(Scenario, ParsesPresetWithDefaults) {
  ScenarioConfig cfg = parse_scenario(R"({"preset": "quadric-s2-h1"})");
  EXPECT_EQ(cfg.preset, "quadric-s2-h1");
  EXPECT_EQ(cfg.field, "Fp:31991");
  EXPECT_EQ(cfg.checks.size(), 9u);
  EXPECT_TRUE(cfg.deltas.empty());
}

TEST(Scenario, ParsesLiteralConeAndDeltas) {
  ScenarioConfig cfg = parse_scenario(R"({
    "cone": {"name": "q", "n": 2, "h": 1, "f": "x0*x3 - x1*x2"},
    "field": "Q",
    "deltas": [{"kind": "points", "label": "p", "points": [[2, 3, 4, 6]]},
               {"kind": "linear-section", "on": "V", "codim": 1},
               {"kind": "random-point"}],
    "checks": ["digamma", "prop-2-6"],
    "caps": {"basis": 500, "bits": 256},
    "seed": 9
  })");
  EXPECT_EQ(cfg.label(), "q");
  ASSERT_EQ(cfg.deltas.size(), 3u);
  EXPECT_EQ(cfg.deltas[1].on, Section::fixed_part);
  EXPECT_EQ(cfg.deltas[2].label, "delta-2");
  EXPECT_EQ(cfg.caps.max_basis, 500u);
  EXPECT_EQ(cfg.seed, 9u);
  ScenarioConfig again = parse_scenario(scenario_to_json(cfg));
  EXPECT_EQ(scenario_to_json(again), scenario_to_json(cfg));
}

TEST(Scenario, RejectsBadConfigs) {
  EXPECT_THROW(parse_scenario(R"({"preset": "quadric-s2-h1", "checks": []})"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"preset": "quadric-s2-h1", "checks": ["nope"]})"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"preset": "nope"})"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"preset": "quadric-s2-h1", "caps": {"basis": 0}})"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"preset": "quadric-s2-h1", "field": "F7"})"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"cone": {"n": 2, "h": 1, "f": "x0 + x1"}})"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"preset": "quadric-s2-h1", "bogus": 1})"), ConfigError);
  EXPECT_THROW(parse_scenario("not json"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({})"), ConfigError);
}

TEST(Runner, QuadricReportIsDeterministicAndRoundTrips) {
  ScenarioConfig cfg = preset_scenario("quadric-s2-h1");
  VerificationReport a = run_scenario(cfg);
  VerificationReport b = run_scenario(cfg);
  std::string ja = reports_to_json({a}), jb = reports_to_json({b});
  EXPECT_EQ(ja, jb);
  EXPECT_EQ(a.agreement_field, "Fp:32003");
  auto parsed = reports_from_json(ja);
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(reports_to_json(parsed), ja);
  for (const auto& c : a.checks) {
    if (c.status == Status::fail || c.status == Status::inconclusive) EXPECT_FALSE(c.witnesses.empty()) << c.name;
  }
}

TEST(Runner, TimingIsExcludedFromDefaultReport) {
  ScenarioConfig cfg = preset_scenario("quadric-s2-h1");
  cfg.checks = {"digamma"};
  VerificationReport r = run_scenario(cfg);
  EXPECT_EQ(reports_to_json({r}).find("wall_time"), std::string::npos);
  EXPECT_NE(reports_to_json({r}, true).find("wall_time_s"), std::string::npos);
}

TEST(Runner, ChecksFollowCatalogOrderAndMinimumBar) {
  ScenarioConfig cfg = preset_scenario("quadric-s2-h1");
  cfg.checks = {"digamma", "omega-consistency", "prop-2-1", "expansion-g", "prop-2-6"};
  VerificationReport r = run_scenario(cfg);
  ASSERT_EQ(r.checks.size(), 5u);
  EXPECT_EQ(r.checks.front().name, "omega-consistency");
  EXPECT_EQ(r.checks.back().name, "digamma");
  for (const auto& c : r.checks) EXPECT_EQ(c.status, Status::pass) << c.name;
  EXPECT_FALSE(r.has_fail());
}

TEST(Runner, RationalRunHasNoAgreementField) {
  ScenarioConfig cfg = preset_scenario("quadric-s2-h1");
  cfg.field = "Q";
  cfg.checks = {"omega-consistency"};
  VerificationReport r = run_scenario(cfg);
  EXPECT_EQ(r.agreement_field, "");
  EXPECT_EQ(r.field, "Q");
}

TEST(Runner, ParallelScenariosMatchSequential) {
  std::vector<ScenarioConfig> cfgs;
  for (const auto& n : preset_names()) {
    ScenarioConfig c = preset_scenario(n);
    c.checks = {"omega-consistency", "digamma"};
    cfgs.push_back(c);
  }
  RunOptions seq, par;
  par.jobs = 4;
  EXPECT_EQ(reports_to_json(run_scenarios(cfgs, seq)), reports_to_json(run_scenarios(cfgs, par)));
}

TEST(Runner, PrimeFieldRunsCarryAgreementWitness) {
  ScenarioConfig cfg = preset_scenario("cubic-3f-h1");
  cfg.checks = {"w-covering"};
  VerificationReport r = run_scenario(cfg);
  ASSERT_EQ(r.checks.size(), 1u);
  bool has_agreement = false;
  for (const auto& [k, v] : r.checks[0].witnesses) has_agreement |= k == "agreement";
  EXPECT_TRUE(has_agreement);
}

TEST(Runner, PrimeDisagreementDowngradesToInconclusive) {
  // Singular modulo 31991 only: the coefficient 31991 vanishes there.
  ScenarioConfig cfg = parse_scenario(R"({
    "cone": {"name": "split", "n": 2, "h": 1, "f": "x0^2 + x1^2 + x2^2 + 31991*x3^2"},
    "checks": ["omega-consistency"]
  })");
  VerificationReport r = run_scenario(cfg);
  EXPECT_FALSE(r.accepted);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, Status::inconclusive);
  std::string agreement;
  for (const auto& [k, v] : r.checks[0].witnesses)
    if (k == "agreement") agreement = v;
  EXPECT_EQ(agreement, "primes disagree: Fp:31991 REJECTED-GENERICITY, Fp:32003 PASS");
}
