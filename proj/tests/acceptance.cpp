// Acceptance run: one PASS/FAIL line per criterion. Exit 0 iff every
// selected criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "conekit/runner.hpp"

using namespace conekit;

namespace {

// Time limits, seconds.
constexpr double kSoundnessLimit = 60;
constexpr double kOmegaLimit = 300;
constexpr double kCoveringLimit = 300;
constexpr double kShadowLimit = 600;
constexpr int kSoundnessTrials = 3;

const char* kA = "quadric-s2-h1";
const char* kB = "cubic-3f-h1";
const char* kC = "cubic-3f-h2";

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    pass = pass && ok;
    notes.push_back(note + (ok ? "" : " [unmet]"));
  }
};

class Runs {
 public:
  const VerificationReport& report(const std::string& preset) {
    auto it = reports_.find(preset);
    if (it != reports_.end()) return it->second;
    return reports_.emplace(preset, run_scenario(preset_scenario(preset))).first->second;
  }

  const CheckRecord& check(const std::string& preset, const std::string& name) {
    for (const auto& c : report(preset).checks)
      if (c.name == name) return c;
    throw std::logic_error("check " + name + " missing from report");
  }

 private:
  std::map<std::string, VerificationReport> reports_;
};

std::string witness(const CheckRecord& c, const std::string& key) {
  for (const auto& [k, v] : c.witnesses)
    if (k == key) return v;
  return "(none)";
}

std::vector<std::string> with_suffix(const CheckRecord& c, const std::string& suffix) {
  std::vector<std::string> out;
  for (const auto& [k, v] : c.witnesses)
    if (k.size() > suffix.size() && k.compare(k.size() - suffix.size(), suffix.size(), suffix) == 0)
      out.push_back(k + "=" + v);
  return out;
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

std::string status_of(const CheckRecord& c) { return c.name + " " + to_string(c.status); }

Verdict engine_soundness_criterion(Runs&) {
  Verdict v;
  Engine engine;
  auto t0 = std::chrono::steady_clock::now();
  SoundnessResult r = engine_soundness(engine, kSoundnessTrials);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(r.ok, std::to_string(r.cases) + " cases, " + std::to_string(r.failures.size()) + " failures");
  for (const auto& f : r.failures) v.notes.push_back(f);
  v.require(s < kSoundnessLimit, seconds(s) + " (limit " + seconds(kSoundnessLimit) + ")");
  return v;
}

Verdict omega_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kB, kC}) {
    const CheckRecord& c = runs.check(p, "omega-consistency");
    v.require(witness(c, "explicit_equals_graph") == "yes", std::string(p) + " equal=" + witness(c, "explicit_equals_graph"));
    v.require(c.wall_time < kOmegaLimit, std::string(p) + " " + seconds(c.wall_time));
  }
  return v;
}

Verdict e0_fiber_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kB, kC}) {
    const CheckRecord& c = runs.check(p, "omega-consistency");
    v.require(witness(c, "unsteady_fiber_equals_E0") == "yes",
              std::string(p) + " fiber=E0: " + witness(c, "unsteady_fiber_equals_E0"));
  }
  return v;
}

Verdict diagonal_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kB}) {
    const CheckRecord& c = runs.check(p, "prop-2-1");
    v.require(c.status == Status::pass, std::string(p) + " " + status_of(c) + ", a=" + witness(c, "constant_a"));
  }
  return v;
}

Verdict expansion_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kB, kC}) {
    const CheckRecord& c = runs.check(p, "expansion-g");
    bool ok = c.status == Status::pass && witness(c, "order") == "1" && witness(c, "z_dependent") == "yes";
    v.require(ok, std::string(p) + " r=" + witness(c, "order") + " z-dependent=" + witness(c, "z_dependent"));
  }
  // f free of the moving coordinate: g1 loses its z-dependence.
  ScenarioConfig degenerate = parse_scenario(R"({
    "cone": {"name": "degenerate", "n": 2, "h": 1, "f": "x0*x1 - x2^2"}})");
  VerificationReport r = run_scenario(degenerate);
  bool all_rejected = !r.checks.empty();
  for (const auto& c : r.checks) all_rejected = all_rejected && c.status == Status::rejected_genericity;
  v.require(all_rejected, "degenerate f: every check REJECTED-GENERICITY");
  return v;
}

Verdict covering_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kB}) {
    const CheckRecord& c = runs.check(p, "w-covering");
    v.require(c.status == Status::pass, std::string(p) + " " + status_of(c) + ", fiber lengths " +
                                            witness(c, "fiber_lengths") + " expected " + witness(c, "expected") +
                                            ", " + witness(c, "agreement"));
    v.require(c.wall_time < kCoveringLimit, std::string(p) + " " + seconds(c.wall_time));
  }
  return v;
}

Verdict special_member_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kC}) {
    const CheckRecord& c = runs.check(p, "prop-2-6");
    bool point_passed = false;
    for (const char* label : {"point-on-X", "point-on-V"})
      point_passed = point_passed || witness(c, std::string(label) + ".status") == "PASS";
    v.require(c.status == Status::pass && point_passed, std::string(p) + " " + status_of(c));
    for (const auto& s : with_suffix(c, ".status")) v.notes.push_back(std::string(p) + " " + s);
  }
  return v;
}

Verdict digamma_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kB, kC}) {
    const CheckRecord& c = runs.check(p, "digamma");
    v.require(c.status == Status::pass, std::string(p) + " " + status_of(c) + ", " + witness(c, "first_component") +
                                            "; " + witness(c, "second_component"));
  }
  return v;
}

Verdict shadow_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kB, kC}) {
    const CheckRecord& c = runs.check(p, "formula-3-5");
    v.require(c.status == Status::pass, std::string(p) + " " + status_of(c));
    for (const auto& m : with_suffix(c, ".delta_multiplicity")) v.notes.push_back(std::string(p) + " " + m);
    for (const auto& m : with_suffix(c, ".excess")) v.notes.push_back(std::string(p) + " " + m);
    v.require(c.wall_time < kShadowLimit, std::string(p) + " " + seconds(c.wall_time));
  }
  return v;
}

Verdict join_criterion(Runs& runs) {
  Verdict v;
  const CheckRecord& c = runs.check(kB, "example-3-2");
  // The default line x0+x1 = x2+x3 = x4 = 0 lies in V^1.
  v.require(c.status == Status::pass && witness(c, "line-on-X.status") == "PASS",
            std::string(kB) + " " + status_of(c) + ", line " + witness(c, "line-on-X.status"));
  return v;
}

Verdict determinism_criterion(Runs& runs) {
  Verdict v;
  for (const char* p : {kA, kB, kC}) {
    std::string first = reports_to_json({runs.report(p)});
    std::string second = reports_to_json({run_scenario(preset_scenario(p))});
    v.require(first == second, std::string(p) + " byte-identical rerun");
    int agreed = 0, total = 0;
    for (const auto& c : runs.report(p).checks) {
      ++total;
      if (witness(c, "agreement").find("gives the same status") != std::string::npos) ++agreed;
    }
    v.require(total > 0 && agreed == total,
              std::string(p) + " " + std::to_string(agreed) + "/" + std::to_string(total) + " checks agree across primes");
  }
  return v;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Verdict(Runs&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "engine soundness", engine_soundness_criterion},
      {2, "omega equals graph closure", omega_criterion},
      {3, "unsteady fiber is E0", e0_fiber_criterion},
      {4, "diagonal is a component", diagonal_criterion},
      {5, "first-order expansion", expansion_criterion},
      {6, "W covering degree", covering_criterion},
      {7, "special member cut by V^h", special_member_criterion},
      {8, "Gamma decomposition", digamma_criterion},
      {9, "degree shadow multiplicity", shadow_criterion},
      {10, "join support", join_criterion},
      {11, "determinism and agreement", determinism_criterion},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conekit acceptance criteria"};
  std::vector<int> selected;
  bool verbose = false;
  app.add_option("criteria", selected, "Criterion numbers (default: all)")->check(CLI::Range(1, 11));
  app.add_flag("-v,--verbose", verbose, "Print supporting notes under each line");
  CLI11_PARSE(app, argc, argv);

  Runs runs;
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) continue;
    Verdict v;
    try {
      v = c.run(runs);
    } catch (const std::exception& e) {
      v.require(false, std::string("error: ") + e.what());
    }
    all_pass = all_pass && v.pass;
    std::cout << "criterion " << c.number << " " << (v.pass ? "PASS" : "FAIL") << " " << c.title;
    if (!verbose) {
      std::string brief;
      for (const auto& n : v.notes) brief += (brief.empty() ? ": " : "; ") + n;
      std::cout << brief << "\n";
    } else {
      std::cout << "\n";
      for (const auto& n : v.notes) std::cout << "    " << n << "\n";
    }
  }
  return all_pass ? 0 : 1;
}
