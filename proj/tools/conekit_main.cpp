#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "conekit/basis_cache.hpp"
#include "conekit/check_catalog.hpp"
#include "conekit/poly_io.hpp"
#include "conekit/runner.hpp"
#include "json.hpp"

using namespace conekit;

namespace {

// Exit codes: 0 no FAIL, 1 some FAIL, 2 usage or config error, 3 IO error.
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
  }
  std::filesystem::rename(tmp, p);
}

std::string default_cache_dir(const std::string& flag, const std::string& from_config) {
  if (!flag.empty()) return flag;
  if (!from_config.empty()) return from_config;
  if (const char* env = std::getenv("CONEKIT_CACHE")) return env;
  return "";
}

struct VerifyArgs {
  std::string scenario;
  std::string field;
  std::optional<std::uint64_t> seed;
  std::string cache;
  std::string out;
  std::string timing;
  int jobs = 1;
  std::optional<long> cap_basis;
  std::optional<long> cap_bits;
  bool single_prime = false;
};

int run_verify(const VerifyArgs& args) {
  std::vector<ScenarioConfig> configs;
  try {
    if (args.scenario == "all") {
      for (const auto& name : preset_names()) configs.push_back(preset_scenario(name));
    } else if (is_preset(args.scenario)) {
      configs.push_back(preset_scenario(args.scenario));
    } else {
      configs.push_back(load_scenario(args.scenario));
    }
    for (auto& cfg : configs) {
      if (!args.field.empty()) cfg.field = args.field;
      if (args.seed) cfg.seed = *args.seed;
      if (args.cap_basis) {
        if (*args.cap_basis <= 0) throw ConfigError("--cap-basis must be positive");
        cfg.caps.max_basis = static_cast<std::size_t>(*args.cap_basis);
      }
      if (args.cap_bits) {
        if (*args.cap_bits <= 0) throw ConfigError("--cap-bits must be positive");
        cfg.caps.max_coefficient_bits = static_cast<std::size_t>(*args.cap_bits);
      }
      validate(cfg);
    }
  } catch (const ConfigError& e) {
    std::cerr << "conekit: " << e.what() << "\n";
    return kExitConfig;
  }

  RunOptions options;
  options.jobs = std::max(1, args.jobs);
  options.agreement = !args.single_prime;
  std::string cache_dir = default_cache_dir(args.cache, configs.front().cache_dir);
  if (!cache_dir.empty()) options.cache = std::make_shared<BasisCache>(cache_dir);

  std::vector<VerificationReport> reports;
  try {
    reports = run_scenarios(configs, options);
  } catch (const ConfigError& e) {
    std::cerr << "conekit: " << e.what() << "\n";
    return kExitConfig;
  }

  std::string text = reports_to_json(reports);
  std::string out = !args.out.empty() ? args.out : configs.front().output;
  try {
    if (out.empty())
      std::cout << text;
    else
      write_file(out, text);
    if (!args.timing.empty()) write_file(args.timing, timings_to_json(reports));
  } catch (const std::exception& e) {
    std::cerr << "conekit: " << e.what() << "\n";
    return kExitIo;
  }
  std::cerr << summary_lines(reports);
  for (const auto& r : reports)
    if (r.has_fail()) return kExitFail;
  return 0;
}

int run_explain(const std::string& name) {
  if (const CheckInfo* info = find_check_by_name(name)) {
    std::cout << explain_text(*info);
    return 0;
  }
  std::cerr << "conekit: unknown check '" << name << "'. Valid checks:\n";
  for (const auto& n : check_names()) std::cerr << "  " << n << "\n";
  return kExitConfig;
}

int run_cache(const std::string& action, const std::string& dir_flag) {
  std::string dir = default_cache_dir(dir_flag, "");
  if (dir.empty()) {
    std::cerr << "conekit: cache needs --cache DIR or CONEKIT_CACHE\n";
    return kExitConfig;
  }
  BasisCache cache(dir);
  if (action == "stats") {
    auto s = cache.stats();
    std::cout << "entries " << s.entries << "\nbytes " << s.bytes << "\n";
  } else if (action == "clear") {
    std::cout << "removed " << cache.clear() << "\n";
  } else {
    auto v = cache.verify();
    std::cout << "checked " << v.checked << "\ncorrupt " << v.corrupt << "\nmismatched " << v.mismatched << "\n";
    for (const auto& f : v.bad_files) std::cout << "bad " << f << "\n";
    if (v.corrupt || v.mismatched) return kExitFail;
  }
  return 0;
}

/// Ideal file: {"field": "Fp:31991", "blocks": [["x", 4]], "generators": ["x0*x1 - x2^2", ...]}.
int run_gb(const std::string& path, const std::string& order_text) {
  try {
    auto j = nlohmann::json::parse(read_file(path));
    Field field = Field::parse(j.value("field", std::string("Fp:31991")));
    std::vector<Block> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(Block{b.at(0).get<std::string>(), b.at(1).get<std::size_t>(), true});
    AmbientSpace amb(blocks);
    MonomialOrder order = MonomialOrder::grevlex();
    if (order_text == "lex") {
      order = MonomialOrder::lex();
    } else if (order_text.rfind("elim:", 0) == 0) {
      std::vector<std::string> names;
      std::stringstream ss(order_text.substr(5));
      for (std::string b; std::getline(ss, b, ',');) names.push_back(b);
      order = MonomialOrder::eliminating(amb, names);
    } else if (order_text != "grevlex") {
      throw ConfigError("order must be lex, grevlex or elim:<block>");
    }
    RingPtr ring = make_ring(amb, field);
    Ideal ideal = Ideal::parse(ring, j.at("generators").get<std::vector<std::string>>());
    Engine engine;
    GroebnerBasis gb = engine.groebner(ideal, order);
    for (const auto& g : gb.basis) std::cout << print_polynomial(g) << "\n";
    return 0;
  } catch (const std::runtime_error& e) {
    std::cerr << "conekit: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "conekit: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conekit: Groebner-level verification of cone constructions on hypersurfaces"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a scenario and write a JSON report");
  verify->add_option("--scenario", va.scenario, "Scenario file, preset name, or 'all'")->required();
  verify->add_option("--field", va.field, "Q or Fp:<p>");
  verify->add_option("--seed", va.seed, "Seed for random choices");
  verify->add_option("--cache", va.cache, "Basis cache directory (default: $CONEKIT_CACHE)");
  verify->add_option("--out", va.out, "Report file (default: stdout)");
  verify->add_option("--timing", va.timing, "Write per-check wall times to this file");
  verify->add_option("--jobs", va.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--cap-basis", va.cap_basis, "Maximum basis size");
  verify->add_option("--cap-bits", va.cap_bits, "Maximum coefficient size in bits");
  verify->add_flag("--single-prime", va.single_prime, "Skip the second-prime agreement run");

  std::string check_name;
  auto* explain = app.add_subcommand("explain", "Describe a check: anchor, quotes, hypothesis, certified shadow");
  explain->add_option("check", check_name, "Check name")->required();

  std::string cache_action, cache_dir;
  auto* cache = app.add_subcommand("cache", "Inspect or clear the basis cache");
  cache->add_option("action", cache_action, "stats, clear or verify")
      ->required()
      ->check(CLI::IsMember({"stats", "clear", "verify"}));
  cache->add_option("--cache", cache_dir, "Cache directory (default: $CONEKIT_CACHE)");

  std::string ideal_path, order_text = "grevlex";
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  gb->add_option("--ideal", ideal_path, "JSON ideal file")->required();
  gb->add_option("--order", order_text, "lex, grevlex or elim:<block>[,<block>...]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*verify) return run_verify(va);
  if (*explain) return run_explain(check_name);
  if (*cache) return run_cache(cache_action, cache_dir);
  if (*gb) return run_gb(ideal_path, order_text);
  return kExitConfig;
}
