#include "conekit/basis_cache.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "conekit/poly_io.hpp"

namespace conekit {

namespace fs = std::filesystem;

namespace {

constexpr const char* kMagic = "conekit-basis 1";

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

std::string describe_blocks(const AmbientSpace& amb) {
  std::string s;
  for (const auto& b : amb.blocks())
    s += "block " + b.name + " " + std::to_string(b.size) + (b.projective ? " P\n" : " A\n");
  return s;
}

struct Entry {
  std::string key;
  RingPtr ring;
  MonomialOrder order;
  std::vector<std::string> generators;
  std::vector<std::string> basis;
};

// File layout: magic, key line count + key lines, then "basis" and one
// polynomial per line. The key itself is self-describing.
Entry parse_entry(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) throw std::runtime_error("bad magic");
  Entry e;
  std::vector<Block> blocks;
  std::string field_text, order_text;
  bool in_basis = false;
  while (std::getline(in, line)) {
    if (in_basis) {
      e.basis.push_back(line);
      continue;
    }
    if (line == "basis") {
      in_basis = true;
      continue;
    }
    e.key += line + "\n";
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "block") {
      Block b;
      std::string kind;
      ls >> b.name >> b.size >> kind;
      b.projective = kind == "P";
      blocks.push_back(b);
    } else if (tag == "field") {
      ls >> field_text;
    } else if (tag == "order") {
      ls >> order_text;
    } else if (tag == "gen") {
      e.generators.push_back(line.substr(4));
    } else {
      throw std::runtime_error("unknown line");
    }
  }
  if (!in_basis) throw std::runtime_error("truncated entry");
  AmbientSpace amb(blocks);
  if (order_text == "lex")
    e.order = MonomialOrder::lex();
  else if (order_text == "grevlex")
    e.order = MonomialOrder::grevlex();
  else if (order_text.rfind("elim:", 0) == 0) {
    std::vector<std::string> names;
    std::stringstream ss(order_text.substr(5));
    std::string name;
    while (std::getline(ss, name, ',')) names.push_back(name);
    e.order = MonomialOrder::eliminating(amb, names);
  } else {
    throw std::runtime_error("unknown order");
  }
  e.ring = make_ring(amb, Field::parse(field_text), e.order);
  return e;
}

}  // namespace

BasisCache::BasisCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string BasisCache::make_key(const Ideal& ideal, const MonomialOrder& order) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators()) gens.push_back(canonical_string(g.monic()));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::string key = describe_blocks(ideal.ambient());
  key += "field " + ideal.field().to_string() + "\n";
  key += "order " + order.to_string() + "\n";
  for (const auto& g : gens) key += "gen " + g + "\n";
  return key;
}

fs::path BasisCache::entry_path(const std::string& key) const { return dir_ / (hex64(stable_hash(key)) + ".gb"); }

std::optional<std::vector<std::string>> BasisCache::load(const std::string& key) const {
  std::ifstream in(entry_path(key));
  std::optional<std::vector<std::string>> out;
  if (in) {
    try {
      Entry e = parse_entry(in);
      if (e.key == key) out = std::move(e.basis);
    } catch (const std::exception&) {
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  ++(out ? hits_ : misses_);
  return out;
}

void BasisCache::store(const std::string& key, const Ideal&, const MonomialOrder&,
                       const std::vector<std::string>& basis) {
  fs::path target = entry_path(key);
  std::string tmp_name;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    static std::mt19937_64 salt(std::random_device{}());
    tmp_name = target.filename().string() + ".tmp" + hex64(salt());
  }
  fs::path tmp = dir_ / tmp_name;
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << kMagic << "\n" << key << "basis\n";
    for (const auto& b : basis) out << b << "\n";
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return;  // a failed cache write is not an error
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

BasisCache::Stats BasisCache::stats() const {
  Stats s;
  for (const auto& ent : fs::directory_iterator(dir_)) {
    if (ent.path().extension() != ".gb") continue;
    ++s.entries;
    s.bytes += ent.file_size();
  }
  std::lock_guard<std::mutex> lock(mutex_);
  s.hits = hits_;
  s.misses = misses_;
  return s;
}

std::size_t BasisCache::clear() {
  std::size_t removed = 0;
  std::vector<fs::path> victims;
  for (const auto& ent : fs::directory_iterator(dir_)) {
    auto name = ent.path().filename().string();
    if (ent.path().extension() == ".gb" || name.find(".gb.tmp") != std::string::npos) victims.push_back(ent.path());
  }
  for (const auto& p : victims) removed += fs::remove(p) ? 1 : 0;
  return removed;
}

BasisCache::VerifyResult BasisCache::verify(const EngineCaps& caps) const {
  VerifyResult r;
  Engine engine(caps);
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(dir_))
    if (ent.path().extension() == ".gb") files.push_back(ent.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    ++r.checked;
    std::ifstream in(path);
    Entry e;
    try {
      e = parse_entry(in);
      if (path.filename().string() != hex64(stable_hash(e.key)) + ".gb") throw std::runtime_error("name mismatch");
    } catch (const std::exception&) {
      ++r.corrupt;
      r.bad_files.push_back(path.filename().string());
      continue;
    }
    Ideal ideal = Ideal::parse(e.ring, e.generators);
    GroebnerBasis gb = engine.groebner(ideal, e.order);
    std::vector<std::string> printed;
    for (const auto& g : gb.basis) printed.push_back(print_polynomial(g));
    if (printed != e.basis) {
      ++r.mismatched;
      r.bad_files.push_back(path.filename().string());
    }
  }
  return r;
}

}  // namespace conekit
