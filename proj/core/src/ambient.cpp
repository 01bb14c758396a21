#include "conekit/ambient.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace conekit {

AmbientSpace::AmbientSpace(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<std::string> seen;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Block& blk = blocks_[b];
    if (blk.size == 0) throw std::invalid_argument("block '" + blk.name + "' has no variables");
    if (blk.name.empty() || !seen.insert(blk.name).second)
      throw std::invalid_argument("duplicate or empty block name '" + blk.name + "'");
    offsets_.push_back(names_.size());
    for (std::size_t i = 0; i < blk.size; ++i) {
      names_.push_back(blk.name + std::to_string(i));
      owner_.push_back(b);
    }
  }
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) throw std::invalid_argument("ambient has clashing variable names");
}

AmbientSpace AmbientSpace::master(int n) {
  if (n < 1) throw std::invalid_argument("master ambient needs n >= 1");
  const auto m = static_cast<std::size_t>(n + 2);
  return AmbientSpace({{"t", 2, true}, {"z", 2, true}, {"x", m, true}, {"y", m, true}});
}

AmbientSpace AmbientSpace::projective(const std::string& name, std::size_t size) {
  return AmbientSpace({{name, size, true}});
}

std::optional<std::size_t> AmbientSpace::find_var(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t AmbientSpace::var(const std::string& name) const {
  auto v = find_var(name);
  if (!v) throw std::out_of_range("unknown variable '" + name + "' in ambient " + describe());
  return *v;
}

std::size_t AmbientSpace::var(const std::string& block, std::size_t index) const {
  std::size_t b = block_index(block);
  if (index >= blocks_[b].size) throw std::out_of_range("variable index out of range in block " + block);
  return offsets_[b] + index;
}

bool AmbientSpace::has_block(const std::string& name) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return b.name == name; });
}

std::size_t AmbientSpace::block_index(const std::string& name) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].name == name) return b;
  throw std::out_of_range("unknown block '" + name + "' in ambient " + describe());
}

AmbientSpace AmbientSpace::with_blocks(const std::vector<Block>& extra) const {
  auto all = blocks_;
  all.insert(all.end(), extra.begin(), extra.end());
  return AmbientSpace(std::move(all));
}

AmbientSpace AmbientSpace::restricted_to(const std::vector<std::string>& keep) const {
  std::vector<Block> out;
  for (const auto& b : blocks_)
    if (std::find(keep.begin(), keep.end(), b.name) != keep.end()) out.push_back(b);
  return AmbientSpace(std::move(out));
}

AmbientSpace AmbientSpace::without(const std::vector<std::string>& drop) const {
  std::vector<Block> out;
  for (const auto& b : blocks_)
    if (std::find(drop.begin(), drop.end(), b.name) == drop.end()) out.push_back(b);
  return AmbientSpace(std::move(out));
}

int AmbientSpace::projective_dimension() const {
  int d = 0;
  for (const auto& b : blocks_)
    if (b.projective) d += static_cast<int>(b.size) - 1;
  return d;
}

std::size_t AmbientSpace::num_projective_blocks() const {
  return static_cast<std::size_t>(std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.projective; }));
}

std::string AmbientSpace::describe() const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << " x ";
    const Block& blk = blocks_[b];
    if (blk.projective)
      os << "P" << blk.size - 1 << "(" << blk.name << ")";
    else
      os << "A" << blk.size << "(" << blk.name << ")";
  }
  return os.str();
}

}  // namespace conekit
