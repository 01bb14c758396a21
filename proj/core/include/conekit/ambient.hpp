#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace conekit {

/// One factor of a product of projective spaces, or an affine auxiliary
/// block. Variables of a block named "x" with size 4 are x0, x1, x2, x3.
struct Block {
  std::string name;
  std::size_t size = 0;
  bool projective = true;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Ordered list of variable blocks. The master ambient of the cone
/// construction is P^1(t) x P^1(z) x P^{n+1}(x) x P^{n+1}(y).
class AmbientSpace {
 public:
  AmbientSpace() = default;
  explicit AmbientSpace(std::vector<Block> blocks);

  /// t(2), z(2), x(n+2), y(n+2).
  static AmbientSpace master(int n);
  /// A single projective block, P^{size-1}.
  static AmbientSpace projective(const std::string& name, std::size_t size);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t num_vars() const { return names_.size(); }
  const std::string& var_name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& var_names() const { return names_; }

  std::optional<std::size_t> find_var(const std::string& name) const;
  std::size_t var(const std::string& name) const;
  std::size_t var(const std::string& block, std::size_t index) const;

  bool has_block(const std::string& name) const;
  std::size_t block_index(const std::string& name) const;
  const Block& block(const std::string& name) const { return blocks_[block_index(name)]; }
  std::size_t block_offset(std::size_t b) const { return offsets_.at(b); }
  /// Block index owning variable i.
  std::size_t block_of_var(std::size_t i) const { return owner_.at(i); }

  /// This ambient with extra blocks appended.
  AmbientSpace with_blocks(const std::vector<Block>& extra) const;
  /// This ambient restricted to the named blocks, in original order.
  AmbientSpace restricted_to(const std::vector<std::string>& keep) const;
  /// This ambient without the named blocks.
  AmbientSpace without(const std::vector<std::string>& drop) const;

  /// Sum over projective blocks of (size - 1).
  int projective_dimension() const;
  std::size_t num_projective_blocks() const;

  std::string describe() const;

  friend bool operator==(const AmbientSpace& a, const AmbientSpace& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<Block> blocks_;
  std::vector<std::string> names_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> owner_;
};

}  // namespace conekit
