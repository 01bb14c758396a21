#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "conekit/groebner.hpp"

namespace conekit {

/// On-disk store of reduced Gröbner bases, one file per entry named by the
/// hash of (ambient, field, order, canonical generators). Reduced bases are
/// unique, so a hit never changes a result. Entries are written to a
/// temporary file and renamed into place.
class BasisCache {
 public:
  explicit BasisCache(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }

  static std::string make_key(const Ideal& ideal, const MonomialOrder& order);

  std::optional<std::vector<std::string>> load(const std::string& key) const;
  void store(const std::string& key, const Ideal& ideal, const MonomialOrder& order,
             const std::vector<std::string>& basis);

  struct Stats {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
  };
  Stats stats() const;
  std::size_t clear();

  struct VerifyResult {
    std::size_t checked = 0;
    std::size_t corrupt = 0;
    std::size_t mismatched = 0;
    std::vector<std::string> bad_files;
  };
  /// Recomputes every entry without the cache and compares.
  VerifyResult verify(const EngineCaps& caps = {}) const;

 private:
  std::filesystem::path entry_path(const std::string& key) const;

  std::filesystem::path dir_;
  mutable std::mutex mutex_;
  mutable std::uint64_t hits_ = 0;
  mutable std::uint64_t misses_ = 0;
};

}  // namespace conekit
