#pragma once

#include <atomic>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <optional>
#include <string>
#include <vector>

#include "conekit/polynomial.hpp"

namespace conekit {

class BasisCache;

/// Finitely generated ideal. Zero generators are dropped on construction;
/// the ring's term order is irrelevant to the ideal itself.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  /// Ideal generated by the variables of one block.
  static Ideal irrelevant(RingPtr ring, const std::string& block);
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const AmbientSpace& ambient() const { return ring_->ambient(); }
  const Field& field() const { return ring_->field(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  Ideal operator+(const Ideal& other) const;
  Ideal plus(const std::vector<Polynomial>& extra) const;
  /// Every generator multihomogeneous in the projective blocks.
  bool is_multihomogeneous() const;
  bool is_homogeneous() const;

  /// Same generators in another ring (variables matched by name).
  Ideal to_ring(const RingPtr& target) const;

  std::vector<std::string> printed() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  RingPtr ring;  // carries the order
  std::vector<Polynomial> basis;
  bool reduced = false;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }
  const MonomialOrder& order() const { return ring->order(); }
};

/// Projective dimension (-1 for empty) and degree with respect to the sum
/// of the block hyperplane classes. `multidegree` lists the top-dimensional
/// class as (exponent vector per projective block, coefficient).
struct HilbertData {
  int dimension = -1;
  long degree = 0;
  std::vector<std::pair<std::vector<int>, long>> multidegree;
};

struct EngineCaps {
  std::size_t max_basis = 20000;
  std::size_t max_pairs = 4000000;
  std::size_t max_coefficient_bits = 1U << 14;
};

/// Gröbner engine. Pure functions of their inputs apart from the optional
/// basis cache; randomized steps (generic linear forms for saturation)
/// are seeded from the engine seed and the call's inputs, so results are
/// reproducible.
class Engine {
 public:
  explicit Engine(EngineCaps caps = {}, std::uint64_t seed = 1, std::shared_ptr<BasisCache> cache = nullptr);

  const EngineCaps& caps() const { return caps_; }
  std::uint64_t seed() const { return seed_; }
  const std::shared_ptr<BasisCache>& cache() const { return cache_; }

  /// Reduced Gröbner basis (Buchberger, sugar selection, Gebauer-Möller).
  GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order) const;
  GroebnerBasis groebner(const Ideal& ideal) const { return groebner(ideal, MonomialOrder::grevlex()); }

  Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) const;
  bool contains(const Ideal& ideal, const Polynomial& p) const;
  bool contains(const GroebnerBasis& gb, const Polynomial& p) const;
  bool is_subset(const Ideal& small, const Ideal& big) const;
  bool ideal_equal(const Ideal& a, const Ideal& b) const;
  bool is_unit(const Ideal& ideal) const;

  /// I intersected with the subring free of the dropped blocks, returned
  /// in the smaller ambient.
  Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop_blocks) const;
  /// Elimination ideal kept in the original ring.
  Ideal eliminate_in_place(const Ideal& ideal, const std::vector<std::string>& drop_blocks) const;

  /// I : g^infinity.
  Ideal saturate(const Ideal& ideal, const Polynomial& g) const;
  /// I : J^infinity = intersection over generator groups of I : g^infinity.
  /// Generators of J that share a multidegree are merged into one seeded
  /// random combination; pass exact = true to saturate by each one.
  Ideal saturate(const Ideal& ideal, const Ideal& by, bool exact = false) const;
  /// Saturation by the irrelevant ideal of every projective block.
  Ideal saturate_irrelevant(const Ideal& ideal) const;
  Ideal saturate_irrelevant(const Ideal& ideal, const std::string& block) const;
  /// I : J (one step).
  Ideal quotient(const Ideal& ideal, const Polynomial& g) const;

  Ideal intersect(const Ideal& a, const Ideal& b) const;
  Ideal intersect(const std::vector<Ideal>& ideals) const;

  /// p in sqrt(I), via 1 in I + (1 - u p).
  bool radical_member(const Polynomial& p, const Ideal& ideal) const;
  /// Every generator of `small` lies in sqrt(big).
  bool radical_subset(const Ideal& small, const Ideal& big) const;
  bool radical_equal(const Ideal& a, const Ideal& b) const;

  /// Requires a multihomogeneous ideal saturated with respect to every
  /// projective block; affine blocks are not allowed.
  HilbertData hilbert(const Ideal& ideal) const;
  HilbertData hilbert(const GroebnerBasis& gb) const;

  /// Dimension of k[vars]/I as a vector space; throws std::domain_error if
  /// the ideal is not zero-dimensional in the ring's variables.
  long zero_dim_count(const Ideal& ideal) const;

  std::uint64_t groebner_calls() const { return calls_.load(); }
  std::uint64_t memo_hits() const { return memo_hits_.load(); }
  /// Seed for a randomized step, derived from the engine seed and a salt.
  std::uint64_t derive_seed(const std::string& salt) const;

 private:
  Ideal saturate_by_variable(const Ideal& ideal, std::size_t var) const;
  Ideal saturate_by_linear_form(const Ideal& ideal, const Polynomial& form) const;
  Ideal saturate_rabinowitsch(const Ideal& ideal, const Polynomial& g) const;

  struct Memo {
    std::mutex mutex;
    std::list<std::string> order;  // most recent at front
    std::unordered_map<std::string, std::pair<GroebnerBasis, std::list<std::string>::iterator>> entries;
  };

  EngineCaps caps_;
  std::uint64_t seed_;
  std::shared_ptr<BasisCache> cache_;
  mutable std::atomic<std::uint64_t> calls_{0};
  mutable std::atomic<std::uint64_t> memo_hits_{0};
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// Independent Buchberger certificate: every S-polynomial of the basis
/// reduces to zero modulo the basis.
bool verify_buchberger_criterion(const GroebnerBasis& gb);

/// Stable 64-bit FNV-1a hash used for cache keys and seed derivation.
std::uint64_t stable_hash(const std::string& text);

}  // namespace conekit
