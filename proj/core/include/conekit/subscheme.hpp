#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "conekit/groebner.hpp"

namespace conekit {

/// Closed subscheme of a product of projective spaces, stored as an ideal
/// saturated with respect to every projective block.
class Subscheme {
 public:
  Subscheme() = default;

  /// Saturates by each block's irrelevant ideal.
  static Subscheme from_ideal(const Engine& engine, const Ideal& ideal);
  /// For ideals known to be saturated (images of saturated ideals,
  /// explicit equations of named components). Not re-checked.
  static Subscheme trusted(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const AmbientSpace& ambient() const { return ideal_.ambient(); }

  HilbertData hilbert(const Engine& engine) const { return engine.hilbert(ideal_); }
  int dimension(const Engine& engine) const { return hilbert(engine).dimension; }
  long degree(const Engine& engine) const { return hilbert(engine).degree; }
  bool is_empty(const Engine& engine) const { return dimension(engine) < 0; }

  /// Scheme-theoretic intersection (ideal sum, re-saturated).
  Subscheme intersect(const Engine& engine, const Subscheme& other) const;

 private:
  explicit Subscheme(Ideal ideal) : ideal_(std::move(ideal)) {}
  Ideal ideal_;
};

/// Rational map from `source` to the projective block `target`, given by
/// one form per target coordinate, all of the same multidegree.
struct RationalMapSpec {
  AmbientSpace source;
  Block target;
  std::vector<Polynomial> forms;
};

/// Projective coordinates per block.
using BlockPoint = std::map<std::string, std::vector<Scalar>>;

/// Graph closure: 2x2 minors of [target; forms] saturated by the base
/// locus. When some form is a monomial, saturating by it alone is exact
/// (the graph over its complement is dense in the irreducible closure);
/// otherwise a seeded generic combination of the forms is used.
Subscheme graph_closure(const Engine& engine, const RationalMapSpec& map);

/// S intersected with the given block points, kept in S's ambient.
Subscheme fiber(const Engine& engine, const Subscheme& s, const BlockPoint& at);
/// Fiber with the assigned blocks dropped (their coordinates substituted).
Subscheme fiber_projected(const Engine& engine, const Subscheme& s, const BlockPoint& at);
/// Image under the projection forgetting `drop_blocks`.
Subscheme project(const Engine& engine, const Subscheme& s, const std::vector<std::string>& drop_blocks);

/// Ideal of the point `at` for one block (2x2 minors against the point).
std::vector<Polynomial> point_equations(const RingPtr& ring, const std::string& block,
                                        const std::vector<Scalar>& coords);

struct ComponentCheck {
  bool contained = false;       // V(C) inside V(S)
  bool saturation_moves = false;  // S : C^inf differs from S
  bool maximal = false;         // C not inside the closure of V(S) minus V(C)
  bool is_component() const { return contained && maximal; }
};

/// Certifies that the prime candidate C is an irreducible component of
/// V(S). Maximality is decided exactly: some generator of S : I(C)^inf
/// must be outside sqrt(I(C)).
ComponentCheck is_component(const Engine& engine, const Subscheme& s, const Subscheme& c);
/// Same, saturating by `cut`, any ideal whose zero set agrees with V(C)
/// away from the irrelevant loci. Short generating sets are much cheaper
/// than the saturated ideal of C.
ComponentCheck is_component(const Engine& engine, const Subscheme& s, const Subscheme& c, const Ideal& cut);

/// sqrt(I(S)) == sqrt(intersection of the parts).
bool union_certify(const Engine& engine, const Subscheme& s, const std::vector<Subscheme>& parts);

struct MultiplicityReport {
  Subscheme component;
  mpq_class multiplicity;
  long component_degree = 0;
  long total_degree = 0;
  long residual_degree = 0;
  int dimension = -1;
  bool integral = true;
};

/// Multiplicity of C in S, as deg(S : (intersection of others)^inf) / deg C.
/// `integral` is false when the division is not exact.
MultiplicityReport component_multiplicity(const Engine& engine, const Subscheme& s, const Subscheme& c,
                                          const std::vector<Subscheme>& others);

/// Join of two subschemes of the same single projective block.
Subscheme join(const Engine& engine, const Subscheme& a, const Subscheme& b);

struct Cycle {
  std::vector<std::pair<Subscheme, mpq_class>> components;
  int dimension = -1;
};

mpq_class cycle_degree(const Engine& engine, const Cycle& cycle);

/// A point of S over the prime field, found by random charts and linear
/// slices down to dimension zero. Deterministic in (engine seed, salt).
std::optional<BlockPoint> random_point(const Engine& engine, const Subscheme& s, const std::string& salt,
                                       int trials = 40);

/// Every generator of S vanishes at the point.
bool point_lies_on(const Subscheme& s, const BlockPoint& point);

std::string describe_point(const BlockPoint& point);

}  // namespace conekit
