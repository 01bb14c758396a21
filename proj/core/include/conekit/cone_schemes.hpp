#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conekit/cone_data.hpp"
#include "conekit/subscheme.hpp"

namespace conekit {

/// Point of P^1 in the (t0 : t1) or (z0 : z1) convention: affine value
/// t1/t0, so 1 is (1:1), 0 is (1:0) and infinity is (0:1).
std::vector<Scalar> p1_point(const Field& field, long v0, long v1);

/// p (a polynomial in the x-block) rewritten in `block` of `target`.
/// Coordinates at index >= `keep` are set to zero.
Polynomial move_to_block(const Polynomial& p, const RingPtr& target, const std::string& block,
                         std::size_t keep = ~std::size_t{0});
Ideal move_to_block(const Ideal& ideal, const RingPtr& target, const std::string& block,
                    std::size_t keep = ~std::size_t{0});

/// 2x2 minors x_i y_j - x_j y_i over index pairs i < j in [lo, hi).
std::vector<Polynomial> block_minors(const RingPtr& ring, const std::string& u, const std::string& v,
                                     std::size_t lo, std::size_t hi);

/// Result of the dominance rule on a family over P^1(t).
struct FamilyEnd {
  /// Closed support at the requested t, in the last factor (block "y").
  Subscheme support;
  /// Eliminant of the dominant part in the t-block; (0) when dominant.
  Ideal t_residual;
  bool dominant() const { return t_residual.is_zero(); }
};

/// Builds and memoizes the named schemes of one cone datum. Not
/// thread-safe; use one builder per scenario.
class ConeBuilder {
 public:
  ConeBuilder(const Engine& engine, ConeData cd);

  const ConeData& data() const { return cd_; }
  const Engine& engine() const { return engine_; }

  /// P^1(t) x P^1(z) x P^{n+1}(x) x P^{n+1}(y).
  const RingPtr& master() const { return master_; }
  /// P^{n+1}(x) x P^{n+1}(y).
  const RingPtr& pair_ring() const { return pair_; }
  /// P^1(z) x P^{n+1}(x) x P^{a-1}(y): home of G and Gamma.
  const RingPtr& projection_ring() const { return proj_; }

  /// The map (t, z, x) -> y whose graph closure is Omega.
  RationalMapSpec kappa() const;
  /// Homogenized defining system of Omega, unsaturated.
  Ideal omega_equations() const;
  const Subscheme& omega();
  const Subscheme& omega_graph();

  /// E_0 (r = 0) or E_h (r = h) in pair_ring().
  Subscheme e(int r) const;

  /// Omega cut by f(x) and f(y), unsaturated.
  Ideal sigma_equations();
  const Subscheme& sigma();
  /// Fiber of Sigma at t with the t-block dropped; saturated after
  /// substitution, which avoids saturating Sigma itself.
  Subscheme sigma_fiber(const std::vector<Scalar>& t);
  /// {1} x Upsilon x Diagonal_X in the master ring.
  Ideal diagonal_component() const;
  const Subscheme& theta();
  /// Upsilon x Diagonal_X in the ring left after fixing t.
  Subscheme diagonal_in_fiber(const RingPtr& ring) const;
  /// f(x) and the x/y minors: cuts Upsilon x Diagonal_X up to the
  /// irrelevant locus {x = 0}.
  Ideal diagonal_equations(const RingPtr& ring) const;

  /// (z, x) -> (z1 x0 + z0 x_a, z1 x1, ..., z1 x_{a-1}).
  RationalMapSpec projection() const;
  const Subscheme& g();
  const Subscheme& gamma();
  Subscheme gamma1() const;
  Subscheme gamma2() const;
  const Subscheme& ih();

  /// The dominating family over P^1 for delta, ended at t. Built from
  /// Sigma rather than Theta: both agree after saturating by t1 - t0, and
  /// the diagonal component lies over t = 1.
  FamilyEnd cone_family_end(const DeltaSpec& delta, const std::vector<Scalar>& t);
  /// The dominating family itself, so several ends share one saturation.
  Subscheme cone_family(const DeltaSpec& delta);
  FamilyEnd family_end(const Subscheme& family, const std::vector<Scalar>& t) const;
  /// I_h restricted over delta (delta pulled back to the y-block), in
  /// projection_ring().
  Subscheme ih_over(const DeltaSpec& delta);
  /// Image in X (x-block ring) of I_h restricted over delta.
  Subscheme con_h(const DeltaSpec& delta);

  /// Span of e0 and e_a, as a subscheme of P^{n+1}(x).
  Subscheme upsilon_line() const;

 private:
  Polynomial var(const RingPtr& ring, const std::string& name) const { return Polynomial::variable(ring, name); }

  const Engine& engine_;
  ConeData cd_;
  RingPtr master_;
  RingPtr pair_;
  RingPtr proj_;
  std::optional<Subscheme> omega_, omega_graph_, sigma_, theta_, g_, gamma_, ih_;
};

}  // namespace conekit
