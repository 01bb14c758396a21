#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "conekit/groebner.hpp"
#include "conekit/subscheme.hpp"

namespace conekit {

/// Hypersurface X = V(f) in P^{n+1} together with the splitting index h.
/// Coordinates x0..x_{a-1} span the fixed subspace P^{a-1}, a = n+2-h;
/// x_a..x_{n+1} are the moving directions.
struct ConeData {
  std::string name = "custom";
  int n = 0;
  int h = 0;
  std::string f_text;
  Field field = Field::rationals();
  std::uint64_t genericity_seed = 1;

  int a() const { return n + 2 - h; }
  /// P^{n+1} with coordinates x0..x_{n+1}.
  RingPtr x_ring() const;
  Polynomial f() const;
  unsigned degree() const { return f().total_degree(); }
};

/// Validates ranges, homogeneity, degree >= 2, and that the
/// characteristic does not divide the degree (the Euler relation is used
/// by the smoothness test). Throws std::invalid_argument.
ConeData make_cone_data(std::string name, int n, int h, std::string f_text, Field field,
                        std::uint64_t genericity_seed = 1);

const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);
ConeData preset(const std::string& name, Field field, std::uint64_t genericity_seed = 1);

/// Default primes: the working prime and the one used for agreement.
constexpr std::uint32_t kDefaultPrime = 31991;
constexpr std::uint32_t kAgreementPrime = 32003;

/// Linear sections used by the construction.
enum class Section {
  whole,       // X itself
  fixed_part,  // V^h = X cut by x_a..x_{n+1}
  complement,  // V^{n+1-h} = X cut by x1..x_{a-1}
};

struct SmoothnessReport {
  Section section = Section::whole;
  int expected_dimension = 0;
  int dimension = -1;
  /// Dimension of the singular locus; -1 when smooth.
  int singular_dimension = -1;
  bool smooth() const { return singular_dimension < 0 && dimension == expected_dimension; }
};

/// Jacobian criterion on the section viewed as a hypersurface of its
/// coordinate subspace.
SmoothnessReport check_smoothness(const Engine& engine, const ConeData& cd, Section section);

/// Coordinates cutting the section out of P^{n+1}.
std::vector<std::size_t> section_coordinates(const ConeData& cd, Section section);
/// Ideal of the section inside X (f plus the cutting coordinates).
Ideal section_ideal(const ConeData& cd, Section section);

/// First-order term of f along the moving directions.
///
/// In the steady chart, x = b0 + b1 with b1 in span(z e_a - e0, e_{a+1}, ...),
/// and g1 is the (t-1)-coefficient of f(b0 + b1) - f(b0 + t b1). It is
/// computed in affine (t, z) coordinates, the z-power is stripped, and the
/// result is homogenized to (z0, z1).
struct Expansion {
  /// Ring z(2) x(n+2).
  Polynomial g1;
  /// Lowest r with g_r nonzero; 0 when every coefficient vanishes.
  unsigned order = 0;
  unsigned z_degree = 0;
  bool nonzero = false;
  bool z_dependent = false;
  bool generic() const { return order == 1 && nonzero && z_dependent; }
};

Expansion expansion_g(const ConeData& cd);

/// Independent oracle: -b1 . grad f, cleared of the 1/z denominator,
/// in the same ring as Expansion::g1.
Polynomial directional_oracle(const ConeData& cd);

struct GenericityReport {
  SmoothnessReport hypersurface;
  SmoothnessReport fixed_part;
  SmoothnessReport complement;
  Expansion expansion;
  /// Only smoothness of X and the expansion gate the scenario; the plane
  /// sections are reported.
  bool accepted() const { return hypersurface.smooth() && expansion.generic(); }
};

GenericityReport check_genericity(const Engine& engine, const ConeData& cd);

/// The transformation g_t^z as a matrix acting on column vectors:
/// e0..e_{a-1} fixed, e_a -> t(z e_a - e0), e_i -> t e_i for i > a.
/// Throws std::invalid_argument for t = 0 or z = 0.
std::vector<std::vector<Scalar>> build_gtz(const ConeData& cd, const Scalar& t, const Scalar& z);
Scalar determinant(std::vector<std::vector<Scalar>> m);

/// A cycle on X given by an ideal in the x-block.
struct DeltaSpec {
  enum class Kind { linear_section, point_set, custom };
  Kind kind = Kind::custom;
  std::string label;
  /// Ring of ConeData::x_ring().
  Ideal ideal;
  int dimension = -1;
  int codim_in_x = 0;
};

std::string to_string(DeltaSpec::Kind kind);

/// Points given by integral coordinates.
DeltaSpec delta_points(const Engine& engine, const ConeData& cd, const std::vector<std::vector<long>>& points,
                       std::string label);
DeltaSpec delta_custom(const Engine& engine, const ConeData& cd, const std::vector<std::string>& generators,
                       std::string label);
/// The section cut by `codim` seeded random hyperplanes.
DeltaSpec delta_linear_section(const Engine& engine, const ConeData& cd, Section on, int codim,
                               const std::string& salt);
/// One F_p-rational point of the section; nullopt over Q or when sampling
/// fails.
std::optional<DeltaSpec> delta_random_point(const Engine& engine, const ConeData& cd, Section on,
                                            const std::string& salt);

/// f lies in sqrt(ideal) and the ideal is not irrelevant.
bool delta_on(const Engine& engine, const ConeData& cd, const DeltaSpec& delta, Section section);

}  // namespace conekit
