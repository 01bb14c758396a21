#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace conekit::detail {

/// Dense univariate polynomial over F_p, coefficients low degree first.
using UPoly = std::vector<std::uint64_t>;

/// Distinct roots in F_p, sorted ascending. Cantor-Zassenhaus splitting of
/// gcd(f, x^p - x); brute force for tiny p.
std::vector<std::uint64_t> roots_mod_p(UPoly f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace conekit::detail
