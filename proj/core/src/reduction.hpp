#pragma once

#include <vector>

#include "conekit/polynomial.hpp"

namespace conekit::detail {

/// Division of p by the reducers (first divisor wins). With full = false
/// only the leading term is reduced. `sugar`, if given, is raised to the
/// sugar degree of the result.
Polynomial reduce(const Polynomial& p, const std::vector<const Polynomial*>& reducers, bool full, unsigned* sugar);

}  // namespace conekit::detail
