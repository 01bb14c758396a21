#pragma once

#include <string>
#include <vector>

#include "conekit/groebner.hpp"
#include "conekit/poly_io.hpp"

namespace conekit::testing {

inline RingPtr affine_ring(const std::vector<std::string>& names, Field f = Field::prime(31991),
                           MonomialOrder o = MonomialOrder::grevlex()) {
  std::vector<Block> blocks;
  for (const auto& n : names) blocks.push_back(Block{n, 1, false});
  return make_ring(AmbientSpace(blocks), f, o);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

inline Ideal I(const RingPtr& r, const std::vector<std::string>& gens) { return Ideal::parse(r, gens); }

inline std::vector<std::string> printed(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.basis) out.push_back(print_polynomial(g));
  return out;
}

}  // namespace conekit::testing
