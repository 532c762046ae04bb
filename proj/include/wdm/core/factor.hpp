#pragma once

#include <vector>

#include "wdm/core/poly.hpp"

namespace wdm {

struct Factor {
  Poly poly;  // primitive integer polynomial with positive leading coefficient
  unsigned multiplicity;
};

struct Factorization {
  Q content;  // input = content * prod(poly^multiplicity)
  std::vector<Factor> factors;
};

// Irreducible factorization over Q. Square-free decomposition, then a
// small-prime distinct/equal-degree split, Hensel lifting and recombination.
// Degree is limited to 64.
Factorization factor_z(const Poly& p);

// Integer content cleared, sign normalized: returns (c, f) with p = c * f.
std::pair<Q, Poly> primitive_part(const Poly& p);

}  // namespace wdm
