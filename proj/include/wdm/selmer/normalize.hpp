#pragma once

#include "wdm/selmer/cocycle.hpp"

namespace wdm {

// The unique w in the crystalline group (log w in ker N) with w^{-1} u phi(w) = 1,
// built weight by weight; u must itself be crystalline.
Vec normalize_f(const SelmerContext& c, const Vec& u);

struct GNormalForm {
  Vec v0;  // in the p phi = 1 part of vge
  Vec w;   // (v, u) . w = (v0, 1)
};

// Weight induction: at weight -k the correction is read off the structure
// components of v and log u, then (v, u) is acted on by it.
GNormalForm normalize_g(const MixedSelmerContext& c, const Vec& v, const Vec& u);

}  // namespace wdm
