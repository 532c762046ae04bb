#pragma once

#include "wdm/selmer/cocycle.hpp"

namespace wdm {

struct SelmerDims {
  long dim_e = 0, dim_f = 0, dim_g = 0;
  long hodge = 0;      // sum over i of dim gr_{-i} - dim gr_{-i} F0, before the deg factor
  long vge_fixed = 0;  // dim of the p phi = 1 part of vge
};

// deg = [K : Q_p]; the datum must be mixed with negative weights.
SelmerDims selmer_dims(const PhiNLieDatum& d, long deg, const WeilOptions& opts = {});
SelmerDims selmer_dims(const MixedSelmerContext& c, long deg);

}  // namespace wdm
