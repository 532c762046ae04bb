#include "wdm/selmer/dims.hpp"

namespace wdm {

SelmerDims selmer_dims(const MixedSelmerContext& c, long deg) {
  if (deg < 1) throw DomainError("selmer_dims: deg must be at least 1");
  const PhiNLieDatum& d = c.datum();
  const FilteredWDRep v = d.filtered();
  SelmerDims out;
  for (int i = 1; v.w(-i).dim() > 0; ++i) {
    const long gr = static_cast<long>(v.w(-i).dim()) - static_cast<long>(v.w(-i - 1).dim());
    const long hodge = static_cast<long>(intersect(d.F0, v.w(-i)).dim()) -
                       static_cast<long>(intersect(d.F0, v.w(-i - 1)).dim());
    out.hodge += gr - hodge;
  }
  out.vge_fixed = static_cast<long>(c.vge_fixed().dim());
  out.dim_e = out.dim_f = deg * out.hodge;
  out.dim_g = out.dim_f + out.vge_fixed;
  return out;
}

SelmerDims selmer_dims(const PhiNLieDatum& d, long deg, const WeilOptions& opts) {
  return selmer_dims(MixedSelmerContext(d, opts), deg);
}

}  // namespace wdm
