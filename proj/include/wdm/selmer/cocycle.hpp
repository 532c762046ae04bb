#pragma once

#include <optional>

#include "wdm/mixed/structure.hpp"
#include "wdm/selmer/lie.hpp"

namespace wdm {

// (x, v, u): x in the de Rham group, v in the Lie algebra, u in the semistable
// group; group elements are log coordinates.
struct GCocycle {
  Vec x, v, u;
};

// A datum together with its group law.
class SelmerContext {
 public:
  explicit SelmerContext(PhiNLieDatum d);

  const PhiNLieDatum& datum() const { return d_; }
  const LieGroup& group() const { return g_; }
  std::size_t dim() const { return d_.dim(); }

  Vec phi(const Vec& u) const { return d_.phi * u; }
  Vec xi(const Vec& u) const { return g_.xi(d_.N, u); }

 private:
  PhiNLieDatum d_;
  LieGroup g_;
};

// v + xi_N(u) = p Ad_u(phi(v))
bool z1g_check(const SelmerContext& c, const GCocycle& z);
// Residual v + xi_N(u) - p Ad_u(phi(v)).
Vec z1g_residual(const SelmerContext& c, const Vec& v, const Vec& u);

// (w^{-1} x z, Ad_{w^{-1}}(v + xi_N(w)), w^{-1} u phi(w)); z must lie in F0.
GCocycle act_g(const SelmerContext& c, const GCocycle& z, const Vec& zf, const Vec& w);
// (x, u) -> (w^{-1} x z, w^{-1} u phi(w))
std::pair<Vec, Vec> act_f(const SelmerContext& c, const Vec& x, const Vec& u, const Vec& zf, const Vec& w);
// x -> w^{-1} x z, with w fixed by phi and killed by N.
Vec act_e(const SelmerContext& c, const Vec& x, const Vec& zf, const Vec& w);

// Kernel of phi - 1 on ker N: the Lie algebra of the crystalline phi-fixed group.
Subspace crystalline_fixed(const PhiNLieDatum& d);

// Datum that is mixed with negative weights, with its structure decomposition
// and the operator log Y (z^r -> r z^{r-1} on each block) in original coordinates.
class MixedSelmerContext : public SelmerContext {
 public:
  explicit MixedSelmerContext(PhiNLieDatum d, const WeilOptions& opts = {});

  const StructureDecomposition& structure() const { return sd_; }
  const WeightDecomposition& weights() const { return wd_; }
  const Matrix& log_y() const { return log_y_; }
  const Subspace& vge() const { return vge_; }
  const Subspace& vge_fixed() const { return vge_fixed_; }  // p phi = 1 part
  int lowest_weight() const;

 private:
  StructureDecomposition sd_;
  WeightDecomposition wd_;
  Matrix log_y_;
  Subspace vge_, vge_fixed_;
};

struct VgeResult {
  Subspace space;
  Subspace fixed;          // p phi = 1 part
  Subspace from_blocks;    // sum of the structure components V^{-j-2, j}
  Subspace from_log_y;     // ker(p phi - 1) cap ker log Y
};

// {x in V^{-2} : N^r x in W_{-r-2} for all r >= 0}, also computed from the
// structure components; throws if the two disagree.
VgeResult vge(const PhiNLieDatum& d, const WeilOptions& opts = {});
Subspace vge_direct(const FilteredWDRep& v, const WeightDecomposition& wd);
Subspace vge_from_blocks(const StructureDecomposition& sd);

}  // namespace wdm
