#include "wdm/selmer/cocycle.hpp"

#include <algorithm>

namespace wdm {

namespace {

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec scale(Vec a, const Q& s) {
  for (auto& x : a) x *= s;
  return a;
}

void check_len(const SelmerContext& c, const Vec& v, const char* what) {
  if (v.size() != c.dim()) throw DomainError(std::string(what) + " has the wrong length");
}

}  // namespace

SelmerContext::SelmerContext(PhiNLieDatum d) : d_(std::move(d)), g_(d_.lie) {
  auto errs = datum_errors(d_);
  if (!errs.empty()) throw DomainError("invalid datum: " + errs.front());
}

Vec z1g_residual(const SelmerContext& c, const Vec& v, const Vec& u) {
  check_len(c, v, "v");
  check_len(c, u, "u");
  return sub(add(v, c.xi(u)), scale(c.group().Ad(u, c.phi(v)), Q(c.datum().p)));
}

bool z1g_check(const SelmerContext& c, const GCocycle& z) { return is_zero(z1g_residual(c, z.v, z.u)); }

GCocycle act_g(const SelmerContext& c, const GCocycle& z, const Vec& zf, const Vec& w) {
  check_len(c, z.x, "x");
  check_len(c, zf, "z");
  check_len(c, w, "w");
  if (!c.datum().F0.contains(zf)) throw DomainError("act_g: z is not in the F0 subgroup");
  const LieGroup& g = c.group();
  const Vec wi = g.inv(w);
  return GCocycle{g.conj_inv_mul(w, z.x, zf), g.Ad(wi, add(z.v, c.xi(w))), g.mul(g.mul(wi, z.u), c.phi(w))};
}

std::pair<Vec, Vec> act_f(const SelmerContext& c, const Vec& x, const Vec& u, const Vec& zf, const Vec& w) {
  check_len(c, x, "x");
  check_len(c, u, "u");
  if (!c.datum().F0.contains(zf)) throw DomainError("act_f: z is not in the F0 subgroup");
  const LieGroup& g = c.group();
  return {g.conj_inv_mul(w, x, zf), g.mul(g.mul(g.inv(w), u), c.phi(w))};
}

Vec act_e(const SelmerContext& c, const Vec& x, const Vec& zf, const Vec& w) {
  check_len(c, x, "x");
  if (!c.datum().F0.contains(zf)) throw DomainError("act_e: z is not in the F0 subgroup");
  if (c.phi(w) != w || !is_zero(c.datum().N * w)) throw DomainError("act_e: w is not fixed by phi and killed by N");
  return c.group().conj_inv_mul(w, x, zf);
}

Subspace crystalline_fixed(const PhiNLieDatum& d) {
  const std::size_t n = d.dim();
  return kernel(vstack(d.phi - Matrix::identity(n), d.N));
}

Subspace vge_direct(const FilteredWDRep& v, const WeightDecomposition& wd) {
  Subspace s = wd.part(-2);
  Matrix nr = Matrix::identity(v.dim());
  for (int r = 0; s.dim() > 0 && r <= static_cast<int>(v.dim()); ++r) {
    s = intersect(s, preimage(nr, v.w(-r - 2)));
    nr = v.rep.N * nr;
  }
  return s;
}

Subspace vge_from_blocks(const StructureDecomposition& sd) {
  Subspace s = Subspace::zero(sd.embedding.rows());
  for (const auto& b : sd.blocks)
    if (b.i == -b.j - 2) s = s + b.space;
  return s;
}

MixedSelmerContext::MixedSelmerContext(PhiNLieDatum d, const WeilOptions& opts) : SelmerContext(std::move(d)) {
  require_negative_mixed(datum(), opts);
  const FilteredWDRep v = datum().filtered();
  sd_ = structure_decompose(v, opts);
  wd_ = weight_spaces(v.rep, opts);
  const std::size_t n = dim();
  Matrix L(n, n);
  std::size_t off = 0;
  for (const auto& b : sd_.blocks) {
    const std::size_t m = static_cast<std::size_t>(b.j) + 1;
    for (std::size_t t = 0; t < b.space.dim(); ++t)
      for (std::size_t r = 1; r < m; ++r) L(off + t * m + r - 1, off + t * m + r) = Q(static_cast<long>(r));
    off += b.space.dim() * m;
  }
  log_y_ = sd_.embedding * L * sd_.inverse;
  vge_ = vge_direct(v, wd_);
  if (vge_ != vge_from_blocks(sd_)) throw DomainError("vge: defining conditions and structure components disagree");
  vge_fixed_ = intersect(vge_, kernel(Q(datum().p) * datum().phi - Matrix::identity(n)));
}

int MixedSelmerContext::lowest_weight() const {
  int lo = 0;
  for (const auto& b : sd_.blocks) lo = std::min(lo, b.i);
  return lo;
}

VgeResult vge(const PhiNLieDatum& d, const WeilOptions& opts) {
  MixedSelmerContext c(d, opts);
  const std::size_t n = d.dim();
  VgeResult r;
  r.space = c.vge();
  r.fixed = c.vge_fixed();
  r.from_blocks = vge_from_blocks(c.structure());
  r.from_log_y = intersect(kernel(Q(d.p) * d.phi - Matrix::identity(n)), kernel(c.log_y()));
  return r;
}

}  // namespace wdm
