#include "wdm/selmer/normalize.hpp"

namespace wdm {

namespace {

// Number of weights -1, -2, ... that carry a nonzero W step.
int depth(const PhiNLieDatum& d) {
  FilteredWDRep v{WDRep{d.p, d.phi, d.N}, d.W};
  int k = 0;
  while (v.w(-k - 1).dim() > 0) {
    ++k;
    if (k > static_cast<int>(d.dim()) + 1 && v.w(-k).dim() == d.dim())
      throw DomainError("weight filtration does not reach zero");
  }
  return k;
}

Vec neg(Vec a) {
  for (auto& x : a) x = -x;
  return a;
}

}  // namespace

Vec normalize_f(const SelmerContext& c, const Vec& u) {
  const PhiNLieDatum& d = c.datum();
  const std::size_t n = d.dim();
  if (u.size() != n) throw DomainError("normalize_f: u has the wrong length");
  if (!is_zero(d.N * u)) throw DomainError("normalize_f: u is not crystalline (N log u != 0)");
  const FilteredWDRep v = d.filtered();
  if (v.w(-1) != Subspace::full(n)) throw DomainError("normalize_f: datum has nonnegative weights");
  const LieGroup& g = c.group();
  const Subspace crys = kernel(d.N);
  const Matrix phi1 = d.phi - Matrix::identity(n);
  Vec w = g.identity();
  const int K = depth(d);
  for (int k = 1; k <= K; ++k) {
    const Vec r = g.mul(g.mul(g.inv(w), u), c.phi(w));
    const Subspace lower = v.w(-k - 1);
    if (lower.contains(r)) continue;
    const Matrix B = intersect(v.w(-k), crys).basis();
    const Matrix ann = lower.annihilator();
    auto sol = solve(ann * phi1 * B, neg(ann * r));
    if (!sol) throw DomainError("normalize_f: phi - 1 is not invertible on gr_" + std::to_string(-k));
    w = g.mul(w, B * *sol);
  }
  if (!is_zero(g.mul(g.mul(g.inv(w), u), c.phi(w)))) throw DomainError("normalize_f: substitution check failed");
  return w;
}

GNormalForm normalize_g(const MixedSelmerContext& c, const Vec& v_in, const Vec& u_in) {
  const PhiNLieDatum& d = c.datum();
  const std::size_t n = d.dim();
  if (v_in.size() != n || u_in.size() != n) throw DomainError("normalize_g: input has the wrong length");
  if (!is_zero(z1g_residual(c, v_in, u_in))) throw DomainError("normalize_g: (v, u) does not satisfy the cocycle condition");
  const LieGroup& g = c.group();
  const StructureDecomposition& sd = c.structure();
  const FilteredWDRep fv = d.filtered();
  const Matrix phi1 = d.phi - Matrix::identity(n);
  const Q p(d.p);

  Vec v = v_in, u = u_in, w = g.identity();
  for (int k = 1; k <= -c.lowest_weight(); ++k) {
    const Vec a = sd.inverse * v;
    const Vec l = sd.inverse * u;
    Vec y(n, Q(0));  // -log of the correction, in block coordinates
    std::size_t off = 0;
    for (const auto& b : sd.blocks) {
      const std::size_t m = static_cast<std::size_t>(b.j) + 1, s = b.space.dim();
      if (b.i == -k) {
        const long j = b.j;
        for (std::size_t t = 0; t < s; ++t)
          for (long r = 0; r < j; ++r)
            y[off + t * m + static_cast<std::size_t>(r)] = a[off + t * m + static_cast<std::size_t>(r) + 1] / Q(j - r);
        Matrix M = (Q(1) / pow(p, j)) * restrict_map(d.phi, b.space, b.space) - Matrix::identity(s);
        auto Mi = inverse(M);
        if (!Mi)
          throw DomainError("normalize_g: p^{-j} phi - 1 is not invertible on block (i, j) = (" + std::to_string(b.i) +
                            ", " + std::to_string(b.j) + ")");
        Vec top(s);
        for (std::size_t t = 0; t < s; ++t) top[t] = l[off + t * m + static_cast<std::size_t>(j)];
        Vec sol = *Mi * top;
        for (std::size_t t = 0; t < s; ++t) y[off + t * m + static_cast<std::size_t>(j)] = sol[t];
      }
      off += s * m;
    }
    const Vec cstep = neg(sd.embedding * y);
    const Matrix ann = fv.w(-k - 1).annihilator();
    Vec vn = v;
    const Vec nc = d.N * cstep;
    for (std::size_t i = 0; i < n; ++i) vn[i] += nc[i];
    Vec ua = phi1 * cstep;
    for (std::size_t i = 0; i < n; ++i) ua[i] += u[i];
    if (!is_zero(ann * ua) || !is_zero(ann * (c.log_y() * vn)))
      throw DomainError("normalize_g: correction at weight " + std::to_string(-k) + " does not normalize");
    GCocycle next = act_g(c, GCocycle{g.identity(), v, u}, g.identity(), cstep);
    v = next.v;
    u = next.u;
    w = g.mul(w, cstep);
  }
  if (!is_zero(u)) throw DomainError("normalize_g: u did not reach 1");
  if (!c.vge_fixed().contains(v)) throw DomainError("normalize_g: result is not in the p phi = 1 part of vge");
  GCocycle check = act_g(c, GCocycle{g.identity(), v_in, u_in}, g.identity(), w);
  if (check.v != v || !is_zero(check.u)) throw DomainError("normalize_g: acting by the accumulated element disagrees");
  return GNormalForm{v, w};
}

}  // namespace wdm
