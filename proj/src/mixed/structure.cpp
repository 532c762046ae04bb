#include "wdm/mixed/structure.hpp"

namespace wdm {

Subspace StructureDecomposition::component(int i, int j) const {
  for (const auto& b : blocks)
    if (b.i == i && b.j == j) return b.space;
  return Subspace::zero(embedding.rows());
}

Subspace structure_component(const FilteredWDRep& v, const WeightDecomposition& wd, int i, int j) {
  const std::size_t n = v.dim();
  Subspace s = intersect(v.w(i), wd.part(i + j));
  Matrix nk = mat_pow(v.rep.N, static_cast<unsigned>(j));
  for (int r = 1; s.dim() > 0; ++r) {
    nk = v.rep.N * nk;
    if (nk.is_zero()) break;
    s = intersect(s, preimage(nk, v.w(i - r - 1)));
    if (static_cast<std::size_t>(r) > n) break;
  }
  return s;
}

StructureDecomposition structure_decompose(const FilteredWDRep& v, const WeilOptions& opts) {
  auto cert = check_mixed(v, opts);
  if (!cert.mixed) {
    std::string msg = "structure_decompose: input is not mixed";
    for (const auto& e : cert.errors) msg += "; " + e;
    throw DomainError(msg);
  }
  const std::size_t n = v.dim();
  StructureDecomposition sd;
  sd.splitting = canonical_splitting(v, false);
  const AdaptedBasis& ab = sd.splitting.basis;
  const FilteredWDRep& gr = sd.splitting.graded;
  WeightDecomposition wd = weight_spaces(v.rep, opts);
  std::vector<Matrix> cols;
  for (const auto& [i, blk] : ab.blocks) {
    for (const auto& [k, part] : wd.parts) {
      if (k < i || part.dim() == 0) continue;
      const int j = k - i;
      Subspace s = structure_component(v, wd, i, j);
      if (s.dim() == 0) continue;
      WDRep base{v.rep.q, restrict_map(v.rep.phi, s, s), Matrix(s.dim(), s.dim())};
      FilteredWDRep src = pure_filtration(tensor(base, make_std(j, v.rep.q)), i);
      const std::size_t m = static_cast<std::size_t>(j) + 1;
      Matrix g(n, s.dim() * m);
      for (std::size_t t = 0; t < s.dim(); ++t) {
        Vec x = ab.Pinv * s.basis_vector(t);
        for (std::size_t a = 0; a < n; ++a)
          if (ab.weight[a] != i) x[a] = 0;
        Z jf = factorial(j);
        for (std::size_t r = 0; r < m; ++r) {
          g.set_col(t * m + r, frac(factorial(j - static_cast<long>(r)), jf) * x);
          x = gr.rep.N * x;
        }
      }
      Matrix e = weak_lift(src, v, g, false);
      if (e != sd.splitting.S * g) throw DomainError("structure_decompose: block lift disagrees with the canonical splitting");
      for (std::size_t t = 0; t < s.dim(); ++t)
        if (e.col(t * m) != s.basis_vector(t)) throw DomainError("structure_decompose: block lift moves V^{i,j}");
      cols.push_back(e);
      sd.blocks.push_back(StructureBlock{i, j, s, e, g});
    }
  }
  Matrix E(n, 0);
  for (const auto& c : cols) E = hstack(E, c);
  if (E.cols() != n) throw DomainError("structure_decompose: blocks have total dimension " + std::to_string(E.cols()));
  auto inv = inverse(E);
  if (!inv) throw DomainError("structure_decompose: assembled map is not invertible");
  sd.embedding = E;
  sd.inverse = *inv;
  return sd;
}

std::vector<CGComponent> clebsch_gordan(long j1, long j2, const Z& q) {
  if (j1 < 0 || j2 < 0) throw DomainError("clebsch_gordan: negative index");
  WDRep t = tensor(make_std(j1, q), make_std(j2, q));
  const std::size_t n = t.dim();
  const std::size_t m2 = static_cast<std::size_t>(j2) + 1;
  // Raising operator z^r -> r z^{r-1} on each factor.
  auto raising = [](long j) {
    Matrix y(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(j + 1));
    for (long r = 1; r <= j; ++r) y(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(r)) = r;
    return y;
  };
  Matrix Y = kron(raising(j1), Matrix::identity(m2)) + kron(Matrix::identity(static_cast<std::size_t>(j1 + 1)), raising(j2));
  // Orbit of x under N; generates std_j(r) iff the orbit has exactly j + 1 independent vectors.
  auto orbit_of = [&](const Vec& g, long j) {
    Matrix o(n, static_cast<std::size_t>(j) + 1);
    Vec x = g;
    for (long k = 0; k <= j; ++k) {
      o.set_col(static_cast<std::size_t>(k), x);
      x = t.N * x;
    }
    bool ok = is_zero(x) && rank(o) == o.cols();
    return std::make_pair(o, ok);
  };
  std::vector<CGComponent> out;
  Matrix all(n, 0);
  for (long r = 0; r <= std::min(j1, j2); ++r) {
    CGComponent c;
    c.r = r;
    c.j = j1 + j2 - 2 * r;
    c.generator = zero_vec(n);
    c.binomial_vector = zero_vec(n);
    for (long r1 = 0; r1 <= r; ++r1) {
      long r2 = r - r1;
      std::size_t idx = static_cast<std::size_t>(r1) * m2 + static_cast<std::size_t>(r2);
      Q sign = r2 % 2 ? -1 : 1;
      c.generator[idx] = sign * Q(binomial(r, r1));
      c.binomial_vector[idx] = sign * Q(binomial(j1 - r2, r1) * binomial(j2 - r1, r2));
    }
    const Q eig = pow(Q(q), -r);
    if (t.phi * c.generator != eig * c.generator) throw DomainError("clebsch_gordan: generator has the wrong eigenvalue");
    if (!is_zero(Y * c.generator)) throw DomainError("clebsch_gordan: generator is not a lowest-weight vector");
    auto [orbit, ok] = orbit_of(c.generator, c.j);
    if (!ok) throw DomainError("clebsch_gordan: orbit has the wrong length");
    c.orbit = orbit;
    c.binomial_vector_generates = orbit_of(c.binomial_vector, c.j).second &&
                                  Subspace::column_span(orbit_of(c.binomial_vector, c.j).first) == Subspace::column_span(orbit);
    all = hstack(all, c.orbit);
    out.push_back(std::move(c));
  }
  if (rank(all) != n) throw DomainError("clebsch_gordan: orbits do not span the tensor product");
  return out;
}

}  // namespace wdm
