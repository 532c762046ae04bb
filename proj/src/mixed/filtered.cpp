#include "wdm/mixed/filtered.hpp"

#include <set>

namespace wdm {

Subspace FilteredWDRep::w(int i) const {
  auto it = W.upper_bound(i);
  if (it == W.begin()) return Subspace::zero(dim());
  if (it == W.end()) return Subspace::full(dim());
  return std::prev(it)->second;
}

FilteredWDRep pure_filtration(const WDRep& a, int i) {
  FilteredWDRep v{a, {}};
  v.W.emplace(i - 1, Subspace::zero(a.dim()));
  v.W.emplace(i, Subspace::full(a.dim()));
  return v;
}

std::vector<std::string> filtration_errors(const FilteredWDRep& v) {
  std::vector<std::string> out;
  const std::size_t n = v.dim();
  const Subspace* prev = nullptr;
  int prev_i = 0;
  for (const auto& [i, s] : v.W) {
    if (s.ambient() != n) {
      out.push_back("W_" + std::to_string(i) + " has ambient dimension " + std::to_string(s.ambient()));
      continue;
    }
    if (prev && !s.contains(*prev)) out.push_back("W_" + std::to_string(prev_i) + " is not contained in W_" + std::to_string(i));
    if (!is_stable(v.rep.phi, s)) out.push_back("W_" + std::to_string(i) + " is not phi-stable");
    if (!is_stable(v.rep.N, s)) out.push_back("W_" + std::to_string(i) + " is not N-stable");
    prev = &s;
    prev_i = i;
  }
  return out;
}

AdaptedBasis adapted_basis(const FilteredWDRep& v) {
  const std::size_t n = v.dim();
  std::vector<int> keys;
  for (const auto& kv : v.W) keys.push_back(kv.first);
  keys.push_back(keys.empty() ? 0 : keys.back() + 1);
  AdaptedBasis b;
  std::vector<Vec> chosen;
  Subspace cur = Subspace::zero(n);
  for (int i : keys) {
    Subspace wi = v.w(i);
    std::size_t start = chosen.size();
    for (std::size_t k = 0; k < wi.dim(); ++k) {
      Vec x = wi.basis_vector(k);
      if (cur.contains(x)) continue;
      chosen.push_back(x);
      b.weight.push_back(i);
      cur = cur + Subspace::span(n, {x});
    }
    if (chosen.size() > start) b.blocks[i] = {start, chosen.size() - start};
  }
  if (chosen.size() != n) throw DomainError("adapted_basis: filtration is not exhaustive");
  b.P = Matrix::from_columns(chosen, n);
  auto inv = inverse(b.P);
  if (!inv) throw DomainError("adapted_basis: internal error, basis is singular");
  b.Pinv = *inv;
  return b;
}

std::map<int, WDRep> graded_pieces(const FilteredWDRep& v, const AdaptedBasis& b) {
  Matrix phi = b.Pinv * v.rep.phi * b.P, N = b.Pinv * v.rep.N * b.P;
  std::map<int, WDRep> out;
  for (const auto& [i, blk] : b.blocks) {
    auto [off, sz] = blk;
    out.emplace(i, WDRep{v.rep.q, phi.block(off, off, sz, sz), N.block(off, off, sz, sz)});
  }
  return out;
}

FilteredWDRep associated_graded(const FilteredWDRep& v, const AdaptedBasis& b) {
  const std::size_t n = v.dim();
  Matrix phi(n, n), N(n, n);
  for (const auto& [i, g] : graded_pieces(v, b)) {
    std::size_t off = b.blocks.at(i).first;
    phi.set_block(off, off, g.phi);
    N.set_block(off, off, g.N);
  }
  FilteredWDRep out{WDRep{v.rep.q, phi, N}, {}};
  std::vector<Vec> gens;
  for (const auto& [i, blk] : b.blocks) {
    for (std::size_t k = 0; k < blk.second; ++k) gens.push_back(unit_vec(n, blk.first + k));
    out.W.emplace(i, Subspace::span(n, gens));
  }
  if (out.W.empty()) out.W.emplace(0, Subspace::zero(n));
  return out;
}

MixednessCertificate check_mixed(const FilteredWDRep& v, const WeilOptions& opts) {
  MixednessCertificate c;
  auto ax = check_axioms(v.rep);
  c.errors = ax.violations;
  for (auto& e : filtration_errors(v)) c.errors.push_back(std::move(e));
  if (!c.errors.empty()) return c;
  AdaptedBasis b = adapted_basis(v);
  c.mixed = true;
  for (const auto& [i, g] : graded_pieces(v, b)) {
    auto pc = is_pure(g, i, opts);
    if (!pc.pure) {
      c.mixed = false;
      c.errors.push_back("gr_" + std::to_string(i) + " is not pure of weight " + std::to_string(i) + ": " + pc.reason);
    }
    c.pieces.emplace(i, std::move(pc));
  }
  return c;
}

FilteredWDRep tensor(const FilteredWDRep& a, const FilteredWDRep& b) {
  AdaptedBasis ba = adapted_basis(a), bb = adapted_basis(b);
  Matrix P = kron(ba.P, bb.P);
  const std::size_t n = a.dim() * b.dim();
  std::map<int, std::vector<std::size_t>> cols;
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < b.dim(); ++y) cols[ba.weight[x] + bb.weight[y]].push_back(x * b.dim() + y);
  FilteredWDRep out{tensor(a.rep, b.rep), {}};
  std::vector<Vec> gens;
  for (const auto& [k, idx] : cols) {
    for (auto c : idx) gens.push_back(P.col(c));
    out.W.emplace(k, Subspace::span(n, gens));
  }
  if (out.W.empty()) out.W.emplace(0, Subspace::zero(n));
  return out;
}

FilteredWDRep direct_sum(const FilteredWDRep& a, const FilteredWDRep& b) {
  std::set<int> keys;
  for (const auto& kv : a.W) keys.insert(kv.first);
  for (const auto& kv : b.W) keys.insert(kv.first);
  const std::size_t n = a.dim() + b.dim();
  FilteredWDRep out{direct_sum(a.rep, b.rep), {}};
  for (int i : keys) {
    Subspace sa = a.w(i), sb = b.w(i);
    Matrix m(n, sa.dim() + sb.dim());
    m.set_block(0, 0, sa.basis());
    m.set_block(a.dim(), sa.dim(), sb.basis());
    out.W.emplace(i, Subspace::column_span(m));
  }
  return out;
}

FilteredWDRep transport(const FilteredWDRep& v, const Matrix& p) {
  auto pi = inverse(p);
  if (!pi) throw DomainError("transport: matrix is not invertible");
  FilteredWDRep out{WDRep{v.rep.q, p * v.rep.phi * *pi, p * v.rep.N * *pi}, {}};
  for (const auto& [i, s] : v.W) out.W.emplace(i, image(p, s));
  return out;
}

FilteredWDRep sub_rep(const FilteredWDRep& v, const Subspace& s) {
  FilteredWDRep out{WDRep{v.rep.q, restrict_map(v.rep.phi, s, s), restrict_map(v.rep.N, s, s)}, {}};
  for (const auto& [i, wi] : v.W) {
    Subspace x = intersect(wi, s);
    std::vector<Vec> coords;
    for (std::size_t k = 0; k < x.dim(); ++k) coords.push_back(s.coordinates(x.basis_vector(k)));
    out.W.emplace(i, Subspace::span(s.dim(), coords));
  }
  return out;
}

std::pair<FilteredWDRep, Matrix> quotient_rep(const FilteredWDRep& v, const Subspace& s) {
  const std::size_t n = v.dim();
  auto comp = s.complement_indices();
  Matrix B(n, n);
  B.set_block(0, 0, s.basis());
  for (std::size_t k = 0; k < comp.size(); ++k) B(comp[k], s.dim() + k) = 1;
  Matrix Binv = *inverse(B);
  Matrix pi = Binv.block(s.dim(), 0, comp.size(), n);
  Matrix lift = B.block(0, s.dim(), n, comp.size());
  FilteredWDRep out{WDRep{v.rep.q, pi * v.rep.phi * lift, pi * v.rep.N * lift}, {}};
  for (const auto& [i, wi] : v.W) out.W.emplace(i, image(pi, wi));
  return {out, pi};
}

Matrix graded_map(const AdaptedBasis& b1, const AdaptedBasis& b2, const Matrix& f) {
  Matrix F = b2.Pinv * f * b1.P;
  for (std::size_t a = 0; a < F.rows(); ++a)
    for (std::size_t c = 0; c < F.cols(); ++c) {
      if (b2.weight[a] > b1.weight[c] && F(a, c) != 0) throw DomainError("graded_map: map is not filtered");
      if (b2.weight[a] != b1.weight[c]) F(a, c) = 0;
    }
  return F;
}

Splitting canonical_splitting(const FilteredWDRep& v, bool verify_input) {
  AdaptedBasis b = adapted_basis(v);
  FilteredWDRep g = associated_graded(v, b);
  Matrix S = weak_lift(g, v, Matrix::identity(v.dim()), verify_input);
  return Splitting{S, b, g};
}

Matrix grading_operator(const Splitting& s) {
  Vec d;
  for (int w : s.basis.weight) d.push_back(Q(w));
  return s.S * Matrix::diagonal(d) * *inverse(s.S);
}

}  // namespace wdm
