#include "wdm/wdrep/wdrep.hpp"

#include <algorithm>

#include "wdm/core/factor.hpp"

namespace wdm {

AxiomReport check_axioms(const WDRep& a) {
  AxiomReport r;
  auto fail = [&](std::string s) {
    r.ok = false;
    r.violations.push_back(std::move(s));
  };
  if (a.q < 2) fail("q must be at least 2");
  if (!a.phi.square()) fail("phi is not square");
  if (a.N.rows() != a.phi.rows() || a.N.cols() != a.phi.cols()) fail("N and phi have different shapes");
  if (!r.ok) return r;
  if (a.dim() > 0 && det(a.phi) == 0) fail("phi is not invertible");
  if (!is_nilpotent(a.N)) fail("N is not nilpotent");
  if (a.N * a.phi != Q(a.q) * (a.phi * a.N)) fail("N phi != q phi N");
  return r;
}

WDRep make_wdrep(const Z& q, Matrix phi, Matrix N) {
  WDRep a{q, std::move(phi), std::move(N)};
  auto r = check_axioms(a);
  if (!r.ok) {
    std::string msg = "invalid Weil-Deligne representation:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw DomainError(msg);
  }
  return a;
}

WDRep trivial_rep(const Z& q, std::size_t dim) { return WDRep{q, Matrix::identity(dim), Matrix(dim, dim)}; }

WDRep make_std(long j, const Z& q, long r) {
  if (j < 0) throw DomainError("make_std: j must be nonnegative");
  if (q < 2) throw DomainError("make_std: q must be at least 2");
  const std::size_t n = static_cast<std::size_t>(j + 1);
  Matrix phi(n, n), N(n, n);
  for (long s = 0; s <= j; ++s) {
    const auto i = static_cast<std::size_t>(s);
    phi(i, i) = pow(Q(q), -s - r);
    if (s < j) N(i + 1, i) = j - s;
  }
  return WDRep{q, phi, N};
}

namespace {
void same_q(const WDRep& a, const WDRep& b) {
  if (a.q != b.q) throw DomainError("representations have different q");
}
}  // namespace

WDRep tensor(const WDRep& a, const WDRep& b) {
  same_q(a, b);
  Matrix ia = Matrix::identity(a.dim()), ib = Matrix::identity(b.dim());
  return WDRep{a.q, kron(a.phi, b.phi), kron(a.N, ib) + kron(ia, b.N)};
}

WDRep dual(const WDRep& a) {
  auto inv = inverse(a.phi);
  if (!inv) throw DomainError("dual: phi is not invertible");
  return WDRep{a.q, inv->transpose(), -a.N.transpose()};
}

WDRep twist(const WDRep& a, long n) { return WDRep{a.q, pow(Q(a.q), -n) * a.phi, a.N}; }

WDRep direct_sum(const WDRep& a, const WDRep& b) {
  same_q(a, b);
  return WDRep{a.q, wdm::direct_sum(a.phi, b.phi), wdm::direct_sum(a.N, b.N)};
}

Subspace WeightDecomposition::part(int i) const {
  auto it = parts.find(i);
  return it == parts.end() ? Subspace::zero(unclassified.ambient()) : it->second;
}

namespace {

bool is_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

// Diagonal phi: group coordinate vectors by eigenvalue.
WeightDecomposition diagonal_weights(const Matrix& phi, const Z& q, const WeilOptions& opts) {
  const std::size_t n = phi.rows();
  std::map<Q, std::vector<std::size_t>> by_value;
  for (std::size_t i = 0; i < n; ++i) by_value[phi(i, i)].push_back(i);
  WeightDecomposition wd;
  std::map<int, std::vector<Vec>> gens;
  std::vector<Vec> rest;
  for (const auto& [val, idx] : by_value) {
    Poly f = primitive_part(Poly::linear_root(val)).second;
    auto w = weil_weight(f, q, opts);
    wd.factors.push_back({f, static_cast<unsigned>(idx.size()), w, idx.size()});
    for (auto i : idx) (w ? gens[*w] : rest).push_back(unit_vec(n, i));
  }
  for (auto& [w, g] : gens) wd.parts.emplace(w, Subspace::span(n, g));
  wd.unclassified = Subspace::span(n, rest);
  return wd;
}

}  // namespace

WeightDecomposition weight_spaces(const Matrix& phi, const Z& q, const WeilOptions& opts) {
  const std::size_t n = phi.rows();
  if (n == 0) return WeightDecomposition{{}, Subspace::zero(0), {}};
  if (is_diagonal(phi)) return diagonal_weights(phi, q, opts);
  WeightDecomposition wd;
  auto fz = factor_z(char_poly(phi));
  std::map<int, Subspace> parts;
  Subspace rest = Subspace::zero(n);
  for (const auto& fa : fz.factors) {
    auto w = weil_weight(fa.poly, q, opts);
    Subspace k = kernel(pow(fa.poly, fa.multiplicity).eval(phi));
    wd.factors.push_back({fa.poly, fa.multiplicity, w, k.dim()});
    if (w) {
      auto it = parts.find(*w);
      if (it == parts.end()) parts.emplace(*w, k);
      else it->second = it->second + k;
    } else {
      rest = rest + k;
    }
  }
  wd.parts = std::move(parts);
  wd.unclassified = rest;
  return wd;
}

WeightDecomposition weight_spaces(const WDRep& a, const WeilOptions& opts) { return weight_spaces(a.phi, a.q, opts); }

PurityCertificate is_pure(const WDRep& a, int i, const WeightDecomposition& wd) {
  PurityCertificate c;
  c.weight = i;
  if (wd.unclassified.dim() > 0) {
    c.reason = "Frobenius has eigenvalues that are not q-Weil numbers";
    return c;
  }
  int reach = 0;
  for (const auto& [w, s] : wd.parts)
    if (s.dim() > 0) reach = std::max(reach, std::abs(w - i));
  c.pure = true;
  Matrix nj = Matrix::identity(a.dim());
  for (int j = 0; j <= reach; ++j) {
    if (j > 0) nj = a.N * nj;
    Subspace src = wd.part(i + j), dst = wd.part(i - j);
    PurityStep st{j, src.dim(), dst.dim(), 0};
    if (src.dim() > 0) st.rank = rank(nj * src.basis());
    c.steps.push_back(st);
    if (st.rank != st.dim_source || st.rank != st.dim_target) {
      if (c.pure) c.reason = "N^" + std::to_string(j) + " is not an isomorphism from weight " + std::to_string(i + j) + " to weight " + std::to_string(i - j);
      c.pure = false;
    }
  }
  return c;
}

PurityCertificate is_pure(const WDRep& a, int i, const WeilOptions& opts) { return is_pure(a, i, weight_spaces(a, opts)); }

bool is_frobenius_semisimple(const Matrix& phi) {
  if (phi.rows() == 0) return true;
  Poly cp = char_poly(phi);
  Poly sf = divmod(cp, gcd(cp, cp.derivative())).first;
  return sf.eval(phi).is_zero();
}

bool is_frobenius_semisimple(const WDRep& a) { return is_frobenius_semisimple(a.phi); }

}  // namespace wdm
