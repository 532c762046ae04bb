#include "wdm/selmer/lie.hpp"

#include <functional>

namespace wdm {

namespace {

void axpy(Vec& y, const Q& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

Vec scaled(const Vec& x, const Q& a) {
  Vec y = x;
  for (auto& e : y) e *= a;
  return y;
}

LieAlgebra::Sparse to_sparse(const Vec& v) {
  LieAlgebra::Sparse s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) s.emplace_back(k, v[k]);
  return s;
}

}  // namespace

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& br) {
  LieAlgebra g(dim);
  for (const auto& [i, j, v] : br) g.set_bracket(i, j, v);
  return g;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= n_ || j >= n_ || v.size() != n_) throw DomainError("set_bracket: index or length out of range");
  if (i == j && !is_zero(v)) throw DomainError("set_bracket: [e_i, e_i] must vanish");
  c_[i * n_ + j] = to_sparse(v);
  c_[j * n_ + i] = to_sparse(scaled(v, Q(-1)));
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vec out(n_, Q(0));
  for (const auto& [k, c] : c_[i * n_ + j]) out[k] = c;
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(n_, Q(0));
  std::vector<std::size_t> nx, ny;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] != 0) nx.push_back(i);
    if (y[i] != 0) ny.push_back(i);
  }
  Q t;
  for (auto i : nx)
    for (auto j : ny) {
      const auto& s = c_[i * n_ + j];
      if (s.empty()) continue;
      t = x[i] * y[j];
      for (const auto& [k, c] : s) out[k] += t * c;
    }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vec e(n_, Q(0));
    e[j] = 1;
    m.set_col(j, bracket(x, e));
  }
  return m;
}

std::vector<std::tuple<std::size_t, std::size_t, Vec>> LieAlgebra::brackets() const {
  std::vector<std::tuple<std::size_t, std::size_t, Vec>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!c_[i * n_ + j].empty()) out.emplace_back(i, j, basis_bracket(i, j));
  return out;
}

std::vector<std::string> LieAlgebra::axiom_errors() const {
  std::vector<std::string> errs;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!c_[i * n_ + i].empty()) errs.push_back("[e" + std::to_string(i) + ", e" + std::to_string(i) + "] != 0");
    for (std::size_t j = i + 1; j < n_; ++j) {
      Vec a = basis_bracket(i, j), b = basis_bracket(j, i);
      axpy(a, Q(1), b);
      if (!is_zero(a)) errs.push_back("bracket not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k) {
        Vec ei(n_, Q(0)), ej(n_, Q(0)), ek(n_, Q(0));
        ei[i] = ej[j] = ek[k] = 1;
        Vec s = bracket(ei, basis_bracket(j, k));
        axpy(s, Q(1), bracket(ej, basis_bracket(k, i)));
        axpy(s, Q(1), bracket(ek, basis_bracket(i, j)));
        if (!is_zero(s))
          errs.push_back("Jacobi fails at (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
      }
  return errs;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  std::vector<Subspace> series{Subspace::full(n_)};
  while (series.back().dim() > 0) {
    SpanBuilder next(n_);
    const Matrix& b = series.back().basis();
    for (std::size_t i = 0; i < n_; ++i) {
      Vec ei(n_, Q(0));
      ei[i] = 1;
      for (std::size_t c = 0; c < b.cols(); ++c) next.add(bracket(ei, b.col(c)));
    }
    Subspace s = next.subspace();
    if (s.dim() == series.back().dim()) throw DomainError("Lie algebra is not nilpotent");
    series.push_back(std::move(s));
  }
  return series;
}

std::size_t LieAlgebra::nilpotency_class() const { return lower_central_series().size() - 1; }

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  const Matrix& b = s.basis();
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t j = i + 1; j < b.cols(); ++j)
      if (!s.contains(bracket(b.col(i), b.col(j)))) return false;
  return true;
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  const Matrix& b = s.basis();
  for (std::size_t i = 0; i < n_; ++i) {
    Vec ei(n_, Q(0));
    ei[i] = 1;
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (!s.contains(bracket(ei, b.col(c)))) return false;
  }
  return true;
}

bool LieAlgebra::is_hom(const Matrix& f) const {
  const auto cols = f.columns();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (f * basis_bracket(i, j) != bracket(cols[i], cols[j])) return false;
  return true;
}

bool LieAlgebra::is_derivation(const Matrix& d) const {
  const auto cols = d.columns();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      Vec ei(n_, Q(0)), ej(n_, Q(0));
      ei[i] = ej[j] = 1;
      Vec rhs = bracket(cols[i], ej);
      axpy(rhs, Q(1), bracket(ei, cols[j]));
      if (d * basis_bracket(i, j) != rhs) return false;
    }
  return true;
}

Q bernoulli(long n) {
  // B_0..B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0, with B_1 = -1/2.
  std::vector<Q> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    Q s = 0;
    for (long k = 0; k < m; ++k) s += Q(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -s / Q(m + 1);
  }
  return b[static_cast<std::size_t>(n)];
}

LieGroup::LieGroup(LieAlgebra g) : g_(std::move(g)), class_(g_.nilpotency_class()) {}

Vec LieGroup::mul(const Vec& x, const Vec& y) const {
  // Homogeneous BCH components from
  // (n+1) Z_{n+1} = 1/2 [x - y, Z_n]
  //   + sum_{p >= 1, 2p <= n} B_{2p}/(2p)! sum_{k_1+..+k_{2p} = n} [Z_{k_1}, [..., [Z_{k_{2p}}, x + y]..]].
  const std::size_t n = g_.dim();
  std::vector<Vec> Z(class_ + 1);
  Vec xpy = x, xmy = x;
  axpy(xpy, Q(1), y);
  axpy(xmy, Q(-1), y);
  Vec out = identity();
  if (class_ == 0) return out;
  Z[1] = xpy;
  for (std::size_t m = 1; m < class_; ++m) {
    Vec next = scaled(g_.bracket(xmy, Z[m]), frac(1, 2));
    for (std::size_t p = 1; 2 * p <= m; ++p) {
      const Q coef = bernoulli(static_cast<long>(2 * p)) / Q(factorial(static_cast<long>(2 * p)));
      Vec acc(n, Q(0));
      // Compositions of m into 2p positive parts, innermost bracket last.
      std::vector<std::size_t> parts(2 * p, 1);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t left) {
        if (slot + 1 == parts.size()) {
          parts[slot] = left;
          Vec t = xpy;
          for (std::size_t s = parts.size(); s-- > 0;) {
            t = g_.bracket(Z[parts[s]], t);
            if (is_zero(t)) return;
          }
          axpy(acc, Q(1), t);
          return;
        }
        for (std::size_t k = 1; k + (parts.size() - slot - 1) <= left; ++k) {
          parts[slot] = k;
          rec(slot + 1, left - k);
        }
      };
      rec(0, m);
      axpy(next, coef, acc);
    }
    Z[m + 1] = scaled(next, frac(1, static_cast<long>(m + 1)));
  }
  for (std::size_t m = 1; m <= class_; ++m) axpy(out, Q(1), Z[m]);
  return out;
}

Vec LieGroup::inv(const Vec& a) const { return scaled(a, Q(-1)); }

Vec LieGroup::conj_inv_mul(const Vec& w, const Vec& u, const Vec& z) const { return mul(mul(inv(w), u), z); }

Vec LieGroup::Ad(const Vec& u, const Vec& v) const {
  Vec out = v, term = v;
  for (long k = 1; !is_zero(term); ++k) {
    term = scaled(g_.bracket(u, term), frac(1, k));
    axpy(out, Q(1), term);
  }
  return out;
}

Vec LieGroup::xi(const Matrix& N, const Vec& x) const {
  Vec term = N * x;
  Vec out = term;
  for (long k = 1; !is_zero(term); ++k) {
    term = scaled(g_.bracket(x, term), frac(1, k + 1));
    axpy(out, Q(1), term);
  }
  return out;
}

std::vector<std::string> datum_errors(const PhiNLieDatum& d) {
  std::vector<std::string> errs = d.lie.axiom_errors();
  const std::size_t n = d.dim();
  if (!errs.empty()) return errs;
  try {
    d.lie.nilpotency_class();
  } catch (const DomainError& e) {
    errs.push_back(e.what());
  }
  if (d.p < 2) errs.push_back("p must be at least 2");
  if (d.phi.rows() != n || d.phi.cols() != n) errs.push_back("phi has the wrong shape");
  if (d.N.rows() != n || d.N.cols() != n) errs.push_back("N has the wrong shape");
  if (!errs.empty()) return errs;
  if (det(d.phi) == 0) errs.push_back("phi is not invertible");
  if (!d.lie.is_hom(d.phi)) errs.push_back("phi is not a Lie algebra map");
  if (!d.lie.is_derivation(d.N)) errs.push_back("N is not a derivation");
  if (d.N * d.phi != Q(d.p) * d.phi * d.N) errs.push_back("N phi != p phi N");
  for (const auto& [i, s] : d.W) {
    if (s.ambient() != n) {
      errs.push_back("W_" + std::to_string(i) + " has the wrong ambient dimension");
      continue;
    }
    if (!d.lie.is_ideal(s)) errs.push_back("W_" + std::to_string(i) + " is not an ideal");
  }
  if (errs.empty())
    for (auto& e : filtration_errors(d.filtered())) errs.push_back(e);
  if (d.F0.ambient() != n)
    errs.push_back("F0 has the wrong ambient dimension");
  else if (!d.lie.is_subalgebra(d.F0))
    errs.push_back("F0 is not a subalgebra");
  return errs;
}

void require_negative_mixed(const PhiNLieDatum& d, const WeilOptions& opts) {
  auto errs = datum_errors(d);
  if (!errs.empty()) throw DomainError("invalid datum: " + errs.front());
  FilteredWDRep v = d.filtered();
  if (v.w(-1) != Subspace::full(d.dim())) throw DomainError("datum has nonnegative weights: W_{-1} is not everything");
  MixednessCertificate c = check_mixed(v, opts);
  if (!c.mixed) {
    std::string why = c.errors.empty() ? "a graded piece is not pure" : c.errors.front();
    for (const auto& [i, piece] : c.pieces)
      if (!piece.pure) {
        why = "gr_" + std::to_string(i) + " is not pure: " + piece.reason;
        break;
      }
    throw DomainError("datum is not mixed: " + why);
  }
}

PhiNLieDatum transport(const PhiNLieDatum& d, const Matrix& t) {
  auto ti = inverse(t);
  if (!ti) throw DomainError("transport: matrix is not invertible");
  const std::size_t n = d.dim();
  LieAlgebra g(n);
  const auto cols = ti->columns();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.set_bracket(i, j, t * d.lie.bracket(cols[i], cols[j]));
  PhiNLieDatum out{std::move(g), d.p, t * d.phi * *ti, t * d.N * *ti, {}, image(t, d.F0)};
  for (const auto& [i, s] : d.W) out.W.emplace(i, image(t, s));
  return out;
}

PhiNLieDatum sub_datum(const PhiNLieDatum& d, const Subspace& z) {
  if (!d.lie.is_subalgebra(z)) throw DomainError("sub_datum: not a subalgebra");
  const std::size_t m = z.dim();
  const Matrix& b = z.basis();
  LieAlgebra g(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) g.set_bracket(i, j, z.coordinates(d.lie.bracket(b.col(i), b.col(j))));
  auto restrict_sub = [&](const Subspace& s) {
    Subspace x = intersect(s, z);
    std::vector<Vec> coords;
    for (std::size_t k = 0; k < x.dim(); ++k) coords.push_back(z.coordinates(x.basis_vector(k)));
    return Subspace::span(m, coords);
  };
  PhiNLieDatum out{std::move(g), d.p, restrict_map(d.phi, z, z), restrict_map(d.N, z, z), {}, restrict_sub(d.F0)};
  for (const auto& [i, s] : d.W) out.W.emplace(i, restrict_sub(s));
  return out;
}

PhiNLieDatum quotient_datum(const PhiNLieDatum& d, const Subspace& z) {
  if (!d.lie.is_ideal(z)) throw DomainError("quotient_datum: not an ideal");
  const std::size_t n = d.dim();
  auto comp = z.complement_indices();
  Matrix B(n, n);
  B.set_block(0, 0, z.basis());
  for (std::size_t k = 0; k < comp.size(); ++k) B(comp[k], z.dim() + k) = 1;
  Matrix Binv = *inverse(B);
  Matrix pi = Binv.block(z.dim(), 0, comp.size(), n);
  Matrix lift = B.block(0, z.dim(), n, comp.size());
  const std::size_t m = comp.size();
  LieAlgebra g(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) g.set_bracket(i, j, pi * d.lie.bracket(lift.col(i), lift.col(j)));
  PhiNLieDatum out{std::move(g), d.p, pi * d.phi * lift, pi * d.N * lift, {}, image(pi, d.F0)};
  for (const auto& [i, s] : d.W) out.W.emplace(i, image(pi, s));
  return out;
}

}  // namespace wdm
