#include "wdm/mixed/filtered.hpp"

namespace wdm {

namespace {

struct Adapted {
  AdaptedBasis b;
  Matrix phi, N;
};

Adapted adapt(const FilteredWDRep& v) {
  Adapted a{adapted_basis(v), {}, {}};
  a.phi = a.b.Pinv * v.rep.phi * a.b.P;
  a.N = a.b.Pinv * v.rep.N * a.b.P;
  return a;
}

Matrix block_diagonal_part(const Matrix& m, const std::vector<int>& w) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (w[a] == w[c]) out(a, c) = m(a, c);
  return out;
}

std::vector<Matrix> powers(const Matrix& n, std::size_t k) {
  std::vector<Matrix> p{Matrix::identity(n.rows())};
  for (std::size_t i = 1; i <= k; ++i) p.push_back(n * p.back());
  return p;
}

// sum_s C(r,s)(-1)^s N2^{r-s} F N1^s
Matrix hom_monodromy(const std::vector<Matrix>& p2, const std::vector<Matrix>& p1, const Matrix& F, std::size_t r) {
  Matrix m(F.rows(), F.cols());
  for (std::size_t s = 0; s <= r; ++s) {
    Q c(binomial(static_cast<long>(r), static_cast<long>(s)));
    if (s % 2) c = -c;
    m += c * (p2[r - s] * F * p1[s]);
  }
  return m;
}

// Checks every condition on F' in adapted coordinates.
std::string violation(const Adapted& x1, const Adapted& x2, const Matrix& grf, const Matrix& F,
                      const std::vector<Matrix>& p1, const std::vector<Matrix>& p2) {
  const auto& w1 = x1.b.weight;
  const auto& w2 = x2.b.weight;
  for (std::size_t a = 0; a < F.rows(); ++a)
    for (std::size_t c = 0; c < F.cols(); ++c) {
      if (w2[a] > w1[c] && F(a, c) != 0) return "not filtered";
      if (w2[a] == w1[c] && F(a, c) != grf(a, c)) return "wrong associated graded";
    }
  if (x2.phi * F != F * x1.phi) return "not Frobenius-equivariant";
  const std::size_t R = F.rows() + F.cols();
  for (std::size_t r = 1; r <= R; ++r) {
    Matrix m = hom_monodromy(p2, p1, F, r);
    for (std::size_t a = 0; a < F.rows(); ++a)
      for (std::size_t c = 0; c < F.cols(); ++c)
        if (w2[a] > w1[c] - static_cast<int>(r) - 1 && m(a, c) != 0)
          return "monodromy condition fails at r = " + std::to_string(r);
  }
  return {};
}

}  // namespace

Matrix weak_lift(const FilteredWDRep& v1, const FilteredWDRep& v2, const Matrix& grf, bool verify_inputs) {
  if (v1.rep.q != v2.rep.q) throw DomainError("weak_lift: representations have different q");
  if (verify_inputs) {
    auto c1 = check_mixed(v1), c2 = check_mixed(v2);
    if (!c1.mixed) throw DomainError("weak_lift: source is not mixed");
    if (!c2.mixed) throw DomainError("weak_lift: target is not mixed");
  }
  const std::size_t d1 = v1.dim(), d2 = v2.dim();
  if (grf.rows() != d2 || grf.cols() != d1) throw DomainError("weak_lift: graded map has the wrong shape");
  Adapted x1 = adapt(v1), x2 = adapt(v2);
  const auto& w1 = x1.b.weight;
  const auto& w2 = x2.b.weight;
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t c = 0; c < d1; ++c)
      if (w2[a] != w1[c] && grf(a, c) != 0) throw DomainError("weak_lift: graded map is not block diagonal");
  Matrix gphi1 = block_diagonal_part(x1.phi, w1), gphi2 = block_diagonal_part(x2.phi, w2);
  Matrix gn1 = block_diagonal_part(x1.N, w1), gn2 = block_diagonal_part(x2.N, w2);
  if (gphi2 * grf != grf * gphi1 || gn2 * grf != grf * gn1)
    throw DomainError("weak_lift: graded map is not a morphism of graded representations");

  // Unknowns: entries lowering the weight.
  std::vector<std::pair<std::size_t, std::size_t>> unk;
  std::vector<std::vector<long>> index(d2, std::vector<long>(d1, -1));
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t c = 0; c < d1; ++c)
      if (w2[a] < w1[c]) {
        index[a][c] = static_cast<long>(unk.size());
        unk.emplace_back(a, c);
      }
  const std::size_t nu = unk.size();
  const std::size_t R = d1 + d2;
  auto p1 = powers(x1.N, R), p2 = powers(x2.N, R);

  Matrix F = grf;
  if (nu > 0) {
    IncrementalSolver solver(nu);
    auto done = [&] { return solver.rank() == nu || !solver.consistent(); };
    // Frobenius equivariance: (phi2 F - F phi1)(a, c) = 0.
    Matrix base = x2.phi * grf - grf * x1.phi;
    for (std::size_t a = 0; a < d2 && !done(); ++a)
      for (std::size_t c = 0; c < d1 && !done(); ++c) {
        if (w2[a] >= w1[c]) continue;
        Vec row(nu);
        bool any = false;
        for (std::size_t e = 0; e < d2; ++e)
          if (index[e][c] >= 0 && x2.phi(a, e) != 0) {
            row[static_cast<std::size_t>(index[e][c])] += x2.phi(a, e);
            any = true;
          }
        for (std::size_t e = 0; e < d1; ++e)
          if (index[a][e] >= 0 && x1.phi(e, c) != 0) {
            row[static_cast<std::size_t>(index[a][e])] -= x1.phi(e, c);
            any = true;
          }
        if (!any && base(a, c) == 0) continue;
        solver.add(std::move(row), -base(a, c));
      }
    // Monodromy conditions, lowest r first.
    for (std::size_t r = 1; r <= R && !done(); ++r) {
      Matrix mb = hom_monodromy(p2, p1, grf, r);
      std::vector<Q> coef;
      for (std::size_t s = 0; s <= r; ++s) {
        Q cs(binomial(static_cast<long>(r), static_cast<long>(s)));
        coef.push_back(s % 2 ? Q(-cs) : cs);
      }
      for (std::size_t a = 0; a < d2 && !done(); ++a)
        for (std::size_t c = 0; c < d1 && !done(); ++c) {
          int lo = w1[c] - static_cast<int>(r);
          if (w2[a] < lo || w2[a] > w1[c]) continue;
          Vec row(nu);
          bool any = false;
          for (std::size_t k = 0; k < nu; ++k) {
            auto [e, g] = unk[k];
            Q acc = 0;
            for (std::size_t s = 0; s <= r; ++s) {
              const Q& A = p2[r - s](a, e);
              if (A == 0) continue;
              const Q& B = p1[s](g, c);
              if (B == 0) continue;
              acc += coef[s] * A * B;
            }
            if (acc != 0) {
              row[k] = acc;
              any = true;
            }
          }
          if (!any && mb(a, c) == 0) continue;
          solver.add(std::move(row), -mb(a, c));
        }
    }
    if (!solver.consistent()) throw DomainError("weak_lift: the linear conditions have no solution");
    if (solver.rank() < nu)
      throw DomainError("weak_lift: solution space has dimension " + std::to_string(nu - solver.rank()));
    Vec sol = *solver.unique_solution();
    for (std::size_t k = 0; k < nu; ++k) F(unk[k].first, unk[k].second) = sol[k];
  }
  std::string bad = violation(x1, x2, grf, F, p1, p2);
  if (!bad.empty()) throw DomainError("weak_lift: no solution (" + bad + ")");
  return x2.b.P * F * x1.b.Pinv;
}

bool is_weak_lift(const FilteredWDRep& v1, const FilteredWDRep& v2, const Matrix& grf, const Matrix& f) {
  Adapted x1 = adapt(v1), x2 = adapt(v2);
  const std::size_t R = v1.dim() + v2.dim();
  auto p1 = powers(x1.N, R), p2 = powers(x2.N, R);
  Matrix F = x2.b.Pinv * f * x1.b.P;
  return violation(x1, x2, grf, F, p1, p2).empty();
}

}  // namespace wdm
