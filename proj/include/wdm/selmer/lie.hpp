#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wdm/mixed/filtered.hpp"

namespace wdm {

// Finite-dimensional Lie algebra over Q given by sparse structure constants.
class LieAlgebra {
 public:
  using Sparse = std::vector<std::pair<std::size_t, Q>>;

  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : n_(dim), c_(dim * dim) {}
  // Abelian algebra of the given dimension.
  static LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }
  // [e_i, e_j] from a dense vector; [e_j, e_i] is set to the negative.
  static LieAlgebra from_brackets(std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& br);

  std::size_t dim() const { return n_; }
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);  // also sets [e_j, e_i]
  Vec basis_bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(const Vec& x) const;
  // Nonzero entries of [e_i, e_j] for i < j, for serialization.
  std::vector<std::tuple<std::size_t, std::size_t, Vec>> brackets() const;

  // Antisymmetry and Jacobi on basis triples.
  std::vector<std::string> axiom_errors() const;
  // Number of steps for the lower central series to reach 0; throws if it stalls.
  std::size_t nilpotency_class() const;
  std::vector<Subspace> lower_central_series() const;

  bool is_subalgebra(const Subspace& s) const;
  bool is_ideal(const Subspace& s) const;
  bool is_hom(const Matrix& f) const;         // f[x,y] = [fx, fy]
  bool is_derivation(const Matrix& d) const;  // d[x,y] = [dx,y] + [x,dy]

 private:
  std::size_t n_ = 0;
  std::vector<Sparse> c_;  // c_[i*n+j] = [e_i, e_j]
};

Q bernoulli(long n);

// Exact group law on log coordinates.
class LieGroup {
 public:
  explicit LieGroup(LieAlgebra g);
  const LieAlgebra& algebra() const { return g_; }
  std::size_t nilpotency_class() const { return class_; }
  Vec identity() const { return Vec(g_.dim(), Q(0)); }
  Vec mul(const Vec& a, const Vec& b) const;  // BCH, terminating
  Vec inv(const Vec& a) const;
  Vec conj_inv_mul(const Vec& w, const Vec& u, const Vec& z) const;  // w^{-1} u z
  // exp(ad u) v
  Vec Ad(const Vec& u, const Vec& v) const;
  // sum_k ad_x^k (N x) / (k+1)!
  Vec xi(const Matrix& N, const Vec& x) const;

 private:
  LieAlgebra g_;
  std::size_t class_ = 0;
};

// Lie algebra with Frobenius, monodromy, weight filtration and a Hodge
// subalgebra F0. Frobenius and monodromy satisfy N phi = p phi N.
struct PhiNLieDatum {
  LieAlgebra lie;
  Z p = 2;
  Matrix phi, N;
  std::map<int, Subspace> W;
  Subspace F0;

  std::size_t dim() const { return lie.dim(); }
  FilteredWDRep filtered() const { return FilteredWDRep{WDRep{p, phi, N}, W}; }
};

// Every violated invariant of the datum; mixedness is not checked here.
std::vector<std::string> datum_errors(const PhiNLieDatum& d);

// Throws DomainError unless the datum is valid and mixed with W_{-1} = everything.
void require_negative_mixed(const PhiNLieDatum& d, const WeilOptions& opts = {});

// Datum transported along an isomorphism of Lie algebras t: phi, N, W, F0 move with it.
PhiNLieDatum transport(const PhiNLieDatum& d, const Matrix& t);

// Central ideal z as a sub-datum, and the quotient datum on the complement coordinates.
PhiNLieDatum sub_datum(const PhiNLieDatum& d, const Subspace& z);
PhiNLieDatum quotient_datum(const PhiNLieDatum& d, const Subspace& z);

}  // namespace wdm
