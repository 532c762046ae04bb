#pragma once

#include "wdm/core/matrix.hpp"

namespace wdm {

// Subspace of Q^n. The basis is stored in reduced column-echelon form, so
// two subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient), basis_(ambient, 0) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& gens);
  static Subspace column_span(const Matrix& gens);
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t k) const { return basis_.col(k); }
  // Row index of the leading entry of each basis column.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  // Coordinates of v in the stored basis; v must lie in the subspace.
  Vec coordinates(const Vec& v) const;
  // Rows spanning the annihilator: A v = 0 iff v is in the subspace.
  Matrix annihilator() const;
  // Standard basis vectors completing the stored basis, in index order.
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace image(const Matrix& m, const Subspace& s);
Subspace image(const Matrix& m);
Subspace kernel(const Matrix& m);
// {x : m x in s}
Subspace preimage(const Matrix& m, const Subspace& s);
bool is_stable(const Matrix& m, const Subspace& s);

// Accumulates a span one vector at a time, keeping only independent ones.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient) : n_(ambient), solver_(ambient) {}
  // True if v enlarged the span.
  bool add(const Vec& v);
  std::size_t dim() const { return kept_.size(); }
  bool full() const { return kept_.size() == n_; }
  Subspace subspace() const { return Subspace::span(n_, kept_); }

 private:
  std::size_t n_;
  IncrementalSolver solver_;
  std::vector<Vec> kept_;
};

// Matrix of m : src -> dst in the stored bases; m(src) must lie in dst.
Matrix restrict_map(const Matrix& m, const Subspace& src, const Subspace& dst);

}  // namespace wdm
