#include "wdm/core/subspace.hpp"

namespace wdm {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& gens) {
  Subspace s(ambient);
  if (gens.empty()) return s;
  auto rr = rref(Matrix::from_rows(gens, ambient));
  s.basis_ = rr.r.block(0, 0, rr.rank, ambient).transpose();
  s.pivots_ = rr.pivots;
  return s;
}

Subspace Subspace::column_span(const Matrix& gens) { return span(gens.rows(), gens.columns()); }

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  return c;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != n_) throw DomainError("ambient dimension mismatch");
  Vec c = coordinates(v);
  return basis_ * c == v;
}

bool Subspace::contains(const Subspace& s) const {
  for (std::size_t k = 0; k < s.dim(); ++k)
    if (!contains(s.basis_vector(k))) return false;
  return true;
}

Matrix Subspace::annihilator() const {
  if (dim() == 0) return Matrix::identity(n_);
  return kernel_basis(basis_.transpose()).transpose();
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> piv(n_, false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DomainError("subspace sum: dimension mismatch");
  auto gens = a.basis().columns();
  for (auto& v : b.basis().columns()) gens.push_back(std::move(v));
  return Subspace::span(a.ambient(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DomainError("subspace intersection: dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
  return image(a.basis(), preimage(a.basis(), b));
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw DomainError("image: dimension mismatch");
  return Subspace::column_span(m * s.basis());
}

Subspace image(const Matrix& m) { return Subspace::column_span(m); }

Subspace kernel(const Matrix& m) { return Subspace::column_span(kernel_basis(m)); }

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient()) throw DomainError("preimage: dimension mismatch");
  if (s.dim() == s.ambient()) return Subspace::full(m.cols());
  return kernel(s.annihilator() * m);
}

bool is_stable(const Matrix& m, const Subspace& s) { return s.contains(image(m, s)); }

}  // namespace wdm

namespace wdm {

Matrix restrict_map(const Matrix& m, const Subspace& src, const Subspace& dst) {
  Matrix img = m * src.basis();
  Matrix out(dst.dim(), src.dim());
  for (std::size_t c = 0; c < src.dim(); ++c) {
    Vec v = img.col(c);
    if (!dst.contains(v)) throw DomainError("restrict_map: image leaves the target subspace");
    out.set_col(c, dst.coordinates(v));
  }
  return out;
}

}  // namespace wdm

namespace wdm {

bool SpanBuilder::add(const Vec& v) {
  if (v.size() != n_) throw DomainError("SpanBuilder: length mismatch");
  if (full() || is_zero(v)) return false;
  std::size_t before = solver_.rank();
  solver_.add(v, 0);
  if (solver_.rank() == before) return false;
  kept_.push_back(v);
  return true;
}

}  // namespace wdm
