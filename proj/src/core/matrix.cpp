#include "wdm/core/matrix.hpp"

#include <algorithm>

namespace wdm {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty) {
  std::size_t c = rows.empty() ? cols_if_empty : rows[0].size();
  Matrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows_if_empty) {
  std::size_t r = cols.empty() ? rows_if_empty : cols[0].size();
  Matrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw DomainError("ragged matrix columns");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Q& x) { return x == 0; });
}

Q Matrix::trace() const {
  Q t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch in +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch in -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Q& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(const Matrix& a) { return Q(-1) * a; }
Matrix operator*(const Q& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in *");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Q& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw DomainError("matrix/vector shape mismatch");
  Vec r(a.rows(), Q(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) r[i] += a(i, k) * v[k];
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return k;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DomainError("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix mat_pow(const Matrix& m, unsigned k) {
  if (!m.square()) throw DomainError("power of non-square matrix");
  Matrix r = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

Matrix unipotent_log(const Matrix& m) {
  Matrix u = m - Matrix::identity(m.rows());
  if (!is_nilpotent(u)) throw DomainError("log of a non-unipotent matrix");
  Matrix acc(m.rows(), m.cols()), p = u;
  for (long k = 1; !p.is_zero(); ++k) {
    acc += Q(k % 2 ? 1 : -1, k) * p;
    p = p * u;
  }
  return acc;
}

Matrix nilpotent_exp(const Matrix& u) {
  if (!is_nilpotent(u)) throw DomainError("exp of a non-nilpotent matrix");
  Matrix acc = Matrix::identity(u.rows()), p = u;
  Z fact = 1;
  for (long k = 1; !p.is_zero(); ++k) {
    fact *= k;
    acc += Q(1, 1) / Q(fact) * p;
    p = p * u;
  }
  return acc;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.square()) return false;
  return mat_pow(m, static_cast<unsigned>(m.rows())).is_zero();
}

RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q inv = Q(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Q f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.r = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Q det(const Matrix& m) {
  if (!m.square()) throw DomainError("determinant of non-square matrix");
  Matrix a = m;
  std::size_t n = a.rows();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Q f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw DomainError("inverse of non-square matrix");
  std::size_t n = m.rows();
  auto rr = rref(hstack(m, Matrix::identity(n)));
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  return rr.r.block(0, n, n, n);
}

Matrix kernel_basis(const Matrix& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> cols;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Q(0));
    v[f] = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.r(k, f);
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(cols, m.cols());
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  IncrementalSolver s(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!s.add(a.row(i), b[i])) return std::nullopt;
  return s.particular();
}

bool IncrementalSolver::add(Vec coeffs, Q rhs) {
  if (coeffs.size() != n_) throw DomainError("equation length mismatch");
  if (!consistent_) return false;
  for (const auto& row : rows_) {
    const Q f = coeffs[row.pivot];
    if (f == 0) continue;
    for (std::size_t j = row.pivot; j < n_; ++j)
      if (row.a[j] != 0) coeffs[j] -= f * row.a[j];
    rhs -= f * row.b;
  }
  std::size_t p = 0;
  while (p < n_ && coeffs[p] == 0) ++p;
  if (p == n_) {
    if (rhs != 0) consistent_ = false;
    return consistent_;
  }
  Q inv = Q(1) / coeffs[p];
  for (std::size_t j = p; j < n_; ++j) coeffs[j] *= inv;
  rhs *= inv;
  for (auto& row : rows_) {
    const Q f = row.a[p];
    if (f == 0) continue;
    for (std::size_t j = p; j < n_; ++j)
      if (coeffs[j] != 0) row.a[j] -= f * coeffs[j];
    row.b -= f * rhs;
  }
  Row nr{p, std::move(coeffs), rhs};
  auto it = std::lower_bound(rows_.begin(), rows_.end(), p, [](const Row& r, std::size_t v) { return r.pivot < v; });
  rows_.insert(it, std::move(nr));
  return true;
}

std::optional<Vec> IncrementalSolver::particular() const {
  if (!consistent_) return std::nullopt;
  Vec x(n_, Q(0));
  for (const auto& row : rows_) x[row.pivot] = row.b;
  return x;
}

std::optional<Vec> IncrementalSolver::unique_solution() const {
  if (!consistent_ || rows_.size() != n_) return std::nullopt;
  return particular();
}

Matrix IncrementalSolver::nullspace() const {
  std::vector<bool> is_pivot(n_, false);
  for (const auto& row : rows_) is_pivot[row.pivot] = true;
  std::vector<Vec> cols;
  for (std::size_t f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n_, Q(0));
    v[f] = 1;
    for (const auto& row : rows_) v[row.pivot] = -row.a[f];
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(cols, n_);
}

}  // namespace wdm
