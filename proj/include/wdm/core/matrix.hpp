#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wdm/core/rational.hpp"

namespace wdm {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Q(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty = 0);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows_if_empty);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Q& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> columns() const;
  void set_col(std::size_t j, const Vec& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  Q trace() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Q& s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Q> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Q& s, Matrix a);
Vec operator*(const Matrix& a, const Vec& v);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix mat_pow(const Matrix& m, unsigned k);
// log(1 + U) for nilpotent U, as a terminating series.
Matrix unipotent_log(const Matrix& m);
// exp(U) for nilpotent U.
Matrix nilpotent_exp(const Matrix& u);
bool is_nilpotent(const Matrix& m);

struct RrefResult {
  Matrix r;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form. Pivot: leftmost nonzero column, first usable row.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
Q det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Columns form a basis of the null space, one per free column, in column order.
Matrix kernel_basis(const Matrix& m);
// Some x with a x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Exact linear system built one equation at a time; rows are kept in reduced form.
class IncrementalSolver {
 public:
  explicit IncrementalSolver(std::size_t nvars) : n_(nvars) {}
  // Returns false once the system became inconsistent.
  bool add(Vec coeffs, Q rhs);
  std::size_t nvars() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  bool consistent() const { return consistent_; }
  // Particular solution with free variables set to zero.
  std::optional<Vec> particular() const;
  std::optional<Vec> unique_solution() const;
  Matrix nullspace() const;

 private:
  struct Row {
    std::size_t pivot;
    Vec a;
    Q b;
  };
  std::size_t n_;
  std::vector<Row> rows_;
  bool consistent_ = true;
};

}  // namespace wdm
