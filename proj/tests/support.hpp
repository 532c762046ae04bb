#pragma once

#include <random>

#include "wdm/core/matrix.hpp"
#include "wdm/core/poly.hpp"

namespace wdm::testing {

inline Q rand_q(std::mt19937_64& rng, long num = 5, long den = 3) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return frac(n(rng), d(rng));
}

inline Matrix rand_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long num = 5, long den = 3) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_q(rng, num, den);
  return m;
}

// Random matrix with nonzero determinant.
inline Matrix rand_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    Matrix m = rand_matrix(rng, n, n);
    if (det(m) != 0) return m;
  }
}

inline Vec rand_vec(std::mt19937_64& rng, std::size_t n, long num = 5, long den = 3) {
  Vec v(n);
  for (auto& x : v) x = rand_q(rng, num, den);
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> r;
  for (auto& row : rows) {
    Vec v;
    for (long x : row) v.push_back(Q(x));
    r.push_back(v);
  }
  return Matrix::from_rows(r);
}

inline Poly poly(std::initializer_list<long> coeffs_low_first) {
  Vec v;
  for (long c : coeffs_low_first) v.push_back(Q(c));
  return Poly(v);
}

}  // namespace wdm::testing
