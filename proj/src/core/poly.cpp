#include "wdm/core/poly.hpp"

#include <sstream>

namespace wdm {

Poly::Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Q& c) { return Poly(Vec{c}); }
Poly Poly::x() { return Poly(Vec{Q(0), Q(1)}); }
Poly Poly::linear_root(const Q& a) { return Poly(Vec{-a, Q(1)}); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (Q(1) / leading()) * *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  Vec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Q(static_cast<long>(i)) * c_[i];
  return Poly(d);
}

Q Poly::eval(const Q& t) const {
  Q acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Matrix Poly::eval(const Matrix& m) const {
  if (!m.square()) throw DomainError("polynomial of a non-square matrix");
  Matrix acc(m.rows(), m.cols());
  Matrix id = Matrix::identity(m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + *it * id;
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Q& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Q a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = a == 1 && i > 0;
    if (!unit) os << to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  Vec r(std::max(a.coeffs().size(), b.coeffs().size()), Q(0));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return Poly(r);
}

Poly operator-(const Poly& a, const Poly& b) { return a + Q(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Vec r(a.coeffs().size() + b.coeffs().size() - 1, Q(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(r);
}

Poly operator*(const Q& s, const Poly& a) { return Poly(s * a.coeffs()); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Vec r = a.coeffs();
  long db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  Vec q(static_cast<std::size_t>(a.degree() - db + 1), Q(0));
  Q lc = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    Q f = r[static_cast<std::size_t>(i)] / lc;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(q), Poly(r)};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& a, unsigned k) {
  Poly r = Poly::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

Poly char_poly(const Matrix& m) {
  if (!m.square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j) == 0) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      Q t = h(k, j) / h(j + 1, j);
      for (std::size_t c = 0; c < n; ++c) h(k, c) -= t * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += t * h(r, k);
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = Poly::linear_root(h(k - 1, k - 1)) * p[k - 1];
    Q t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t == 0) break;
      p[k] = p[k] - (t * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
  }
  return p[n];
}

}  // namespace wdm
