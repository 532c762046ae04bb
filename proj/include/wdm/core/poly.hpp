#pragma once

#include <string>
#include <utility>

#include "wdm/core/matrix.hpp"

namespace wdm {

// Polynomial over Q, coefficients lowest degree first; no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vec coeffs);
  static Poly constant(const Q& c);
  static Poly x();
  // x - a
  static Poly linear_root(const Q& a);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Vec& coeffs() const { return c_; }
  Q coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Q(0); }
  Q leading() const { return c_.empty() ? Q(0) : c_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Q eval(const Q& t) const;
  Matrix eval(const Matrix& m) const;
  std::string str(const std::string& var = "x") const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();
  Vec c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Q& s, const Poly& a);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned k);

// Monic characteristic polynomial det(x - m), via Hessenberg reduction.
Poly char_poly(const Matrix& m);

}  // namespace wdm
