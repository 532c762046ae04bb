#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wdm {

using Q = mpq_class;
using Z = mpz_class;
using Vec = std::vector<Q>;

// Raised when an input violates a mathematical precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when interval certification runs out of bits.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "a/b", or "a" when b = 1.
std::string to_string(const Q& x);

// Accepts [-]digits[/digits]; rejects zero denominators.
std::optional<Q> parse_rational(std::string_view s);

// n/d in lowest terms; the two-argument mpq constructor does not reduce.
inline Q frac(const Z& n, const Z& d) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

Q pow(const Q& base, long exponent);
Z binomial(long n, long k);
Z factorial(long n);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Q& s, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);

}  // namespace wdm
