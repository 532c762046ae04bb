#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "wdm/core/factor.hpp"
#include "wdm/core/subspace.hpp"
#include "wdm/core/weil.hpp"

using namespace wdm;
using namespace wdm::testing;

namespace {

// Rank as the size of the largest nonvanishing minor.
std::size_t rank_by_minors(const Matrix& m) {
  std::size_t best = 0;
  std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    bool found = false;
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::size_t> ri, ci;
        for (std::size_t i = 0; i < r; ++i)
          if (rs[i]) ri.push_back(i);
        for (std::size_t j = 0; j < c; ++j)
          if (cs[j]) ci.push_back(j);
        Matrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
        if (det(sub) != 0) found = true;
      } while (!found && std::prev_permutation(cs.begin(), cs.end()));
    } while (!found && std::prev_permutation(rs.begin(), rs.end()));
    if (found) best = k;
  }
  return best;
}

Poly from_factors(const Factorization& f) {
  Poly p = Poly::constant(f.content);
  for (const auto& fa : f.factors) p = p * pow(fa.poly, fa.multiplicity);
  return p;
}

std::vector<Z> divisors(Z n) {
  n = abs(n);
  std::vector<Z> out;
  for (Z d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

bool has_rational_root(const Poly& p) {
  auto [c, f] = primitive_part(p);
  Z c0 = f.coeffs()[0].get_num(), cd = f.leading().get_num();
  if (c0 == 0) return true;
  for (const auto& a : divisors(c0))
    for (const auto& b : divisors(cd))
      for (int s : {1, -1})
        if (f.eval(frac(s * a, b)) == 0) return true;
  return false;
}

// Brute-force search for an integer quadratic factor with small middle coefficient.
bool has_small_quadratic_factor(const Poly& p) {
  auto [c, f] = primitive_part(p);
  Z c0 = f.coeffs()[0].get_num(), cd = f.leading().get_num();
  for (const auto& a2 : divisors(cd))
    for (const auto& a0 : divisors(c0))
      for (int s : {1, -1})
        for (long a1 = -30; a1 <= 30; ++a1) {
          Poly g(Vec{Q(s * a0), Q(a1), Q(a2)});
          auto [q, r] = divmod(f, g);
          if (!r.is_zero()) continue;
          bool integral = true;
          for (const auto& x : q.coeffs()) integral = integral && x.get_den() == 1;
          if (integral) return true;
        }
  return false;
}

}  // namespace

TEST_CASE("rational strings") {
  CHECK(to_string(Q(3, 6)) == "1/2");
  CHECK(to_string(Q(-4, 2)) == "-2");
  CHECK(parse_rational("-6/4").value() == Q(-3, 2));
  CHECK(parse_rational("7").value() == 7);
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("1.5").has_value());
  CHECK_FALSE(parse_rational("").has_value());
}

TEST_CASE("rref examples") {
  auto id = rref(Matrix::identity(3));
  CHECK(id.r == Matrix::identity(3));
  CHECK(id.rank == 3);
  auto d = rref(mat({{1, 2}, {2, 4}}));
  CHECK(d.r == mat({{1, 2}, {0, 0}}));
  CHECK(d.rank == 1);
  CHECK(d.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("random invertible 6x6 multiplies back to the identity") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    Matrix m = rand_invertible(rng, 6);
    CHECK(rref(m).rank == 6);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix::identity(6));
    CHECK(*inv * m == Matrix::identity(6));
  }
}

TEST_CASE("rref is idempotent and rank agrees with the minor oracle") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5, k = rng() % 4;
    Matrix m = k == 0 ? rand_matrix(rng, r, c) : rand_matrix(rng, r, k) * rand_matrix(rng, k, c);
    auto once = rref(m);
    auto twice = rref(once.r);
    CHECK(twice.r == once.r);
    CHECK(once.rank == rank_by_minors(m));
  }
}

TEST_CASE("kernel and solve") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    Matrix m = rand_matrix(rng, 3, 2) * rand_matrix(rng, 2, 5);
    Matrix k = kernel_basis(m);
    CHECK(k.cols() == 5 - rank(m));
    CHECK((m * k).is_zero());
    Vec x = rand_vec(rng, 5);
    Vec b = m * x;
    auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK(m * *y == b);
  }
}

TEST_CASE("subspace sum and intersection in dimension 2") {
  Subspace a = Subspace::span(2, {unit_vec(2, 0)}), b = Subspace::span(2, {unit_vec(2, 1)});
  CHECK(a + b == Subspace::full(2));
  CHECK(intersect(a, b) == Subspace::zero(2));
}

TEST_CASE("preimage of zero is the kernel") {
  Matrix n = mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  CHECK(preimage(n, Subspace::zero(3)) == kernel(n));
  CHECK(kernel(n) == Subspace::span(3, {unit_vec(3, 2)}));
}

TEST_CASE("subspace dimension formula on random pairs") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 1 + rng() % 8;
    auto gen = [&](std::size_t k) {
      std::vector<Vec> g;
      for (std::size_t i = 0; i < k; ++i) g.push_back(rand_vec(rng, n, 2, 2));
      return Subspace::span(n, g);
    };
    Subspace a = gen(rng() % (n + 1)), b = gen(rng() % (n + 1));
    Subspace s = a + b, i = intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("span-equal generating sets give identical stored bases") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng() % 6, k = 1 + rng() % n;
    Matrix g = rand_matrix(rng, n, k);
    Matrix h = g * rand_invertible(rng, k);
    Matrix extra = g * rand_matrix(rng, k, 2);
    CHECK(Subspace::column_span(g) == Subspace::column_span(h));
    CHECK(Subspace::column_span(g) == Subspace::column_span(hstack(h, extra)));
  }
}

TEST_CASE("image, preimage and stability") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    Matrix m = rand_matrix(rng, 5, 4);
    Subspace s = Subspace::span(5, {rand_vec(rng, 5), rand_vec(rng, 5)});
    Subspace pre = preimage(m, s);
    CHECK(s.contains(image(m, pre)));
    Subspace inv = Subspace::span(4, {rand_vec(rng, 4)});
    CHECK(preimage(m, image(m, inv)).contains(inv));
  }
  Matrix diag = Matrix::diagonal({Q(1), Q(2), Q(3)});
  CHECK(is_stable(diag, Subspace::span(3, {unit_vec(3, 1)})));
  CHECK_FALSE(is_stable(mat({{0, 1}, {1, 0}}), Subspace::span(2, {unit_vec(2, 0)})));
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(Matrix::diagonal({Q(1), Q(1, 2)})) == Poly::linear_root(1) * Poly::linear_root(Q(1, 2)));
  for (long q : {2, 3, 7}) {
    Matrix comp = mat({{0, -q}, {1, 0}});
    CHECK(char_poly(comp) == poly({q, 0, 1}));
  }
}

TEST_CASE("Cayley-Hamilton on random 5x5") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Matrix m = rand_matrix(rng, 5, 5);
    Poly p = char_poly(m);
    CHECK(p.degree() == 5);
    CHECK(p.leading() == 1);
    CHECK(p.eval(m).is_zero());
    CHECK(p.eval(Q(0)) == -det(m));
  }
}

TEST_CASE("factor_z examples") {
  auto f1 = factor_z(poly({-1, 0, 1}));
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0].poly == poly({-1, 1}));
  CHECK(f1.factors[1].poly == poly({1, 1}));
  auto f2 = factor_z(poly({4, 0, 1}));
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].poly == poly({4, 0, 1}));
  Poly p = pow(poly({-1, 1}), 2) * poly({1, 1, 1});
  auto f3 = factor_z(p);
  CHECK(from_factors(f3) == p);
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0].multiplicity == 2);
  CHECK_THROWS_AS(factor_z(Poly()), DomainError);
}

TEST_CASE("factor_z reconstructs products and returns irreducible factors") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    Poly p = Poly::constant(rand_q(rng, 4, 3) + Q(5));
    int nf = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nf; ++i) {
      long d = 1 + static_cast<long>(rng() % 3);
      Vec c(static_cast<std::size_t>(d + 1));
      for (auto& x : c) x = Q(static_cast<long>(rng() % 11) - 5);
      if (c.back() == 0) c.back() = 1;
      Poly f(c);
      if (f.degree() < 1) continue;
      p = p * pow(f, 1 + static_cast<unsigned>(rng() % 2));
    }
    if (p.degree() < 1) continue;
    auto fz = factor_z(p);
    CHECK(from_factors(fz) == p);
    for (const auto& fa : fz.factors) {
      if (fa.poly.degree() >= 2 && fa.poly.degree() <= 3) CHECK_FALSE(has_rational_root(fa.poly));
      if (fa.poly.degree() == 4) {
        CHECK_FALSE(has_rational_root(fa.poly));
        CHECK_FALSE(has_small_quadratic_factor(fa.poly));
      }
    }
  }
}

TEST_CASE("factor_z on harder inputs") {
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  auto f = factor_z(poly({1, 0, 0, 0, 1}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].poly.degree() == 4);
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1.
  auto g = factor_z(poly({1, 0, -10, 0, 1}));
  REQUIRE(g.factors.size() == 1);
  // Product of many linear factors with rational roots.
  Poly p = Poly::constant(1);
  for (long k = 0; k < 12; ++k) p = p * Poly::linear_root(Q(1, 1L << (k % 5)));
  auto h = factor_z(p);
  CHECK(from_factors(h) == p);
  for (const auto& fa : h.factors) CHECK(fa.poly.degree() == 1);
  // Cyclotomic x^12 - 1 splits into six irreducibles.
  Vec c(13, Q(0));
  c[0] = -1;
  c[12] = 1;
  auto cyc = factor_z(Poly(c));
  CHECK(cyc.factors.size() == 6);
  CHECK(from_factors(cyc) == Poly(c));
}

TEST_CASE("weil_weight examples") {
  CHECK(weil_weight(poly({-1, 1}), Z(4)) == 0);
  CHECK(weil_weight(poly({-1, 4}), Z(4)) == -2);
  CHECK(weil_weight(poly({3, 0, 1}), Z(3)) == 1);
  CHECK(weil_weight(poly({1, 1, 1}), Z(5)) == 0);
  CHECK(weil_weight(poly({1, 1, 1, 1, 1}), Z(2)) == 0);
  // x^2 + 1/2: roots of absolute value 2^{-1/2}.
  CHECK(weil_weight(Poly(Vec{Q(1, 2), Q(0), Q(1)}), Z(2)) == -1);
}

TEST_CASE("weil_weight rejects non-Weil inputs") {
  // Passes the exact layer: reciprocal, but the real roots are off the unit circle.
  auto v = weil_verdict(poly({1, -3, 1}), Z(5));
  CHECK_FALSE(v.weight.has_value());
  CHECK(v.bits_used > 0);
  CHECK_FALSE(weil_weight(poly({-2, 1}), Z(3)).has_value());
  CHECK_FALSE(weil_weight(poly({5, 1, 1}), Z(2)).has_value());
  CHECK_FALSE(weil_weight(poly({0, 1}), Z(2)).has_value());
}

TEST_CASE("weil_weight on q-Weil quadratics x^2 - a x + q") {
  for (long q : {2, 3, 4, 5, 7}) {
    for (long a = -5; a <= 5; ++a) {
      if (a * a >= 4 * q) continue;
      Poly f = poly({q, -a, 1});
      if (factor_z(f).factors.size() != 1) continue;
      CHECK(weil_weight(f, Z(q)) == 1);
    }
  }
}

TEST_CASE("weil_weight is stable across precisions") {
  std::vector<Poly> fs = {poly({3, 0, 1}), poly({1, -3, 1}), poly({1, 1, 1, 1, 1}), poly({9, -3, 1})};
  for (const auto& f : fs) {
    auto base = weil_weight(f, Z(3));
    for (unsigned bits : {64u, 128u, 256u, 512u}) CHECK(weil_weight(f, Z(3), {bits, bits}) == base);
  }
}

TEST_CASE("weil_weight reports precision exhaustion distinctly") {
  Vec c(23, Q(1));  // (x^23 - 1)/(x - 1)
  CHECK_THROWS_AS(weil_weight(Poly(c), Z(2), {2, 2}), PrecisionError);
  CHECK(weil_weight(Poly(c), Z(2)) == 0);
}
