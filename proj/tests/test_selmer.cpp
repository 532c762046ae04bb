#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support_selmer.hpp"
#include "wdm/pi1/lyndon.hpp"

using namespace wdm;
using namespace wdm::testing;

namespace {

// exp(ad x) as a matrix, an independent route to the adjoint action.
Matrix exp_ad(const LieAlgebra& g, const Vec& x) { return nilpotent_exp(g.ad(x)); }

FreeNilpotent two_letter(int depth) { return free_nilpotent({1, 1}, depth); }

Vec rand_crystalline(std::mt19937_64& rng, const PhiNLieDatum& d) { return rand_in(rng, kernel(d.N), 2, 2); }

// Central ideal of a free nilpotent datum: its lowest nonzero weight step.
Subspace lowest_step(const PhiNLieDatum& d) {
  Subspace z = Subspace::full(d.dim());
  for (int k = 1;; ++k) {
    const Subspace next = d.filtered().w(-k);
    if (next.dim() == 0) return z;
    z = next;
  }
}

}  // namespace

TEST_CASE("Lie algebra axioms, nilpotency and the free nilpotent basis") {
  PhiNLieDatum h = heisenberg_datum(3);
  CHECK(h.lie.axiom_errors().empty());
  CHECK(h.lie.nilpotency_class() == 2);
  CHECK(LieAlgebra::abelian(4).nilpotency_class() == 1);

  for (std::size_t m = 1; m <= 3; ++m)
    for (int depth = 1; depth <= (m == 3 ? 4 : 5); ++depth) {
      std::vector<int> degs(m, 1);
      const FreeNilpotent f = free_nilpotent(degs, depth);
      CHECK(f.dim() == static_cast<std::size_t>(necklace_sum(Z(static_cast<long>(m)), depth).get_si()));
      CHECK(f.lie.axiom_errors().empty());
      CHECK(f.lie.nilpotency_class() == (m == 1 ? 1u : static_cast<std::size_t>(depth)));
    }

  const FreeNilpotent f = two_letter(3);
  // basis: a, b, ab, aab, abb
  REQUIRE(f.dim() == 5);
  CHECK(f.lie.bracket(unit_vec(5, 0), unit_vec(5, 1)) == unit_vec(5, 2));
  CHECK(f.lie.bracket(unit_vec(5, 0), unit_vec(5, 2)) == unit_vec(5, 3));
  CHECK(f.lie.bracket(unit_vec(5, 2), unit_vec(5, 1)) == unit_vec(5, 4));
  CHECK(f.lie.bracket(unit_vec(5, 3), unit_vec(5, 1)) == Vec(5, Q(0)));

  // graded letters: degree 2 letter c with a, b of degree 1, truncated at 3
  const FreeNilpotent g = free_nilpotent({1, 1, 2}, 3);
  CHECK(g.dim() == 8);
  CHECK(g.lie.axiom_errors().empty());

  CHECK(bernoulli(1) == frac(-1, 2));
  CHECK(bernoulli(2) == frac(1, 6));
  CHECK(bernoulli(4) == frac(-1, 30));
  CHECK(bernoulli(6) == frac(1, 42));
  CHECK(bernoulli(7) == 0);
}

TEST_CASE("extended homomorphisms and derivations are structure maps") {
  std::mt19937_64 rng(11);
  const FreeNilpotent f = free_nilpotent({1, 1, 2}, 4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Vec> img;
    for (std::size_t c = 0; c < f.letters(); ++c) img.push_back(rand_in(rng, f.degree_at_least(f.letter_degree[c])));
    CHECK(f.lie.is_hom(extend_hom(f, img)));
    CHECK(f.lie.is_derivation(extend_derivation(f, img)));
  }
  std::vector<Vec> bad(f.letters(), Vec(f.dim(), Q(0)));
  bad[2] = unit_vec(f.dim(), f.letter_pos[0]);  // degree-2 letter to a degree-1 letter
  CHECK_THROWS_AS(extend_hom(f, bad), DomainError);
}

TEST_CASE("group law: abelian, Heisenberg commutator, inverses, associativity") {
  std::mt19937_64 rng(5);
  LieGroup ab(LieAlgebra::abelian(3));
  const Vec a = rand_vec(rng, 3), b = rand_vec(rng, 3);
  CHECK(ab.mul(a, b) == vadd(a, b));

  LieGroup h(heisenberg_datum().lie);
  const Vec x = unit_vec(3, 0), y = unit_vec(3, 1);
  CHECK(h.mul(h.mul(h.mul(x, y), h.inv(x)), h.inv(y)) == unit_vec(3, 2));

  for (int depth : {3, 4}) {
    const FreeNilpotent f = two_letter(depth);
    LieGroup g(f.lie);
    for (int trial = 0; trial < 10; ++trial) {
      const Vec u = rand_vec(rng, f.dim(), 2, 2), v = rand_vec(rng, f.dim(), 2, 2), w = rand_vec(rng, f.dim(), 2, 2);
      CHECK(is_zero(g.mul(u, g.inv(u))));
      CHECK(is_zero(g.mul(g.inv(u), u)));
      CHECK(g.mul(g.mul(u, v), w) == g.mul(u, g.mul(v, w)));
      // Ad is a homomorphism and agrees with exp(ad u)
      CHECK(exp_ad(f.lie, g.mul(u, v)) == exp_ad(f.lie, u) * exp_ad(f.lie, v));
      CHECK(g.Ad(u, v) == exp_ad(f.lie, u) * v);
      CHECK(g.conj_inv_mul(w, u, v) == g.mul(g.mul(g.inv(w), u), v));
    }
  }
}

TEST_CASE("xi_N: trivial cases, crossed homomorphism law, Frobenius compatibility") {
  std::mt19937_64 rng(17);
  LieGroup ab(LieAlgebra::abelian(3));
  const Matrix N = rand_matrix(rng, 3, 3);
  const Vec x = rand_vec(rng, 3);
  CHECK(ab.xi(N, x) == N * x);
  LieGroup h(heisenberg_datum().lie);
  CHECK(is_zero(h.xi(Matrix(3, 3), rand_vec(rng, 3))));

  // N x = y, N y = 0, N z = 0 is a derivation of the Heisenberg algebra
  Matrix hn(3, 3);
  hn(1, 0) = 1;
  REQUIRE(heisenberg_datum().lie.is_derivation(hn));
  for (int trial = 0; trial < 20; ++trial) {
    const Vec u = rand_vec(rng, 3), v = rand_vec(rng, 3);
    CHECK(h.xi(hn, h.mul(u, v)) == vadd(h.xi(hn, u), h.Ad(u, h.xi(hn, v))));
  }

  const FreeNilpotent f = free_nilpotent({1, 1, 2}, 4);
  LieGroup g(f.lie);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Vec> img;
    for (std::size_t c = 0; c < f.letters(); ++c) img.push_back(rand_in(rng, f.degree_at_least(f.letter_degree[c])));
    const Matrix d = extend_derivation(f, img);
    const Vec u = rand_vec(rng, f.dim(), 2, 2), v = rand_vec(rng, f.dim(), 2, 2);
    CHECK(g.xi(d, g.mul(u, v)) == vadd(g.xi(d, u), g.Ad(u, g.xi(d, v))));
  }

  for (int trial = 0; trial < 5; ++trial) {
    const PhiNLieDatum d = random_mixed_datum(rng);
    SelmerContext c(d);
    const Vec u = rand_vec(rng, d.dim(), 2, 2);
    CHECK(c.xi(c.phi(u)) == vscale(c.phi(c.xi(u)), Q(d.p)));
  }
}

TEST_CASE("datum validation") {
  const PhiNLieDatum h = heisenberg_datum(2);
  CHECK(datum_errors(h).empty());
  CHECK_NOTHROW(require_negative_mixed(h));

  PhiNLieDatum bad = h;
  bad.phi(2, 2) = Q(1);  // no longer a Lie map
  CHECK_FALSE(datum_errors(bad).empty());
  CHECK_THROWS_AS(SelmerContext{bad}, DomainError);

  bad = line_datum(2, frac(1, 2));
  bad.N(0, 0) = 1;  // N phi != p phi N
  CHECK_FALSE(datum_errors(bad).empty());

  // weight 0 content is rejected for the mixed context
  const PhiNLieDatum w0 = line_datum(2, Q(1), 0);
  CHECK_THROWS_AS(MixedSelmerContext{w0}, DomainError);
  // filtration that is not mixed: phi = 1/2 placed in weight -1
  CHECK_THROWS_AS(MixedSelmerContext{line_datum(2, frac(1, 2), -1)}, DomainError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const PhiNLieDatum d = random_mixed_datum(rng);
    CHECK(datum_errors(d).empty());
    CHECK(d.lie.is_hom(d.phi));
    CHECK(d.lie.is_derivation(d.N));
    CHECK(is_frobenius_semisimple(d.phi));
    CHECK_NOTHROW(require_negative_mixed(d));
    const PhiNLieDatum t = transport(d, rand_invertible(rng, d.dim()));
    CHECK(datum_errors(t).empty());
  }
}

TEST_CASE("cocycle condition and the group actions") {
  std::mt19937_64 rng(23);
  const PhiNLieDatum h = heisenberg_datum(2);
  SelmerContext hc(h);
  const Vec one = hc.group().identity();
  CHECK(z1g_check(hc, GCocycle{rand_vec(rng, 3), one, one}));
  // v with p phi v = v: v = z
  CHECK(z1g_check(hc, GCocycle{rand_vec(rng, 3), unit_vec(3, 2), one}));
  CHECK_FALSE(z1g_check(hc, GCocycle{one, unit_vec(3, 0), one}));

  for (int trial = 0; trial < 10; ++trial) {
    const PhiNLieDatum d = random_mixed_datum(rng);
    MixedSelmerContext c(d);
    const auto s = rand_cocycle(rng, c);
    CHECK(z1g_check(c, s.c));
    const Vec e = c.group().identity();
    const GCocycle same = act_g(c, s.c, e, e);
    CHECK((same.x == s.c.x && same.v == s.c.v && same.u == s.c.u));

    const Vec z1 = rand_in(rng, d.F0), z2 = rand_in(rng, d.F0);
    const Vec w1 = rand_vec(rng, d.dim(), 2, 2), w2 = rand_vec(rng, d.dim(), 2, 2);
    const GCocycle twice = act_g(c, act_g(c, s.c, z1, w1), z2, w2);
    const GCocycle once = act_g(c, s.c, c.group().mul(z1, z2), c.group().mul(w1, w2));
    CHECK(z1g_check(c, twice));
    CHECK((twice.x == once.x && twice.v == once.v && twice.u == once.u));
    // free in the w component
    const GCocycle moved = act_g(c, s.c, e, w1);
    if (!is_zero(w1)) CHECK_FALSE((moved.v == s.c.v && moved.u == s.c.u));

    const auto [fx, fu] = act_f(c, s.c.x, s.c.u, z1, w1);
    const GCocycle g = act_g(c, s.c, z1, w1);
    CHECK((fx == g.x && fu == g.u));
    if (d.F0.dim() < d.dim()) {
      Vec outside = unit_vec(d.dim(), d.F0.complement_indices().front());
      CHECK_THROWS_AS(act_g(c, s.c, outside, w1), DomainError);
    }
  }

  // e-case on an abelian datum: the orbit of x is x + F0
  const Subspace f0 = Subspace::span(2, {Vec{Q(1), Q(2)}});
  SelmerContext ab(pure_weight_one(1, 2, &f0));
  const Vec x{Q(3), Q(-1)};
  const Vec z{Q(2), Q(4)};
  CHECK(act_e(ab, x, z, Vec(2, Q(0))) == vadd(x, z));
  CHECK_THROWS_AS(act_e(ab, x, z, Vec{Q(1), Q(0)}), DomainError);
}

TEST_CASE("vge: examples and agreement of the three descriptions") {
  const VgeResult line = vge(line_datum(2, frac(1, 2)));
  CHECK(line.space.dim() == 1);
  CHECK(line.fixed.dim() == 1);
  CHECK(vge(pure_weight_one(2, 3)).space.dim() == 0);
  const VgeResult h = vge(heisenberg_datum(5));
  CHECK(h.space == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(h.fixed == h.space);
  CHECK_THROWS_AS(vge(line_datum(2, frac(1, 2), -1)), DomainError);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const PhiNLieDatum d = random_mixed_datum(rng, RandomDatumOptions{trial % 2 ? Z(3) : Z(2)});
    const VgeResult r = vge(d);
    CHECK(r.space == r.from_blocks);
    CHECK(r.fixed == r.from_log_y);
    CHECK(r.space.contains(r.fixed));
    // weights are negative, so the crystalline phi-fixed part is trivial
    CHECK(crystalline_fixed(d).dim() == 0);
  }
}

TEST_CASE("normalize_f: examples, round trips, errors") {
  const PhiNLieDatum line = line_datum(2, frac(1, 2));
  SelmerContext lc(line);
  CHECK(normalize_f(lc, Vec{Q(0)}) == Vec{Q(0)});
  CHECK(normalize_f(lc, Vec{Q(1)}) == Vec{Q(2)});

  std::mt19937_64 rng(31);
  SelmerContext hc(heisenberg_datum(2));
  for (int trial = 0; trial < 10; ++trial) {
    const Vec u = rand_vec(rng, 3);
    const Vec w = normalize_f(hc, u);
    const LieGroup& g = hc.group();
    CHECK(is_zero(g.mul(g.mul(g.inv(w), u), hc.phi(w))));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const PhiNLieDatum d = random_mixed_datum(rng);
    SelmerContext c(d);
    const LieGroup& g = c.group();
    const Vec w = rand_crystalline(rng, d);
    // u = w phi(w)^{-1} is sent back to w
    const Vec u = g.mul(w, g.inv(c.phi(w)));
    CHECK(normalize_f(c, u) == w);
    const Vec u2 = rand_crystalline(rng, d);
    const Vec w2 = normalize_f(c, u2);
    CHECK(g.mul(w2, g.inv(c.phi(w2))) == u2);
    if (kernel(d.N).dim() < d.dim()) {
      Vec bad = unit_vec(d.dim(), kernel(d.N).complement_indices().front());
      CHECK_THROWS_AS(normalize_f(c, bad), DomainError);
    }
  }
  // phi = 1 on weight -1: phi - 1 is singular and reported
  SelmerContext flat(line_datum(2, Q(1), -1));
  CHECK_THROWS_WITH_AS(normalize_f(flat, Vec{Q(1)}), doctest::Contains("not invertible"), DomainError);
}

TEST_CASE("normalize_g: examples, round trips, orbit invariance") {
  MixedSelmerContext lc(line_datum(2, frac(1, 2)));
  {
    const GNormalForm r = normalize_g(lc, Vec{Q(0)}, Vec{Q(1)});
    CHECK(r.w == Vec{Q(2)});
    CHECK(r.v0 == Vec{Q(0)});
    const GNormalForm same = normalize_g(lc, Vec{Q(5)}, Vec{Q(0)});
    CHECK(same.w == Vec{Q(0)});
    CHECK(same.v0 == Vec{Q(5)});
  }

  std::mt19937_64 rng(37);
  MixedSelmerContext hc(heisenberg_datum(3));
  CHECK_THROWS_WITH_AS(normalize_g(hc, unit_vec(3, 0), Vec(3, Q(0))), doctest::Contains("cocycle"), DomainError);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = rand_cocycle(rng, hc);
    const GNormalForm r = normalize_g(hc, s.c.v, s.c.u);
    CHECK(r.v0 == s.v0);
    CHECK(r.w == hc.group().inv(s.w));
  }
  for (int trial = 0; trial < 20; ++trial) {
    RandomDatumOptions o;
    o.p = trial % 3 ? Z(2) : Z(3);
    const PhiNLieDatum d = random_mixed_datum(rng, o);
    MixedSelmerContext c(d);
    const auto s = rand_cocycle(rng, c);
    const GNormalForm r = normalize_g(c, s.c.v, s.c.u);
    CHECK(r.v0 == s.v0);
    CHECK(r.w == c.group().inv(s.w));
    CHECK(c.vge_fixed().contains(r.v0));
    // another element of the same orbit has the same normal form
    const GCocycle other = act_g(c, s.c, c.group().identity(), rand_vec(rng, d.dim(), 2, 2));
    CHECK(normalize_g(c, other.v, other.u).v0 == r.v0);
  }
}

TEST_CASE("selmer_dims: anchors, scaling, rejection") {
  const SelmerDims line = selmer_dims(line_datum(2, frac(1, 2)), 1);
  CHECK((line.dim_e == 1 && line.dim_f == 1 && line.dim_g == 2));
  const SelmerDims h = selmer_dims(heisenberg_datum(2), 1);
  CHECK((h.dim_e == 3 && h.dim_f == 3 && h.dim_g == 4));
  const SelmerDims h3 = selmer_dims(heisenberg_datum(2), 3);
  CHECK((h3.dim_f == 9 && h3.dim_g == 10));
  const Subspace f0 = Subspace::span(4, {unit_vec(4, 0), unit_vec(4, 3)});
  const SelmerDims pure = selmer_dims(pure_weight_one(2, 2, &f0), 2);
  CHECK(pure.dim_f == 4);
  CHECK(pure.dim_g == pure.dim_f);
  CHECK_THROWS_AS(selmer_dims(line_datum(2, Q(1), 0), 1), DomainError);
  CHECK_THROWS_AS(selmer_dims(heisenberg_datum(2), 0), DomainError);
}

TEST_CASE("selmer_dims is additive along central towers") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    RandomDatumOptions o;
    o.f0_gens = static_cast<std::size_t>(trial % 3);
    PhiNLieDatum d = random_mixed_datum(rng, o);
    for (int level = 0; level < 3 && d.dim() > 0; ++level) {
      const Subspace z = lowest_step(d);
      REQUIRE(d.lie.is_ideal(z));
      for (std::size_t i = 0; i < z.dim(); ++i)
        CHECK(d.lie.ad(z.basis_vector(i)).is_zero());
      if (z.dim() == d.dim()) break;
      const PhiNLieDatum sub = sub_datum(d, z), quo = quotient_datum(d, z);
      const SelmerDims a = selmer_dims(d, 2), b = selmer_dims(sub, 2), c = selmer_dims(quo, 2);
      CHECK(a.dim_e == b.dim_e + c.dim_e);
      CHECK(a.dim_f == b.dim_f + c.dim_f);
      CHECK(a.vge_fixed == b.vge_fixed + c.vge_fixed);
      CHECK(a.dim_f == 2 * (static_cast<long>(d.dim()) - static_cast<long>(d.F0.dim())));
      d = quo;
    }
  }
}

TEST_CASE("necklace polynomials") {
  CHECK(necklace(Q(2), 3) == 2);
  CHECK(necklace_upto(Q(2), 2) == 3);
  for (long n = 1; n <= 8; ++n) CHECK(necklace_upto(Q(1), n) == 1);
  for (long t = 0; t <= 6; ++t)
    for (long i = 1; i <= 8; ++i) {
      const Q v = necklace(Q(t), i);
      CHECK(v.get_den() == 1);
      CHECK(v == Q(lyndon_count(Z(t), i)));
      CHECK(v == Q(static_cast<long>(lyndon_words(static_cast<std::size_t>(t), static_cast<std::size_t>(i)).size())));
    }
}

TEST_CASE("curve formula: anchors, validation, abelian case") {
  CHECK(curve_selmer_dim({1, 1, 2, 1, {}}).dim_g == 3);
  CHECK(curve_selmer_dim({1, 0, 2, 1, {{"u1", 1}}}).dim_g == 3);
  CHECK(curve_selmer_oracle({1, 1, 2, 1, {}}) == 3);
  CHECK(curve_selmer_oracle({1, 0, 2, 1, {{"u1", 1}}}) == 3);
  for (long g = 1; g <= 3; ++g)
    for (long g0 = 0; g0 <= g; ++g0)
      for (long deg = 1; deg <= 2; ++deg) {
        CurveSelmerInput in{g, g0, 1, deg, {}};
        if (g > g0) in.nu = {{"s", g - g0}, {"st", g - g0}};
        CHECK(curve_selmer_dim(in).dim_g == deg * g);
        CHECK(curve_selmer_dim(in).dim_f == deg * g);
      }
  CHECK_FALSE(curve_input_errors({1, 0, 2, 1, {{"u1", 2}}}).empty());
  CHECK_FALSE(curve_input_errors({1, 0, 2, 1, {{"x", 2}}}).empty());
  CHECK_FALSE(curve_input_errors({2, 0, 2, 1, {{"u1", 1}, {"u1", 1}}}).empty());
  CHECK_FALSE(curve_input_errors({1, 2, 2, 1, {}}).empty());
  CHECK_FALSE(curve_input_errors({1, 0, 0, 1, {{"s", 1}, {"st", 1}}}).empty());
  CHECK_THROWS_AS(curve_selmer_dim({1, 0, 2, 1, {}}), DomainError);
}

TEST_CASE("curve formula equals the Lyndon oracle on a grid") {
  for (long g = 1; g <= 3; ++g)
    for (long g0 = 0; g0 <= g; ++g0)
      for (long n = 1; n <= 4; ++n) {
        const long r = g - g0;
        std::vector<std::vector<std::pair<std::string, long>>> nus;
        if (r == 0) nus.push_back({});
        else {
          nus.push_back({{"u1", r}});
          nus.push_back({{"s", r}, {"st", r}});
          nus.push_back({{"s", 2 * r}});
          if (r >= 2) nus.push_back({{"u1", 1}, {"u2", r - 1}});
          nus.push_back({{"u1", r - 1}, {"s", 1}, {"st", 1}});
        }
        for (const auto& nu : nus) {
          const CurveSelmerInput in{g, g0, n, 1, nu};
          CHECK(curve_selmer_dim(in).dim_g == curve_selmer_oracle(in));
        }
      }
}

TEST_CASE("curve formula equals selmer_dims on free nilpotent curve data") {
  const std::vector<CurveSelmerInput> cases{
      {1, 1, 1, 1, {}},          {1, 1, 2, 1, {}},
      {1, 1, 3, 2, {}},          {1, 0, 2, 1, {{"u1", 1}}},
      {1, 0, 3, 1, {{"u1", 1}}}, {1, 0, 3, 1, {{"s", 1}, {"st", 1}}},
      {2, 1, 2, 1, {{"u1", 1}}}, {2, 0, 2, 2, {{"u1", 1}, {"u2", 1}}},
      {2, 2, 2, 1, {}},
  };
  for (const auto& in : cases) {
    const PhiNLieDatum d = curve_datum(in);
    REQUIRE(datum_errors(d).empty());
    const SelmerDims s = selmer_dims(d, in.deg);
    const CurveSelmerDims c = curve_selmer_dim(in);
    CHECK(s.dim_f == c.dim_f);
    CHECK(s.dim_g == c.dim_g);
  }
}

TEST_CASE("cosimplicial cofaces") {
  std::mt19937_64 rng(43);
  SelmerContext hc(heisenberg_datum(2));
  const Vec x0 = rand_vec(rng, 3), u0 = rand_vec(rng, 3), zero(3, Q(0));
  const D1Point d1 = coface(hc, 1, D0Point{x0, u0});
  CHECK(d1 == D1Point{x0, u0, zero, u0, zero, u0});
  const D1Point d0 = coface(hc, 0, D0Point{x0, u0});
  CHECK(d0 == D1Point{x0, x0, hc.xi(u0), u0, vscale(hc.phi(hc.xi(u0)), Q(2)), hc.phi(u0)});
  CHECK_THROWS_AS(coface(hc, 2, D0Point{x0, u0}), DomainError);
  CHECK_THROWS_AS(coface(hc, 0, D0Point{x0, Vec{Q(1)}}), DomainError);

  for (int trial = 0; trial < 10; ++trial) {
    const PhiNLieDatum d = random_mixed_datum(rng);
    MixedSelmerContext c(d);
    const std::size_t n = d.dim();
    const D0Point a{rand_in(rng, d.F0), rand_vec(rng, n, 2, 2)};
    // d^l d^k = d^k d^{l-1} for k < l
    CHECK(coface(c, 1, coface(c, 0, a)) == coface(c, 0, coface(c, 0, a)));
    CHECK(coface(c, 2, coface(c, 0, a)) == coface(c, 0, coface(c, 1, a)));
    CHECK(coface(c, 2, coface(c, 1, a)) == coface(c, 1, coface(c, 1, a)));

    const auto s = rand_cocycle(rng, c);
    const D1Point e = embed_cocycle(c, s.c);
    CHECK(z1_via_cofaces(c, e));
    CHECK(z1_equations(c, e));
    GCocycle broken = s.c;
    broken.v[0] += 1;
    CHECK(z1_via_cofaces(c, embed_cocycle(c, broken)) == z1g_check(c, broken));
    CHECK_FALSE(z1g_check(c, broken));

    D1Point r{rand_vec(rng, n, 1, 1), rand_vec(rng, n, 1, 1), rand_vec(rng, n, 1, 1),
              rand_vec(rng, n, 1, 1), rand_vec(rng, n, 1, 1), rand_vec(rng, n, 1, 1)};
    CHECK(z1_via_cofaces(c, r) == z1_equations(c, r));
    r.x0.assign(n, Q(0));
    r.u0.assign(n, Q(0));
    CHECK(z1_via_cofaces(c, r) == z1_equations(c, r));
  }
}
