#include "wdm/selmer/free_nilpotent.hpp"

#include <algorithm>
#include <numeric>

namespace wdm {

namespace {

using WordPoly = std::map<Word, Q>;

WordPoly product(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out[w] += x * y;
    }
  return out;
}

void axpy(WordPoly& a, const Q& s, const WordPoly& b) {
  for (const auto& [w, x] : b) {
    Q& t = a[w];
    t += s * x;
    if (t == 0) a.erase(w);
  }
}

WordPoly commutator(const WordPoly& a, const WordPoly& b) {
  WordPoly out = product(a, b);
  axpy(out, Q(-1), product(b, a));
  return out;
}

Q small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  return frac(num(rng), den(rng));
}

}  // namespace

Subspace FreeNilpotent::degree_at_least(int k) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degree[i] >= k) gens.push_back(unit_vec(dim(), i));
  return Subspace::span(dim(), gens);
}

std::map<int, Subspace> FreeNilpotent::weight_filtration() const {
  std::map<int, Subspace> w;
  for (int k = 1; k <= max_degree + 1; ++k) w.emplace(-k, degree_at_least(k));
  return w;
}

FreeNilpotent free_nilpotent(const std::vector<int>& letter_degrees, int max_degree) {
  if (letter_degrees.empty()) throw DomainError("free_nilpotent: no letters");
  if (max_degree < 1) throw DomainError("free_nilpotent: max_degree must be positive");
  for (int d : letter_degrees)
    if (d < 1) throw DomainError("free_nilpotent: letter degrees must be positive");
  FreeNilpotent f;
  f.letter_degree = letter_degrees;
  f.max_degree = max_degree;
  auto deg = [&](const Word& w) {
    int s = 0;
    for (std::size_t c : w) s += letter_degrees[c];
    return s;
  };
  std::vector<std::pair<int, Word>> words;
  for (const Word& w : lyndon_words_up_to(letter_degrees.size(), static_cast<std::size_t>(max_degree)))
    if (deg(w) <= max_degree) words.emplace_back(deg(w), w);
  std::sort(words.begin(), words.end());
  const std::size_t n = words.size();
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    f.degree.push_back(words[i].first);
    f.basis.push_back(words[i].second);
    index.emplace(words[i].second, i);
  }
  f.letter_pos.resize(letter_degrees.size());
  for (std::size_t c = 0; c < letter_degrees.size(); ++c) f.letter_pos[c] = index.at(Word{c});

  // Standard bracketing: w = u v with v the longest proper Lyndon suffix.
  std::vector<WordPoly> P(n);
  f.factor.assign(n, {n, n});
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = f.basis[i];
    if (w.size() == 1) {
      P[i][w] = Q(1);
      continue;
    }
    for (std::size_t s = 1; s < w.size(); ++s) {
      Word v(w.begin() + static_cast<long>(s), w.end());
      if (!is_lyndon(v)) continue;
      Word u(w.begin(), w.begin() + static_cast<long>(s));
      f.factor[i] = {index.at(u), index.at(v)};
      P[i] = commutator(P[index.at(u)], P[index.at(v)]);
      break;
    }
  }

  // The least word of a Lie polynomial is Lyndon and P_w = w + larger words.
  f.lie = LieAlgebra(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (f.degree[i] + f.degree[j] > max_degree) continue;
      WordPoly r = commutator(P[i], P[j]);
      Vec coords(n, Q(0));
      while (!r.empty()) {
        auto it = index.find(r.begin()->first);
        if (it == index.end()) throw DomainError("free_nilpotent: leading word is not a basis word");
        const Q c = r.begin()->second;
        coords[it->second] += c;
        axpy(r, -c, P[it->second]);
      }
      if (!is_zero(coords)) f.lie.set_bracket(i, j, coords);
    }
  return f;
}

namespace {

void check_images(const FreeNilpotent& f, const std::vector<Vec>& images) {
  if (images.size() != f.letters()) throw DomainError("letter images: wrong count");
  for (std::size_t c = 0; c < images.size(); ++c) {
    if (images[c].size() != f.dim()) throw DomainError("letter images: wrong length");
    if (!f.degree_at_least(f.letter_degree[c]).contains(images[c]))
      throw DomainError("letter images: image has lower degree than its letter");
  }
}

}  // namespace

Matrix extend_hom(const FreeNilpotent& f, const std::vector<Vec>& images) {
  check_images(f, images);
  std::vector<Vec> col(f.dim());
  for (std::size_t c = 0; c < f.letters(); ++c) col[f.letter_pos[c]] = images[c];
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (f.basis[i].size() > 1) col[i] = f.lie.bracket(col[f.factor[i].first], col[f.factor[i].second]);
  return Matrix::from_columns(col, f.dim());
}

Matrix extend_derivation(const FreeNilpotent& f, const std::vector<Vec>& images) {
  check_images(f, images);
  std::vector<Vec> col(f.dim());
  for (std::size_t c = 0; c < f.letters(); ++c) col[f.letter_pos[c]] = images[c];
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (f.basis[i].size() > 1) {
      const auto [u, v] = f.factor[i];
      const Vec eu = unit_vec(f.dim(), u), ev = unit_vec(f.dim(), v);
      Vec a = f.lie.bracket(col[u], ev);
      const Vec b = f.lie.bracket(eu, col[v]);
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
      col[i] = a;
    }
  return Matrix::from_columns(col, f.dim());
}

Subspace generated_subalgebra(const LieAlgebra& g, const std::vector<Vec>& gens) {
  SpanBuilder sb(g.dim());
  std::vector<Vec> kept;
  for (const Vec& v : gens)
    if (sb.add(v)) kept.push_back(v);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Vec b = g.bracket(kept[j], kept[i]);
      if (sb.add(b)) kept.push_back(b);
    }
  return sb.subspace();
}

PhiNLieDatum free_datum(const FreeNilpotent& f, const Z& p, const std::vector<Vec>& phi_letters,
                        const std::vector<Vec>& n_letters, const std::vector<Vec>& f0_gens) {
  PhiNLieDatum d;
  d.lie = f.lie;
  d.p = p;
  d.phi = extend_hom(f, phi_letters);
  d.N = extend_derivation(f, n_letters);
  d.W = f.weight_filtration();
  d.F0 = generated_subalgebra(f.lie, f0_gens);
  return d;
}

PhiNLieDatum heisenberg_datum(const Z& p) {
  const Q pi = Q(1) / Q(p);
  LieAlgebra g(3);
  g.set_bracket(0, 1, unit_vec(3, 2));
  Matrix phi(3, 3);
  phi(1, 0) = 1;
  phi(0, 1) = -pi;
  phi(2, 2) = pi;
  std::map<int, Subspace> W{{-1, Subspace::full(3)}, {-2, Subspace::span(3, {unit_vec(3, 2)})}, {-3, Subspace::zero(3)}};
  return PhiNLieDatum{g, p, phi, Matrix(3, 3), W, Subspace::zero(3)};
}

PhiNLieDatum random_mixed_datum(std::mt19937_64& rng, const RandomDatumOptions& o) {
  if (o.max_degree < 1) throw DomainError("random_mixed_datum: max_degree must be positive");
  const Q pi = Q(1) / Q(o.p);
  // Letter blocks: degree, phi on the block, N on the block (as lists of columns).
  struct Block {
    int degree;
    std::vector<std::vector<Q>> phi, n;
  };
  std::vector<Block> blocks{{1, {{0, 1}, {-pi, 0}}, {{0, 0}, {0, 0}}}};
  std::vector<int> extra{0, 1, 2};
  std::shuffle(extra.begin(), extra.end(), rng);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(o.max_extra, 3))(rng);
  for (std::size_t e = 0; e < count; ++e) {
    switch (extra[e]) {
      case 0:
        if (o.max_degree >= 2) blocks.push_back({2, {{(rng() % 2) ? pi : -pi}}, {{0}}});
        break;
      case 1:
        if (o.max_degree >= 2)
          blocks.push_back({2, {{1, 0, 0}, {0, pi, 0}, {0, 0, pi * pi}}, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}});
        break;
      default:
        if (o.max_degree >= 3) blocks.push_back({3, {{pi, 0}, {0, pi * pi}}, {{0, 1}, {0, 0}}});
    }
  }
  std::vector<int> degs;
  for (const auto& b : blocks)
    for (std::size_t k = 0; k < b.phi.size(); ++k) degs.push_back(b.degree);
  const FreeNilpotent f = free_nilpotent(degs, o.max_degree);
  const std::size_t n = f.dim();
  std::vector<Vec> phi_l, n_l;
  std::size_t first = 0;
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < b.phi.size(); ++k) {
      Vec a(n, Q(0)), c(n, Q(0));
      for (std::size_t r = 0; r < b.phi.size(); ++r) {
        a[f.letter_pos[first + r]] = b.phi[k][r];
        c[f.letter_pos[first + r]] = b.n[k][r];
      }
      phi_l.push_back(a);
      n_l.push_back(c);
    }
    first += b.phi.size();
  }
  std::vector<Vec> f0;
  for (std::size_t k = 0; k < o.f0_gens; ++k) {
    Vec v(n);
    for (auto& x : v) x = small_rational(rng);
    f0.push_back(v);
  }
  PhiNLieDatum d = free_datum(f, o.p, phi_l, n_l, f0);
  if (!o.conjugate) return d;
  std::vector<Vec> der;
  std::bernoulli_distribution keep(0.5);
  for (std::size_t c = 0; c < f.letters(); ++c) {
    Vec v(n, Q(0));
    for (std::size_t i = 0; i < n; ++i)
      if (f.degree[i] > f.letter_degree[c] && keep(rng)) v[i] = small_rational(rng);
    der.push_back(v);
  }
  const Matrix E = nilpotent_exp(extend_derivation(f, der));
  const Matrix Ei = *inverse(E);
  d.phi = E * d.phi * Ei;
  d.N = E * d.N * Ei;
  d.F0 = image(E, d.F0);
  return d;
}

PhiNLieDatum curve_datum(const CurveSelmerInput& in, const Z& p) {
  const CurveNu nu = parse_nu(in);
  if (nu.s != nu.st) throw DomainError("curve_datum: needs nu_s = nu_st to stay rational");
  if (nu.pairs.size() > 5) throw DomainError("curve_datum: at most five pair labels");
  if (p > 13) throw DomainError("curve_datum: p must be at most 13");
  const Q pi = Q(1) / Q(p);
  // Companion blocks of T^2 - c T + 1/p; distinct c give eigenvalue pairs with
  // distinct arguments in (0, pi). The block of T^2 - 1/p holds +-1/sqrt p.
  const std::vector<Q> traces{Q(0), frac(1, 2), frac(-1, 2), frac(1, 4), frac(-1, 4)};
  std::vector<std::pair<Q, Q>> blocks;  // (trace, constant term)
  std::size_t k = 0;
  for (const auto& [label, m] : nu.pairs) {
    for (long i = 0; i < m; ++i) blocks.emplace_back(traces[k], pi);
    ++k;
  }
  for (long i = 0; i < nu.s; ++i) blocks.emplace_back(Q(0), -pi);
  const std::size_t g0 = static_cast<std::size_t>(in.g0);
  const std::size_t letters = 2 * g0 + 2 * blocks.size();
  const FreeNilpotent f = free_nilpotent(std::vector<int>(letters, 1), static_cast<int>(in.n));
  const std::size_t n = f.dim();
  auto e = [&](std::size_t c, const Q& s) {
    Vec v(n, Q(0));
    v[f.letter_pos[c]] = s;
    return v;
  };
  std::vector<Vec> phi_l(letters), n_l(letters, Vec(n, Q(0))), f0;
  for (std::size_t i = 0; i < g0; ++i) {
    phi_l[i] = e(i, Q(1));
    phi_l[g0 + i] = e(g0 + i, pi);
    n_l[i] = e(g0 + i, Q(1));
    f0.push_back(e(i, Q(1)));
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t x = 2 * g0 + 2 * b, y = x + 1;
    // phi x = y, phi y = -const x + trace y
    phi_l[x] = e(y, Q(1));
    Vec v = e(x, -blocks[b].second);
    v[f.letter_pos[y]] = blocks[b].first;
    phi_l[y] = v;
    f0.push_back(e(x, Q(1)));
  }
  return free_datum(f, p, phi_l, n_l, f0);
}

}  // namespace wdm
