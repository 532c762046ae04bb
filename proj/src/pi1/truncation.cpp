#include "wdm/pi1/truncation.hpp"

#include <map>

namespace wdm {

std::size_t FreeTruncation::offset(std::size_t length) const {
  std::size_t off = 0, p = 1;
  for (std::size_t l = 0; l < length; ++l) {
    off += p;
    p *= letters;
  }
  return off;
}

std::size_t FreeTruncation::index(const Word& w) const {
  if (w.size() > depth) throw DomainError("word longer than the truncation depth");
  std::size_t k = 0;
  for (auto c : w) {
    if (c >= letters) throw DomainError("letter index out of range");
    k = k * letters + c;
  }
  return offset(w.size()) + k;
}

long FreeTruncation::product_index(std::size_t a, std::size_t b) const {
  const Word& u = words[a];
  const Word& v = words[b];
  if (u.size() + v.size() > depth) return -1;
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return static_cast<long>(index(w));
}

Vec FreeTruncation::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim(), Q(0));
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (y[b] == 0) continue;
      const long c = product_index(a, b);
      if (c >= 0) out[static_cast<std::size_t>(c)] += x[a] * y[b];
    }
  }
  return out;
}

FreeTruncation build_truncation(std::size_t m, std::size_t n, const Z& q, const Vec& eigenvalues,
                                const std::vector<NPair>& n_pairs) {
  if (m == 0) throw DomainError("build_truncation: need at least one letter");
  if (eigenvalues.size() != m) throw DomainError("build_truncation: one eigenvalue per letter required");
  if (q < 2) throw DomainError("build_truncation: q must be at least 2");
  for (const auto& e : eigenvalues)
    if (e == 0) throw DomainError("build_truncation: eigenvalues must be nonzero");

  Matrix n1(m, m);
  for (const auto& p : n_pairs) {
    if (p.from >= m || p.to >= m) throw DomainError("build_truncation: N-pair letter out of range");
    n1(p.to, p.from) += p.coef;
  }
  const Matrix phi1 = Matrix::diagonal(eigenvalues);
  if (n1 * phi1 != Q(q) * phi1 * n1)
    throw DomainError("build_truncation: N-pairing violates N phi = q phi N on letters");

  FreeTruncation t;
  t.letters = m;
  t.depth = n;
  t.q = q;
  t.eigenvalues = eigenvalues;
  t.n_pairs = n_pairs;
  t.words.push_back({});
  for (std::size_t len = 1; len <= n; ++len) {
    Word w(len, 0);
    while (true) {
      t.words.push_back(w);
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] == m - 1) w[--pos] = 0;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }

  const std::size_t d = t.dim();
  Vec phi(d, Q(1));
  Matrix N(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const Word& w = t.words[k];
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      phi[k] *= eigenvalues[w[pos]];
      for (std::size_t to = 0; to < m; ++to) {
        const Q& c = n1(to, w[pos]);
        if (c == 0) continue;
        Word x = w;
        x[pos] = to;
        N(t.index(x), k) += c;
      }
    }
  }
  t.rep = make_wdrep(q, Matrix::diagonal(phi), std::move(N));
  return t;
}

Subspace ideal_power(const FreeTruncation& t, std::size_t k) {
  std::vector<Vec> gens;
  for (std::size_t a = 0; a < t.dim(); ++a) {
    if (t.words[a].size() < k) continue;
    Vec e(t.dim(), Q(0));
    e[a] = 1;
    gens.push_back(std::move(e));
  }
  return Subspace::span(t.dim(), gens);
}

Subspace augmentation_ideal(const FreeTruncation& t) { return ideal_power(t, 1); }

Subspace product_span(const FreeTruncation& t, const Subspace& a, const Subspace& b) {
  SpanBuilder span(t.dim());
  const auto as = a.basis().columns();
  const auto bs = b.basis().columns();
  for (const auto& x : as) {
    for (const auto& y : bs) {
      span.add(t.multiply(x, y));
      if (span.full()) return span.subspace();
    }
  }
  return span.subspace();
}

WDRep degree_piece(const FreeTruncation& t, std::size_t k) {
  if (k > t.depth) throw DomainError("degree_piece: degree beyond the truncation depth");
  const std::size_t off = t.offset(k);
  const std::size_t len = t.offset(k + 1) - off;
  return WDRep{t.q, t.rep.phi.block(off, off, len, len), t.rep.N.block(off, off, len, len)};
}

FilteredWDRep weight_filtration_gen(const FreeTruncation& t, const Subspace& K) {
  const Subspace I = augmentation_ideal(t);
  if (K.ambient() != t.dim()) throw DomainError("weight_filtration_gen: K has the wrong ambient dimension");
  if (!I.contains(K)) throw DomainError("weight_filtration_gen: K is not contained in the augmentation ideal");

  // levels[i] = W_{-i}
  std::vector<Subspace> levels{Subspace::full(t.dim()), I, ideal_power(t, 2) + K};
  while (levels.back().dim() > 0) {
    const std::size_t i = levels.size();
    Subspace next = Subspace::zero(t.dim());
    for (std::size_t p = 1; p < i; ++p) next = next + product_span(t, levels[p], levels[i - p]);
    levels.push_back(std::move(next));
  }

  FilteredWDRep v{t.rep, {}};
  for (std::size_t i = 0; i < levels.size(); ++i) v.W.emplace(-static_cast<int>(i), levels[i]);
  return v;
}

namespace {

// Reduced coproduct restricted to the words of one degree and letter content:
// columns are the words, rows the pairs (u, v) of nonempty subwords.
Subspace primitives_of_class(const FreeTruncation& t, const std::vector<std::size_t>& cls) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Q>>> cols(cls.size());
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const Word& w = t.words[cls[c]];
    const std::size_t len = w.size();
    std::map<std::size_t, Q> entries;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << len); ++mask) {
      Word u, v;
      for (std::size_t pos = 0; pos < len; ++pos) ((mask >> pos) & 1 ? u : v).push_back(w[pos]);
      auto key = std::make_pair(t.index(u), t.index(v));
      auto [it, fresh] = row_of.emplace(key, row_of.size());
      entries[it->second] += 1;
    }
    for (auto& [r, q] : entries) cols[c].emplace_back(r, q);
  }
  Matrix m(row_of.size(), cls.size());
  for (std::size_t c = 0; c < cls.size(); ++c)
    for (auto& [r, q] : cols[c]) m(r, c) = q;

  const Matrix ker = kernel_basis(m);
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Vec g(t.dim(), Q(0));
    for (std::size_t c = 0; c < cls.size(); ++c) g[cls[c]] = ker(c, k);
    gens.push_back(std::move(g));
  }
  return Subspace::span(t.dim(), gens);
}

}  // namespace

Subspace primitives(const FreeTruncation& t) {
  // Delta preserves degree and letter content, so the kernel splits by class.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < t.dim(); ++a) {
    const Word& w = t.words[a];
    if (w.empty()) continue;
    std::vector<std::size_t> content(t.letters, 0);
    for (auto c : w) ++content[c];
    classes[content].push_back(a);
  }
  Subspace out = Subspace::zero(t.dim());
  for (const auto& [content, cls] : classes) out = out + primitives_of_class(t, cls);
  return out;
}

std::vector<std::size_t> primitive_dims(const FreeTruncation& t) {
  const Subspace p = primitives(t);
  std::vector<std::size_t> dims(t.depth + 1, 0);
  // Primitives are spanned by homogeneous vectors, so the leading word of each
  // reduced basis column has that column's degree.
  for (std::size_t k = 0; k < p.dim(); ++k) ++dims[t.words[p.pivots()[k]].size()];
  return dims;
}

}  // namespace wdm
