#pragma once

#include <vector>

#include "wdm/mixed/filtered.hpp"
#include "wdm/pi1/lyndon.hpp"

namespace wdm {

// N(x_from) = coef * x_to on letters.
struct NPair {
  std::size_t from = 0;
  std::size_t to = 0;
  Q coef = 1;
};

// Free associative algebra on m letters modulo words longer than n. Basis:
// words ordered by length, then lexicographically; letters are primitive.
struct FreeTruncation {
  std::size_t letters = 0;
  std::size_t depth = 0;
  Z q;
  Vec eigenvalues;
  std::vector<NPair> n_pairs;
  std::vector<Word> words;
  WDRep rep;  // phi multiplicative, N a derivation

  std::size_t dim() const { return words.size(); }
  std::size_t offset(std::size_t length) const;
  std::size_t index(const Word& w) const;
  // Product of basis words, or -1 when it is truncated away.
  long product_index(std::size_t a, std::size_t b) const;
  Vec multiply(const Vec& x, const Vec& y) const;
};

FreeTruncation build_truncation(std::size_t m, std::size_t n, const Z& q, const Vec& eigenvalues,
                                const std::vector<NPair>& n_pairs);

// Words of length >= k.
Subspace ideal_power(const FreeTruncation& t, std::size_t k);
Subspace augmentation_ideal(const FreeTruncation& t);

// span{a b : a in A, b in B}
Subspace product_span(const FreeTruncation& t, const Subspace& a, const Subspace& b);

// Representation on the words of length exactly k, i.e. I^k / I^{k+1}.
WDRep degree_piece(const FreeTruncation& t, std::size_t k);

// W_0 = all, W_{-1} = I, W_{-2} = I^2 + K, W_{-i} = sum_{p+q=i} W_{-p} W_{-q}.
FilteredWDRep weight_filtration_gen(const FreeTruncation& t, const Subspace& K);

// Kernel of Delta - id (x) 1 - 1 (x) id, with Delta the shuffle coproduct.
Subspace primitives(const FreeTruncation& t);
// Dimension of the primitives in each degree 0..n.
std::vector<std::size_t> primitive_dims(const FreeTruncation& t);

}  // namespace wdm
