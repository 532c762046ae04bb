#pragma once

#include <random>

#include "wdm/pi1/lyndon.hpp"
#include "wdm/selmer/curve.hpp"
#include "wdm/selmer/lie.hpp"

namespace wdm {

// Free Lie algebra on graded letters modulo everything of degree > max_degree,
// with the standard bracketing of Lyndon words as basis. Basis elements are
// ordered by degree, then lexicographically.
struct FreeNilpotent {
  std::vector<int> letter_degree;
  int max_degree = 0;
  std::vector<Word> basis;
  std::vector<int> degree;
  // Standard factorization of each non-letter basis word, as basis indices.
  std::vector<std::pair<std::size_t, std::size_t>> factor;
  std::vector<std::size_t> letter_pos;
  LieAlgebra lie;

  std::size_t dim() const { return basis.size(); }
  std::size_t letters() const { return letter_degree.size(); }
  Subspace degree_at_least(int k) const;
  // W_{-k} = degree >= k, for k = 1 .. max_degree + 1.
  std::map<int, Subspace> weight_filtration() const;
};

FreeNilpotent free_nilpotent(const std::vector<int>& letter_degrees, int max_degree);

// Unique Lie homomorphism / derivation with the given letter images; each image
// must have degree at least that of its letter.
Matrix extend_hom(const FreeNilpotent& f, const std::vector<Vec>& images);
Matrix extend_derivation(const FreeNilpotent& f, const std::vector<Vec>& images);

Subspace generated_subalgebra(const LieAlgebra& g, const std::vector<Vec>& gens);

// Datum on a free nilpotent algebra from phi and N on the letters.
PhiNLieDatum free_datum(const FreeNilpotent& f, const Z& p, const std::vector<Vec>& phi_letters,
                        const std::vector<Vec>& n_letters, const std::vector<Vec>& f0_gens);

// x, y of weight -1 with phi = [[0, -1/p], [1, 0]], z = [x, y] with phi z = z / p, N = 0.
PhiNLieDatum heisenberg_datum(const Z& p = 2);

struct RandomDatumOptions {
  Z p = 2;
  int max_degree = 3;
  std::size_t max_extra = 2;  // generator blocks beyond the weight -1 pair
  bool conjugate = true;      // twist by exp of a random degree-raising derivation
  std::size_t f0_gens = 1;
};

// Free nilpotent datum on a weight -1 pair plus random blocks: a weight -2
// line with phi = +-1/p, a weight -2 triple (phi = 1, 1/p, 1/p^2, N a chain),
// a weight -3 pair (phi = 1/p, 1/p^2, N x = y). Mixed with negative weights and
// Frobenius-semisimple.
PhiNLieDatum random_mixed_datum(std::mt19937_64& rng, const RandomDatumOptions& o = {});

// Depth-n free nilpotent model of a punctured curve: g0 letters of eigenvalue 1
// sent by N to g0 letters of eigenvalue 1/p, and one 2-dimensional weight -1
// block per weight-1 eigenvalue pair. F0 is generated by g letters. Needs
// nu_s = nu_st and at most five pair labels; p <= 13.
PhiNLieDatum curve_datum(const CurveSelmerInput& in, const Z& p = 2);

}  // namespace wdm
