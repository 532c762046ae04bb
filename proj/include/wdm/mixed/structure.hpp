#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wdm/mixed/filtered.hpp"

namespace wdm {

struct StructureBlock {
  int i = 0;
  int j = 0;
  Subspace space;     // V^{i,j}
  Matrix embedding;   // V^{i,j} (x) std_j -> V; column t*(j+1)+r is the image of x_t (x) z^r
  Matrix graded;      // the same map into gr_i V, adapted coordinates
};

struct StructureDecomposition {
  std::vector<StructureBlock> blocks;  // ordered by (i, j)
  Matrix embedding;                    // all blocks side by side
  Matrix inverse;
  Splitting splitting;

  Subspace component(int i, int j) const;
};

// V^{i,j} = {x in W_i V^{i+j} : N^{j+r} x in W_{i-r-1} for all r > 0}.
Subspace structure_component(const FilteredWDRep& v, const WeightDecomposition& wd, int i, int j);

StructureDecomposition structure_decompose(const FilteredWDRep& v, const WeilOptions& opts = {});

struct CGComponent {
  long r = 0;
  long j = 0;        // j1 + j2 - 2r
  Vec generator;     // in std_{j1} (x) std_{j2}, index r1*(j2+1) + r2
  Matrix orbit;      // columns N^k generator, k = 0..j
  // sum (-1)^{r2} C(j1-r2, r1) C(j2-r1, r2) z^{r1} (x) z^{r2}, and whether it
  // generates a copy of std_j(r); it does for (1,1) but not in general.
  Vec binomial_vector;
  bool binomial_vector_generates = false;
};

// Generators of the summands std_{j1+j2-2r}(r) of std_{j1} (x) std_{j2}: the
// vectors sum (-1)^{r2} C(r, r1) z^{r1} (x) z^{r2} killed by the raising operator.
std::vector<CGComponent> clebsch_gordan(long j1, long j2, const Z& q);

struct ML2Element {
  Q a, b, c, d;
  Q sqrt_det;

  Q det() const { return a * d - b * c; }
};

// z^r -> det^{-j} (a + c z)^{j-r} (b + d z)^r on std_j.
Matrix ml2_std(const ML2Element& m, long j);
// Block-wise through the structure decomposition, with sqrt_det^{i+j} on V^{i,j}.
Matrix ml2_act(const ML2Element& m, const StructureDecomposition& sd);
Matrix ml2_act(const ML2Element& m, const FilteredWDRep& v);

}  // namespace wdm
