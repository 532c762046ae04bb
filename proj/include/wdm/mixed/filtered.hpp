#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdm/wdrep/wdrep.hpp"

namespace wdm {

// Weil-Deligne representation with an increasing filtration W. W_i is the
// stored subspace at the largest key <= i; it is 0 below the lowest key and
// everything above the highest.
struct FilteredWDRep {
  WDRep rep;
  std::map<int, Subspace> W;

  std::size_t dim() const { return rep.dim(); }
  Subspace w(int i) const;
};

// W_i = V, W_{i-1} = 0.
FilteredWDRep pure_filtration(const WDRep& a, int i);

// Violations of nesting and stability, one string per offending index.
std::vector<std::string> filtration_errors(const FilteredWDRep& v);

// Basis adapted to W, built by echelon completion in ascending weight
// order; columns of P are grouped by weight, lowest first.
struct AdaptedBasis {
  Matrix P, Pinv;
  std::vector<int> weight;                                    // per column
  std::map<int, std::pair<std::size_t, std::size_t>> blocks;  // weight -> (offset, size), nonempty only
};

AdaptedBasis adapted_basis(const FilteredWDRep& v);

// Graded pieces gr_i realized on the adapted columns of weight i.
std::map<int, WDRep> graded_pieces(const FilteredWDRep& v, const AdaptedBasis& b);

// gr V on adapted coordinates: block-diagonal phi and N, W_i spanned by the
// coordinates of weight <= i.
FilteredWDRep associated_graded(const FilteredWDRep& v, const AdaptedBasis& b);

struct MixednessCertificate {
  bool mixed = false;
  std::map<int, PurityCertificate> pieces;
  std::vector<std::string> errors;
};

MixednessCertificate check_mixed(const FilteredWDRep& v, const WeilOptions& opts = {});

FilteredWDRep tensor(const FilteredWDRep& a, const FilteredWDRep& b);
FilteredWDRep direct_sum(const FilteredWDRep& a, const FilteredWDRep& b);
// Transport along the change of coordinates x -> p x.
FilteredWDRep transport(const FilteredWDRep& v, const Matrix& p);
// Subrepresentation on s (coordinates in the stored basis of s), induced filtration.
FilteredWDRep sub_rep(const FilteredWDRep& v, const Subspace& s);
// Quotient by s, on the complement coordinates of s; returns the projection too.
std::pair<FilteredWDRep, Matrix> quotient_rep(const FilteredWDRep& v, const Subspace& s);

// Associated graded of a filtered map f : V1 -> V2 as a block-diagonal matrix
// in adapted coordinates. Throws if f is not filtered.
Matrix graded_map(const AdaptedBasis& b1, const AdaptedBasis& b2, const Matrix& f);

// Unique Frobenius-equivariant filtered f : V1 -> V2 inducing gr_f (a
// block-diagonal matrix in adapted coordinates) such that
// sum_s C(r,s)(-1)^s N^{r-s} f N^s lowers W by r+1 for every r > 0.
Matrix weak_lift(const FilteredWDRep& v1, const FilteredWDRep& v2, const Matrix& gr_f, bool verify_inputs = true);

// True iff f satisfies the weak morphism conditions and induces gr_f.
bool is_weak_lift(const FilteredWDRep& v1, const FilteredWDRep& v2, const Matrix& gr_f, const Matrix& f);

struct Splitting {
  Matrix S;  // gr V (adapted coordinates) -> V
  AdaptedBasis basis;
  FilteredWDRep graded;
};

Splitting canonical_splitting(const FilteredWDRep& v, bool verify_input = true);

// Canonical grading operator: S diag(weights) S^{-1}.
Matrix grading_operator(const Splitting& s);

}  // namespace wdm
