#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdm/core/rational.hpp"

namespace wdm {

// Weight-1 Frobenius multiplicities are given by label: "uK" (K >= 1) stands
// for a conjugate pair lambda_K, q/lambda_K, each with the given multiplicity;
// "s" is +sqrt q and "st" is -sqrt q.
struct CurveSelmerInput {
  long g = 1, g0 = 0, n = 1, deg = 1;
  std::vector<std::pair<std::string, long>> nu;
};

struct CurveNu {
  std::map<long, long> pairs;  // K -> multiplicity of lambda_K (and of q/lambda_K)
  long s = 0, st = 0;

  long total() const;           // sum over all weight-1 eigenvalues
  long sum_of_squares() const;  // sum over lambda of nu_lambda^2
};

std::vector<std::string> curve_input_errors(const CurveSelmerInput& in);
// Throws DomainError on the first error.
CurveNu parse_nu(const CurveSelmerInput& in);

struct CurveSelmerDims {
  long dim_f = 0;  // equal to dim_e
  long dim_g = 0;
};

// Closed formula, with every divided difference summed out.
CurveSelmerDims curve_selmer_dim(const CurveSelmerInput& in);

// Lyndon words over eigenvalue-labelled letters: (# of product q) - (# of
// product 1) in each length up to n, plus the Hodge term.
long curve_selmer_oracle(const CurveSelmerInput& in);

// (1/i) sum_{d | i} mu(d) T^{i/d}
Q necklace(const Q& t, long i);
Q necklace_upto(const Q& t, long n);

}  // namespace wdm
