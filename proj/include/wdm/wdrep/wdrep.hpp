#pragma once

#include <map>
#include <string>
#include <vector>

#include "wdm/core/poly.hpp"
#include "wdm/core/subspace.hpp"
#include "wdm/core/weil.hpp"

namespace wdm {

// Weil-Deligne representation with trivial inertia: Frobenius phi and
// monodromy N on Q^dim, subject to N phi = q phi N.
struct WDRep {
  Z q;
  Matrix phi;
  Matrix N;

  std::size_t dim() const { return phi.rows(); }
};

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> violations;
};

AxiomReport check_axioms(const WDRep& a);

// Validating constructor; throws DomainError listing the violations.
WDRep make_wdrep(const Z& q, Matrix phi, Matrix N);

WDRep trivial_rep(const Z& q, std::size_t dim = 1);

// std_j(r): phi z^s = q^{-s-r} z^s, N z^s = (j - s) z^{s+1}.
WDRep make_std(long j, const Z& q, long twist = 0);

WDRep tensor(const WDRep& a, const WDRep& b);
WDRep dual(const WDRep& a);
// phi -> q^{-n} phi
WDRep twist(const WDRep& a, long n);
WDRep direct_sum(const WDRep& a, const WDRep& b);

struct FactorWeight {
  Poly factor;
  unsigned multiplicity = 0;
  std::optional<int> weight;
  std::size_t dim = 0;
};

struct WeightDecomposition {
  std::map<int, Subspace> parts;
  Subspace unclassified;
  std::vector<FactorWeight> factors;

  Subspace part(int i) const;
};

WeightDecomposition weight_spaces(const WDRep& a, const WeilOptions& opts = {});
WeightDecomposition weight_spaces(const Matrix& phi, const Z& q, const WeilOptions& opts = {});

struct PurityStep {
  int j = 0;
  std::size_t dim_source = 0;  // dim V^{i+j}
  std::size_t dim_target = 0;  // dim V^{i-j}
  std::size_t rank = 0;        // rank of N^j : V^{i+j} -> V^{i-j}
};

struct PurityCertificate {
  bool pure = false;
  int weight = 0;
  std::vector<PurityStep> steps;
  std::string reason;
};

PurityCertificate is_pure(const WDRep& a, int i, const WeilOptions& opts = {});
PurityCertificate is_pure(const WDRep& a, int i, const WeightDecomposition& wd);

bool is_frobenius_semisimple(const Matrix& phi);
bool is_frobenius_semisimple(const WDRep& a);

}  // namespace wdm
