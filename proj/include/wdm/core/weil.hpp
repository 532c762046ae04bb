#pragma once

#include <optional>
#include <string>

#include "wdm/core/poly.hpp"

namespace wdm {

struct WeilOptions {
  unsigned start_bits = 128;
  unsigned max_bits = 1024;
};

struct WeilVerdict {
  std::optional<int> weight;  // empty: not a q-Weil number of integer weight
  unsigned bits_used = 0;     // 0 when the exact layer decided
  std::string reason;
};

// Weight i such that every complex root of the irreducible f has absolute
// value q^{i/2}. Exact necessary conditions first (constant term and the
// functional equation x^d f(q^i/x) ~ f), then root-inclusion disks computed
// at increasing precision. Throws PrecisionError when max_bits is exhausted.
WeilVerdict weil_verdict(const Poly& f, const Z& q, const WeilOptions& opts = {});
std::optional<int> weil_weight(const Poly& f, const Z& q, const WeilOptions& opts = {});

}  // namespace wdm
