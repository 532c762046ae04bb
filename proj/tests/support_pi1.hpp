#pragma once

#include "wdm/pi1/truncation.hpp"

namespace wdm::testing {

// Two letters: a with phi-eigenvalue 1, b with eigenvalue 1/q, N(a) = b.
inline FreeTruncation tate_truncation(std::size_t n, long q) {
  return build_truncation(2, n, Z(q), {Q(1), frac(1, q)}, {NPair{0, 1, 1}});
}

}  // namespace wdm::testing
