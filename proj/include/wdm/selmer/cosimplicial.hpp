#pragma once

#include <array>

#include "wdm/selmer/cocycle.hpp"

namespace wdm {

// Points of the first three levels of the cosimplicial group, in log
// coordinates. Pairs (v, u) and triples (v, v', u) multiply as
// (v, u)(w, t) = (v + Ad_u w, u t).
struct D0Point {
  Vec x0, u0;
};

struct D1Point {
  Vec x0, x1;
  Vec v0, u0;
  Vec v1, u1;
};

struct D2Triple {
  Vec v, vp, u;
};

struct D2Point {
  std::array<Vec, 3> x;
  std::array<D2Triple, 3> t;
};

D1Point coface(const SelmerContext& c, int k, const D0Point& a);  // k in {0, 1}
D2Point coface(const SelmerContext& c, int k, const D1Point& a);  // k in {0, 1, 2}

D0Point mul(const SelmerContext& c, const D0Point& a, const D0Point& b);
D1Point mul(const SelmerContext& c, const D1Point& a, const D1Point& b);
D2Point mul(const SelmerContext& c, const D2Point& a, const D2Point& b);

bool operator==(const D1Point& a, const D1Point& b);
bool operator==(const D2Point& a, const D2Point& b);

// d^1 a = d^2 a . d^0 a
bool z1_via_cofaces(const SelmerContext& c, const D1Point& a);
// x0 = 1, u0 = 1, v1 = p Ad_{u1}(phi v0), v1 = v0 + xi_N(u1)
bool z1_equations(const SelmerContext& c, const D1Point& a);

// (x, v, u) -> (1; x; v, 1; v + xi_N(u), u)
D1Point embed_cocycle(const SelmerContext& c, const GCocycle& z);

}  // namespace wdm
