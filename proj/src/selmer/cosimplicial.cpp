#include "wdm/selmer/cosimplicial.hpp"

namespace wdm {

namespace {

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec scale(Vec a, const Q& s) {
  for (auto& x : a) x *= s;
  return a;
}

void check(const SelmerContext& c, std::initializer_list<const Vec*> vs) {
  for (const Vec* v : vs)
    if (v->size() != c.dim()) throw DomainError("cosimplicial point has a component of the wrong length");
}

void check(const SelmerContext& c, const D0Point& a) { check(c, {&a.x0, &a.u0}); }
void check(const SelmerContext& c, const D1Point& a) { check(c, {&a.x0, &a.x1, &a.v0, &a.u0, &a.v1, &a.u1}); }
void check(const SelmerContext& c, const D2Point& a) {
  for (int i = 0; i < 3; ++i) check(c, {&a.x[i], &a.t[i].v, &a.t[i].vp, &a.t[i].u});
}

Vec pphi(const SelmerContext& c, const Vec& v) { return scale(c.phi(v), Q(c.datum().p)); }

}  // namespace

D1Point coface(const SelmerContext& c, int k, const D0Point& a) {
  check(c, a);
  const Vec zero = c.group().identity();
  switch (k) {
    case 0: {
      const Vec xi = c.xi(a.u0);
      return D1Point{a.x0, a.x0, xi, a.u0, pphi(c, xi), c.phi(a.u0)};
    }
    case 1:
      return D1Point{a.x0, a.u0, zero, a.u0, zero, a.u0};
    default:
      throw DomainError("coface D0 -> D1: k must be 0 or 1");
  }
}

D2Point coface(const SelmerContext& c, int k, const D1Point& a) {
  check(c, a);
  const Vec zero = c.group().identity();
  switch (k) {
    case 0: {
      const Vec xi0 = c.xi(a.u0);
      return D2Point{{a.x0, a.x0, a.x1},
                     {D2Triple{xi0, a.v0, a.u0}, D2Triple{pphi(c, xi0), pphi(c, a.v0), c.phi(a.u0)},
                      D2Triple{c.xi(a.u1), a.v1, a.u1}}};
    }
    case 1:
      return D2Point{{a.x0, a.x1, a.x1},
                     {D2Triple{a.v0, a.v0, a.u0}, D2Triple{a.v1, a.v1, a.u1}, D2Triple{a.v1, a.v1, a.u1}}};
    case 2:
      return D2Point{{a.x0, a.x1, a.u0},
                     {D2Triple{a.v0, zero, a.u0}, D2Triple{a.v1, zero, a.u1}, D2Triple{a.v0, zero, a.u0}}};
    default:
      throw DomainError("coface D1 -> D2: k must be 0, 1 or 2");
  }
}

D0Point mul(const SelmerContext& c, const D0Point& a, const D0Point& b) {
  check(c, a);
  check(c, b);
  const LieGroup& g = c.group();
  return D0Point{g.mul(a.x0, b.x0), g.mul(a.u0, b.u0)};
}

D1Point mul(const SelmerContext& c, const D1Point& a, const D1Point& b) {
  check(c, a);
  check(c, b);
  const LieGroup& g = c.group();
  return D1Point{g.mul(a.x0, b.x0), g.mul(a.x1, b.x1),     add(a.v0, g.Ad(a.u0, b.v0)),
                 g.mul(a.u0, b.u0), add(a.v1, g.Ad(a.u1, b.v1)), g.mul(a.u1, b.u1)};
}

D2Point mul(const SelmerContext& c, const D2Point& a, const D2Point& b) {
  check(c, a);
  check(c, b);
  const LieGroup& g = c.group();
  D2Point out;
  for (int i = 0; i < 3; ++i) {
    out.x[i] = g.mul(a.x[i], b.x[i]);
    const D2Triple &s = a.t[i], &t = b.t[i];
    out.t[i] = D2Triple{add(s.v, g.Ad(s.u, t.v)), add(s.vp, g.Ad(s.u, t.vp)), g.mul(s.u, t.u)};
  }
  return out;
}

bool operator==(const D1Point& a, const D1Point& b) {
  return a.x0 == b.x0 && a.x1 == b.x1 && a.v0 == b.v0 && a.u0 == b.u0 && a.v1 == b.v1 && a.u1 == b.u1;
}

bool operator==(const D2Point& a, const D2Point& b) {
  for (int i = 0; i < 3; ++i)
    if (a.x[i] != b.x[i] || a.t[i].v != b.t[i].v || a.t[i].vp != b.t[i].vp || a.t[i].u != b.t[i].u) return false;
  return true;
}

bool z1_via_cofaces(const SelmerContext& c, const D1Point& a) {
  return coface(c, 1, a) == mul(c, coface(c, 2, a), coface(c, 0, a));
}

bool z1_equations(const SelmerContext& c, const D1Point& a) {
  check(c, a);
  const LieGroup& g = c.group();
  return is_zero(a.x0) && is_zero(a.u0) && a.v1 == scale(g.Ad(a.u1, c.phi(a.v0)), Q(c.datum().p)) && a.v1 == add(a.v0, c.xi(a.u1));
}

D1Point embed_cocycle(const SelmerContext& c, const GCocycle& z) {
  check(c, {&z.x, &z.v, &z.u});
  const Vec zero = c.group().identity();
  return D1Point{zero, z.x, z.v, zero, add(z.v, c.xi(z.u)), z.u};
}

}  // namespace wdm
