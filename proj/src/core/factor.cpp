#include "wdm/core/factor.hpp"

#include <algorithm>
#include <random>

namespace wdm {

namespace {

using ZPoly = std::vector<Z>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

Z mod(const Z& x, const Z& m) {
  Z r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Z symmetric(const Z& x, const Z& m) {
  Z r = mod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

Z inv_mod(const Z& x, const Z& m) {
  Z r;
  if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t())) throw DomainError("non-invertible residue");
  return r;
}

ZPoly reduce(const ZPoly& a, const Z& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], m);
  trim(r);
  return r;
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Z& m) {
  ZPoly r(std::max(a.size(), b.size()), Z(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(r, m);
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const Z& m) {
  ZPoly r(std::max(a.size(), b.size()), Z(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(r, m);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Z& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Z(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(r, m);
}

ZPoly scale(const ZPoly& a, const Z& s, const Z& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return reduce(r, m);
}

// Division by b whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b, const Z& m) {
  a = reduce(a, m);
  if (b.empty()) throw DomainError("division by zero polynomial");
  if (deg(a) < deg(b)) return {{}, a};
  Z inv = inv_mod(b.back(), m);
  ZPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1), Z(0));
  for (long i = deg(a); i >= deg(b); --i) {
    Z f = mod(a[static_cast<std::size_t>(i)] * inv, m);
    q[static_cast<std::size_t>(i - deg(b))] = f;
    if (f == 0) continue;
    for (long j = 0; j <= deg(b); ++j) {
      auto& x = a[static_cast<std::size_t>(i - deg(b) + j)];
      x = mod(x - f * b[static_cast<std::size_t>(j)], m);
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

ZPoly monic(const ZPoly& a, const Z& m) { return a.empty() ? a : scale(a, inv_mod(a.back(), m), m); }

ZPoly gcd_p(ZPoly a, ZPoly b, const Z& p) {
  a = reduce(a, p);
  b = reduce(b, p);
  while (!b.empty()) {
    ZPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s a + t b = 1 mod p for coprime a, b.
std::pair<ZPoly, ZPoly> ext_gcd_p(const ZPoly& a, const ZPoly& b, const Z& p) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0{Z(1)}, s1{}, t0{}, t1{Z(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ZPoly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw DomainError("Hensel factors not coprime");
  Z inv = inv_mod(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

ZPoly powmod(ZPoly base, Z e, const ZPoly& f, const Z& p) {
  ZPoly r{Z(1)};
  base = divmod(base, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = divmod(mul(r, base, p), f, p).second;
    e >>= 1;
    if (e > 0) base = divmod(mul(base, base, p), f, p).second;
  }
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i);
  trim(d);
  return d;
}

// Equal-degree split of a monic product of irreducibles of degree d.
void edf(const ZPoly& g, long d, const Z& p, std::mt19937_64& rng, std::vector<ZPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Z pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  Z e = (pd - 1) / 2;
  while (true) {
    ZPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = Z(static_cast<unsigned long>(rng() % p.get_ui()));
    trim(a);
    if (deg(a) < 1) continue;
    ZPoly b = sub(powmod(a, e, g, p), ZPoly{Z(1)}, p);
    ZPoly c = gcd_p(b, g, p);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      edf(c, d, p, rng, out);
      edf(divmod(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a square-free polynomial mod p.
std::vector<ZPoly> factor_mod_p(const ZPoly& f, const Z& p) {
  std::mt19937_64 rng(0x5eed);
  std::vector<ZPoly> out;
  ZPoly g = monic(reduce(f, p), p);
  ZPoly x{Z(0), Z(1)};
  ZPoly h = x;
  for (long d = 1; 2 * d <= deg(g); ++d) {
    h = powmod(h, p, g, p);
    ZPoly gd = gcd_p(sub(h, x, p), g, p);
    if (deg(gd) > 0) {
      edf(gd, d, p, rng, out);
      g = divmod(g, gd, p).first;
      h = divmod(h, g, p).second;
    }
  }
  if (deg(g) > 0) out.push_back(g);
  return out;
}

// Lifts f = a0 * b0 mod p (a0 monic) to f = a * b mod p^k.
std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& f, ZPoly a, ZPoly b, const Z& p, unsigned k) {
  auto [s, t] = ext_gcd_p(a, b, p);
  Z pe = p;
  for (unsigned e = 1; e < k; ++e) {
    Z next = pe * p;
    ZPoly err = sub(f, mul(a, b, next), next);
    for (auto& c : err) c /= pe;
    ZPoly alpha = divmod(mul(t, err, p), a, p).second;
    ZPoly beta = divmod(sub(err, mul(b, alpha, p), p), a, p).first;
    a = add(a, scale(alpha, pe, next), next);
    b = add(b, scale(beta, pe, next), next);
    pe = next;
  }
  return {a, b};
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ZPoly>& facs, const Z& p, unsigned k, const Z& pk) {
  std::vector<ZPoly> out;
  ZPoly rest = reduce(f, pk);
  for (std::size_t i = 0; i + 1 < facs.size(); ++i) {
    ZPoly others{rest.empty() ? Z(0) : mod(rest.back(), p)};
    for (std::size_t j = i + 1; j < facs.size(); ++j) others = mul(others, facs[j], p);
    auto [a, b] = lift_pair(rest, facs[i], others, p, k);
    out.push_back(a);
    rest = b;
  }
  out.push_back(monic(rest, pk));
  return out;
}

Poly to_poly(const ZPoly& a) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = Q(a[i]);
  return Poly(c);
}

ZPoly to_zpoly(const Poly& p) {
  ZPoly z(p.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (p.coeffs()[i].get_den() != 1) throw DomainError("expected integer coefficients");
    z[i] = p.coeffs()[i].get_num();
  }
  return z;
}

ZPoly primitive(ZPoly a) {
  Z g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact quotient over Z, if b divides a.
std::optional<ZPoly> divides(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return ZPoly{};
  if (a[0] != 0 && b[0] != 0 && a[0] % b[0] != 0) return std::nullopt;
  auto [q, r] = divmod(to_poly(a), to_poly(b));
  if (!r.is_zero()) return std::nullopt;
  for (const auto& c : q.coeffs())
    if (c.get_den() != 1) return std::nullopt;
  return to_zpoly(q);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_prime_small(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  if (deg(f) <= 1) return {f};
  // Pick among a few admissible primes the one giving the fewest modular factors.
  Z best_p = 0;
  std::vector<ZPoly> best;
  int tried = 0;
  for (unsigned long q = 3; tried < 6 && q < 20000; q += 2) {
    if (!is_prime_small(q)) continue;
    Z p(q);
    if (mod(f.back(), p) == 0) continue;
    ZPoly fp = reduce(f, p);
    if (deg(gcd_p(fp, derivative(fp), p)) > 0) continue;
    ++tried;
    auto facs = factor_mod_p(f, p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw DomainError("no admissible prime for factorization");
  if (best.size() == 1) return {f};

  Z norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Z norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  Z bound = abs(f.back()) * (norm + 1);
  bound <<= static_cast<mp_bitcnt_t>(deg(f));
  bound *= 2;
  unsigned k = 1;
  Z pk = best_p;
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, k, pk);

  std::vector<ZPoly> out;
  ZPoly g = f;
  for (std::size_t s = 1; 2 * s <= lifted.size();) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    do {
      ZPoly cand{g.back()};
      for (auto i : idx) cand = mul(cand, lifted[i], pk);
      for (auto& c : cand) c = symmetric(c, pk);
      trim(cand);
      cand = primitive(cand);
      if (auto q = divides(g, cand)) {
        out.push_back(cand);
        g = *q;
        std::vector<ZPoly> rest;
        for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          rest.push_back(lifted[i]);
        }
        lifted = std::move(rest);
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (deg(g) > 0) out.push_back(primitive(g));
  return out;
}

}  // namespace

std::pair<Q, Poly> primitive_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("primitive part of the zero polynomial");
  Z l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
  ZPoly z(p.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = Q(p.coeffs()[i] * l).get_num();
  ZPoly pr = primitive(z);
  Poly prim = to_poly(pr);
  return {p.leading() / prim.leading(), prim};
}

Factorization factor_z(const Poly& p) {
  if (p.is_zero()) throw DomainError("factor_z: zero polynomial");
  if (p.degree() > 64) throw DomainError("factor_z: degree exceeds 64");
  Factorization out;
  if (p.degree() == 0) {
    out.content = p.leading();
    return out;
  }
  // Square-free decomposition over Q.
  Poly f = p.monic();
  Poly c = gcd(f, f.derivative());
  Poly w = divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = divmod(w, y).first;
    if (z.degree() > 0) {
      for (auto& g : factor_squarefree(to_zpoly(primitive_part(z).second)))
        out.factors.push_back({to_poly(g), i});
    }
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    const auto &x = a.poly.coeffs(), &y = b.poly.coeffs();
    for (std::size_t k = x.size(); k-- > 0;)
      if (x[k] != y[k]) return x[k] < y[k];
    return a.multiplicity < b.multiplicity;
  });
  Q lead = 1;
  for (const auto& fa : out.factors) lead *= pow(fa.poly.leading(), static_cast<long>(fa.multiplicity));
  out.content = p.leading() / lead;
  return out;
}

}  // namespace wdm
