#include "wdm/core/weil.hpp"

#include <mpfr.h>

#include "wdm/core/factor.hpp"

namespace wdm {

namespace {

// Minimal RAII wrapper; every operation rounds to nearest at the precision of *this.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(x_); }
  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

  static Real of(const Q& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  Q exact() const {
    if (mpfr_zero_p(x_)) return 0;
    Z m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x_);
    Q r(m);
    if (e >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
  }

 private:
  mpfr_t x_;
};

Real operator+(const Real& a, const Real& b) { Real r(a.prec()); mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }
Real operator-(const Real& a, const Real& b) { Real r(a.prec()); mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }
Real operator*(const Real& a, const Real& b) { Real r(a.prec()); mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }
Real operator/(const Real& a, const Real& b) { Real r(a.prec()); mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }

struct Cx {
  Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
bool is_zero(const Cx& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

struct QC {
  Q re, im;
};
QC operator+(const QC& a, const QC& b) { return {a.re + b.re, a.im + b.im}; }
QC operator-(const QC& a, const QC& b) { return {a.re - b.re, a.im - b.im}; }
QC operator*(const QC& a, const QC& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Q norm2(const QC& a) { return a.re * a.re + a.im * a.im; }

// Rational upper bound on sqrt(x), 64 significant bits.
Q sqrt_up(const Q& x) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(t, t, MPFR_RNDU);
  Real r(64);
  mpfr_set(r.get(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r.exact();
}

// Aberth iteration at the given precision, started on the circle of radius sqrt(r2).
std::vector<Cx> approximate_roots(const Vec& f, const Q& r2, mpfr_prec_t prec) {
  const std::size_t d = f.size() - 1;
  std::vector<Real> c;
  for (const auto& a : f) c.push_back(Real::of(a, prec));
  Real radius = Real::of(r2, prec);
  mpfr_sqrt(radius.get(), radius.get(), MPFR_RNDN);
  Real pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  std::vector<Cx> z;
  for (std::size_t k = 0; k < d; ++k) {
    Real ang = pi * Real::of(frac(2 * static_cast<long>(k) * 100 + 71, 100 * static_cast<long>(d)), prec);
    Real co(prec), si(prec);
    mpfr_sin_cos(si.get(), co.get(), ang.get(), MPFR_RNDN);
    z.push_back({radius * co, radius * si});
  }
  Real tol = Real::of(Q(1), prec);
  mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(prec) + 16, MPFR_RNDN);
  tol = tol * (radius + Real::of(Q(1), prec));
  Real one = Real::of(Q(1), prec), zero(prec);
  for (int it = 0; it < 400 + 20 * static_cast<int>(d); ++it) {
    bool done = true;
    for (std::size_t k = 0; k < d; ++k) {
      Cx p{c[d], zero}, dp{zero, zero};
      for (std::size_t i = d; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + Cx{c[i], zero};
      }
      if (is_zero(p)) continue;
      if (is_zero(dp)) {
        z[k].re = z[k].re + tol;
        done = false;
        continue;
      }
      Cx ratio = p / dp;
      Cx s{zero, zero};
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s = s + Cx{one, zero} / (z[k] - z[j]);
      Cx w = ratio / (Cx{one, zero} - ratio * s);
      z[k] = z[k] - w;
      Real m = w.re * w.re + w.im * w.im;
      if (mpfr_cmp(m.get(), (tol * tol).get()) > 0) done = false;
    }
    if (done) break;
  }
  return z;
}

enum class DiskOutcome { OnCircle, OffCircle, Undecided };

// Inclusion disks D(z_k, d|W_k|) with Weierstrass corrections W_k; when pairwise
// disjoint each holds exactly one root. The reflection z -> r2/conj(z) permutes the
// roots, so a disk whose reflection meets no other disk holds a root on the circle,
// and a disk disjoint from its own reflection holds a root off it.
DiskOutcome certify(const Vec& f, const Q& r2, const std::vector<Cx>& approx) {
  const std::size_t d = f.size() - 1;
  std::vector<QC> z;
  for (const auto& a : approx) z.push_back({a.re.exact(), a.im.exact()});
  std::vector<Q> rho(d);
  for (std::size_t k = 0; k < d; ++k) {
    QC val{f[d], 0};
    for (std::size_t i = d; i-- > 0;) val = val * z[k] + QC{f[i], 0};
    QC den{f[d], 0};
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) den = den * (z[k] - z[j]);
    Q dn = norm2(den);
    if (dn == 0) return DiskOutcome::Undecided;
    Q w2 = norm2(val) / dn;
    rho[k] = sqrt_up(Q(static_cast<long>(d * d)) * w2);
  }
  auto meets = [](const QC& c1, const Q& r1, const QC& c2, const Q& r2_) {
    Q s = r1 + r2_;
    return norm2(c1 - c2) <= s * s;
  };
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k + 1; l < d; ++l)
      if (meets(z[k], rho[k], z[l], rho[l])) return DiskOutcome::Undecided;
  bool all_on = true;
  for (std::size_t k = 0; k < d; ++k) {
    Q m = norm2(z[k]) - rho[k] * rho[k];
    if (m <= 0) return DiskOutcome::Undecided;
    QC cr{r2 * z[k].re / m, r2 * z[k].im / m};
    Q rr = r2 * rho[k] / m;
    if (!meets(cr, rr, z[k], rho[k])) return DiskOutcome::OffCircle;
    bool others = false;
    for (std::size_t l = 0; l < d && !others; ++l)
      if (l != k && meets(cr, rr, z[l], rho[l])) others = true;
    if (others) all_on = false;
  }
  return all_on ? DiskOutcome::OnCircle : DiskOutcome::Undecided;
}

}  // namespace

WeilVerdict weil_verdict(const Poly& f_in, const Z& q, const WeilOptions& opts) {
  if (q < 2) throw DomainError("weil_weight: q must be at least 2");
  if (f_in.degree() < 1) throw DomainError("weil_weight: expected a nonconstant polynomial");
  Poly f = primitive_part(f_in).second;
  const Vec& c = f.coeffs();
  const long d = f.degree();
  WeilVerdict v;
  if (c[0] == 0) {
    v.reason = "zero root";
    return v;
  }
  // |c0/cd|^2 = q^e with e = i*d.
  Q r = (c[0] / c.back()) * (c[0] / c.back());
  long e = 0;
  Q qq(q);
  while (r >= qq) {
    r /= qq;
    ++e;
  }
  while (r < 1) {
    r *= qq;
    --e;
  }
  if (r != 1) {
    v.reason = "constant term is not a power of q";
    return v;
  }
  if (e % d != 0) {
    v.reason = "constant term gives a non-integral weight";
    return v;
  }
  const long i = e / d;
  const Q qi = pow(qq, i);
  Vec g(c.size());
  for (long k = 0; k <= d; ++k) g[static_cast<std::size_t>(d - k)] = c[static_cast<std::size_t>(k)] * pow(qi, k);
  Q lambda = g.back() / c.back();
  for (long k = 0; k <= d; ++k)
    if (g[static_cast<std::size_t>(k)] != lambda * c[static_cast<std::size_t>(k)]) {
      v.reason = "functional equation fails";
      return v;
    }
  if (d == 1) {
    v.weight = static_cast<int>(i);
    v.reason = "rational root";
    return v;
  }
  for (unsigned bits = opts.start_bits; bits <= opts.max_bits; bits *= 2) {
    auto roots = approximate_roots(c, qi, static_cast<mpfr_prec_t>(bits));
    auto outcome = certify(c, qi, roots);
    if (outcome == DiskOutcome::OnCircle) {
      v.weight = static_cast<int>(i);
      v.bits_used = bits;
      v.reason = "root disks certified";
      return v;
    }
    if (outcome == DiskOutcome::OffCircle) {
      v.bits_used = bits;
      v.reason = "a root lies off the circle";
      return v;
    }
  }
  throw PrecisionError("weil_weight: precision exhausted at " + std::to_string(opts.max_bits) + " bits for " + f.str());
}

std::optional<int> weil_weight(const Poly& f, const Z& q, const WeilOptions& opts) {
  return weil_verdict(f, q, opts).weight;
}

}  // namespace wdm
