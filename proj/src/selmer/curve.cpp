#include "wdm/selmer/curve.hpp"

#include <cctype>

#include "wdm/pi1/lyndon.hpp"

namespace wdm {

namespace {

// "uK" -> K, or 0 if the label is not of that form.
long pair_index(const std::string& label) {
  if (label.size() < 2 || label[0] != 'u') return 0;
  long k = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return 0;
    if (k > 1000000) return 0;
    k = 10 * k + (label[i] - '0');
  }
  return k;
}

long to_long(const Q& x, const char* what) {
  if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw DomainError(std::string(what) + " is not a small integer");
  return x.get_num().get_si();
}

}  // namespace

long CurveNu::total() const {
  long t = s + st;
  for (const auto& [k, m] : pairs) t += 2 * m;
  return t;
}

long CurveNu::sum_of_squares() const {
  long t = s * s + st * st;
  for (const auto& [k, m] : pairs) t += 2 * m * m;
  return t;
}

std::vector<std::string> curve_input_errors(const CurveSelmerInput& in) {
  std::vector<std::string> errs;
  if (in.g < 1) errs.push_back("g must be at least 1");
  if (in.g0 < 0 || in.g0 > in.g) errs.push_back("g0 must satisfy 0 <= g0 <= g");
  if (in.n < 1) errs.push_back("n must be at least 1");
  if (in.deg < 1) errs.push_back("deg must be at least 1");
  CurveNu nu;
  bool seen_s = false, seen_st = false;
  for (const auto& [label, m] : in.nu) {
    if (m < 0) errs.push_back("multiplicity of " + label + " is negative");
    if (label == "s") {
      if (seen_s) errs.push_back("label s repeated");
      seen_s = true;
      nu.s = m;
    } else if (label == "st") {
      if (seen_st) errs.push_back("label st repeated");
      seen_st = true;
      nu.st = m;
    } else if (long k = pair_index(label); k > 0) {
      if (nu.pairs.count(k)) errs.push_back("label " + label + " repeated");
      nu.pairs[k] = m;
    } else {
      errs.push_back("unknown eigenvalue label " + label + " (expected s, st or uK with K >= 1)");
    }
  }
  if (errs.empty() && nu.total() != 2 * in.g - 2 * in.g0)
    errs.push_back("weight-1 multiplicities sum to " + std::to_string(nu.total()) + ", expected 2g - 2g0 = " +
                   std::to_string(2 * in.g - 2 * in.g0));
  return errs;
}

CurveNu parse_nu(const CurveSelmerInput& in) {
  auto errs = curve_input_errors(in);
  if (!errs.empty()) throw DomainError("curve input: " + errs.front());
  CurveNu nu;
  for (const auto& [label, m] : in.nu) {
    if (label == "s")
      nu.s = m;
    else if (label == "st")
      nu.st = m;
    else
      nu.pairs[pair_index(label)] = m;
  }
  return nu;
}

Q necklace(const Q& t, long i) {
  if (i < 1) throw DomainError("necklace: length must be positive");
  Q s(0);
  for (long d = 1; d <= i; ++d)
    if (i % d == 0) s += Q(mobius(d)) * pow(t, i / d);
  return s / Q(i);
}

Q necklace_upto(const Q& t, long n) {
  Q s(0);
  for (long i = 1; i <= n; ++i) s += necklace(t, i);
  return s;
}

CurveSelmerDims curve_selmer_dim(const CurveSelmerInput& in) {
  const CurveNu nu = parse_nu(in);
  const long n = in.n;
  const Q g(in.g), g0(in.g0);
  const Q hodge = Q(in.deg) * (necklace_upto(2 * g, n) - necklace_upto(g, n));
  Q val = hodge - necklace_upto(g0, n);
  for (long k = 1; k <= n; ++k) val += pow(g0, k);
  Q a(0), b(0);
  for (long k = 1; k <= n - 1; ++k) a += Q(k) * pow(g0, k - 1);
  for (long k = 0; k <= n / 2 - 1; ++k) b += pow(g0, k);
  val += a / 2 * Q(nu.sum_of_squares()) - b / 2 * Q(nu.s + nu.st);
  return CurveSelmerDims{to_long(hodge, "Hodge term"), to_long(val, "curve dimension")};
}

long curve_selmer_oracle(const CurveSelmerInput& in) {
  const CurveNu nu = parse_nu(in);
  // Label coordinates: s exponent, t exponent mod 2, then one exponent per pair.
  std::map<long, std::size_t> slot;
  for (const auto& [k, m] : nu.pairs) slot.emplace(k, 2 + slot.size());
  const std::size_t width = 2 + slot.size();
  std::vector<std::vector<long>> letters;
  auto label = [&](long s, long t, long k, long e) {
    std::vector<long> x(width, 0);
    x[0] = s;
    x[1] = t;
    if (k) x[slot.at(k)] = e;
    return x;
  };
  for (long i = 0; i < in.g0; ++i) letters.push_back(label(0, 0, 0, 0));
  for (long i = 0; i < in.g0; ++i) letters.push_back(label(2, 0, 0, 0));
  for (const auto& [k, m] : nu.pairs)
    for (long i = 0; i < m; ++i) {
      letters.push_back(label(1, 0, k, 1));
      letters.push_back(label(1, 0, k, -1));
    }
  for (long i = 0; i < nu.s; ++i) letters.push_back(label(1, 0, 0, 0));
  for (long i = 0; i < nu.st; ++i) letters.push_back(label(1, 1, 0, 0));

  const std::vector<long> one(width, 0), q = label(2, 0, 0, 0);
  long correction = 0;
  for (const Word& w : lyndon_words_up_to(letters.size(), static_cast<std::size_t>(in.n))) {
    std::vector<long> prod(width, 0);
    for (std::size_t c : w)
      for (std::size_t j = 0; j < width; ++j) prod[j] += letters[c][j];
    prod[1] %= 2;
    if (prod == q) ++correction;
    if (prod == one) --correction;
  }
  const Q g(in.g);
  return to_long(Q(in.deg) * (necklace_upto(2 * g, in.n) - necklace_upto(g, in.n)), "Hodge term") + correction;
}

}  // namespace wdm
