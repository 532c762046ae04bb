#include "wdm/pi1/lyndon.hpp"

namespace wdm {

std::vector<Word> lyndon_words_up_to(std::size_t m, std::size_t n) {
  std::vector<Word> out;
  if (m == 0 || n == 0) return out;
  Word w{0};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t k = w.size();
    while (w.size() < n) w.push_back(w[w.size() - k]);
    while (!w.empty() && w.back() == m - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::vector<Word> lyndon_words(std::size_t m, std::size_t i) {
  std::vector<Word> out;
  for (auto& w : lyndon_words_up_to(m, i))
    if (w.size() == i) out.push_back(std::move(w));
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t s = 1; s < w.size(); ++s) {
    Word rot(w.begin() + static_cast<long>(s), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(s));
    if (!(w < rot)) return false;
  }
  return true;
}

int mobius(long n) {
  if (n < 1) throw DomainError("mobius: argument must be positive");
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Z lyndon_count(const Z& m, long i) {
  if (i < 1) throw DomainError("lyndon_count: length must be positive");
  Z sum = 0;
  for (long d = 1; d <= i; ++d) {
    if (i % d) continue;
    Z p;
    mpz_pow_ui(p.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(i / d));
    sum += mobius(d) * p;
  }
  return sum / i;
}

Z necklace_sum(const Z& m, long n) {
  Z s = 0;
  for (long i = 1; i <= n; ++i) s += lyndon_count(m, i);
  return s;
}

}  // namespace wdm
