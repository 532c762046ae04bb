#pragma once

#include <vector>

#include "wdm/core/rational.hpp"

namespace wdm {

using Word = std::vector<std::size_t>;

// Lyndon words of length exactly i over letters 0..m-1, in lexicographic order.
std::vector<Word> lyndon_words(std::size_t m, std::size_t i);

// All Lyndon words of length 1..n, in lexicographic order (Duval).
std::vector<Word> lyndon_words_up_to(std::size_t m, std::size_t n);

bool is_lyndon(const Word& w);

int mobius(long n);

// (1/i) sum_{d | i} mu(d) m^{i/d}
Z lyndon_count(const Z& m, long i);

// sum_{i=1..n} lyndon_count(m, i)
Z necklace_sum(const Z& m, long n);

}  // namespace wdm
