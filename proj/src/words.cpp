#include "factsum/words.hpp"

#include <cstdint>

#include "factsum/stirling.hpp"

namespace factsum {

Nat repeated_letter_count_formula(const Nat& n) {
  detail::require(n >= 1, "repeated_letter_count_formula: n must be >= 1");
  Int total = 0;
  Nat binom = n;  // C(n, 1)
  bool negate = ((n - 1) & 1) != 0;  // parity of n - i at i = 1
  for (Nat i = 1; i < n; ++i) {
    if (i > 1) binom = binom * (n - i + 1) / i;
    const Int term = Int(binom) * int_pow(i, n);
    if (negate) {
      total -= term;
    } else {
      total += term;
    }
    negate = !negate;
  }
  return -total;
}

Nat repeated_letter_count_enumerate(const Nat& n, unsigned enumeration_cap) {
  detail::require(n >= 1, "repeated_letter_count_enumerate: n must be >= 1");
  if (n > enumeration_cap) {
    throw std::length_error("repeated_letter_count_enumerate: n exceeds the enumeration cap");
  }
  const unsigned letters = n.convert_to<unsigned>();
  detail::require(letters <= 64, "repeated_letter_count_enumerate: alphabet too large");

  // odometer over base-n digit strings; no word list is ever materialized
  std::vector<unsigned> word(letters, 0);
  std::uint64_t repeated = 0;
  for (;;) {
    std::uint64_t seen = 0;
    for (unsigned position = 0; position < letters; ++position) {
      const std::uint64_t bit = std::uint64_t(1) << word[position];
      if ((seen & bit) != 0) {
        ++repeated;
        break;
      }
      seen |= bit;
    }
    unsigned position = letters;
    while (position > 0) {
      --position;
      if (++word[position] < letters) break;
      word[position] = 0;
      if (position == 0) return Nat(repeated);
    }
  }
}

Int overcount_check(const Nat& n, const Nat& k) {
  detail::require(n >= 1, "overcount_check: n must be >= 1");
  detail::require(k >= 1 && k <= n - 1, "overcount_check: requires 1 <= k <= n-1");
  const Nat m = n - k;  // reindexed sum over j = i - k
  Int total = 0;
  Nat binom = 1;  // C(m, 0)
  bool negate = (m & 1) != 0;
  for (Nat j = 0; j < m; ++j) {
    if (j > 0) binom = binom * (m - j + 1) / j;
    if (negate) {
      total -= binom;
    } else {
      total += binom;
    }
    negate = !negate;
  }
  return -total;
}

std::vector<LetterCensusEntry> exact_letter_census(const Nat& n) {
  detail::require(n >= 1, "exact_letter_census: n must be >= 1");
  std::vector<LetterCensusEntry> census;
  for (Nat k = 1; k <= n; ++k) {
    census.push_back({k, binomial(n, k) * surjection_count(n, k)});
  }
  return census;
}

WordCountReport word_count_report(const Nat& n, unsigned enumeration_cap) {
  detail::require(n >= 1, "word_count_report: n must be >= 1");
  WordCountReport report;
  report.n = n;
  report.total_words = int_pow(n, n);
  report.formula_count = repeated_letter_count_formula(n);
  if (n <= enumeration_cap) {
    report.enumerated_count = repeated_letter_count_enumerate(n, enumeration_cap);
  }
  return report;
}

}  // namespace factsum
