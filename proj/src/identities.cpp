#include "factsum/identities.hpp"

namespace factsum {

IdentityReport make_report(std::string name,
                           std::vector<std::pair<std::string, std::string>> parameters,
                           Rat lhs, Rat rhs) {
  IdentityReport report;
  report.name = std::move(name);
  report.parameters = std::move(parameters);
  report.holds = (lhs == rhs);
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

Nat factorial_sum(const Nat& n) {
  detail::require(n >= 1, "factorial_sum: n must be >= 1");
  return alt_binom_sum(n, [&](const Nat& i) { return int_pow(i, n); });
}

Nat factorial_sum_shift1(const Nat& n) {
  detail::require(n >= 1, "factorial_sum_shift1: n must be >= 1");
  return alt_binom_sum(n, [&](const Nat& i) { return int_pow(i + 1, n); });
}

Int telescoping_check(const Nat& n) {
  detail::require(n >= 1, "telescoping_check: n must be >= 1");
  return alt_binom_sum(
      n, [&](const Nat& i) { return int_pow(i + 1, n) - int_pow(i, n); });
}

Rat factorial_sum_shift(const Nat& n, const Rat& k) {
  detail::require(n >= 1, "factorial_sum_shift: n must be >= 1");
  return alt_binom_sum(
      n, [&](const Nat& i) { return rat_pow(Rat(i) + k, n); });
}

Rat harmonic_number(const Nat& n) {
  detail::require(n >= 1, "harmonic_number: n must be >= 1");
  Rat total;
  for (Nat i = 1; i <= n; ++i) total += Rat(Int(1), i);
  return total;
}

Rat harmonic_alternating(const Nat& n) {
  detail::require(n >= 1, "harmonic_alternating: n must be >= 1");
  Rat total;
  Nat binom = n;  // C(n, 1)
  bool negate = ((n - 1) & 1) != 0;  // parity of n - i at i = 1
  for (Nat i = 1; i <= n; ++i) {
    if (i > 1) binom = binom * (n - i + 1) / i;
    const Rat term(binom, i);
    if (negate) {
      total -= term;
    } else {
      total += term;
    }
    negate = !negate;
  }
  return total;
}

Rat reciprocal_shift_sum(const Nat& n, const Nat& k) {
  detail::require(n >= 1, "reciprocal_shift_sum: n must be >= 1");
  detail::require(k >= 1, "reciprocal_shift_sum: k must be >= 1 (k = 0 is the harmonic case)");
  return alt_binom_sum(n, [&](const Nat& i) { return Rat(Int(1), i + k); });
}

}  // namespace factsum
