#include "factsum/two_squares.hpp"

#include <array>

namespace factsum {
namespace {

constexpr std::array<unsigned, 12> kWitnessBases = {2,  3,  5,  7,  11, 13,
                                                    17, 19, 23, 29, 31, 37};

void require_prime_one_mod_four(const Nat& p, const char* who) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": " + p.str() + " is not prime");
  }
  if (p % 4 != 1) {
    throw std::invalid_argument(std::string(who) + ": " + p.str() + " = " +
                                Nat(p % 4).str() + " (mod 4); need a prime = 1 (mod 4)");
  }
  // p = 1 (mod 4) and prime forces p >= 5
}

}  // namespace

bool is_prime(const Nat& m) {
  if (m < 2) return false;
  for (unsigned q : kWitnessBases) {
    if (m == q) return true;
    if (m % q == 0) return false;
  }
  // Miller-Rabin on m - 1 = d * 2^s
  Nat d = m - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kWitnessBases) {
    Nat x = mod_pow(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (unsigned round = 1; round < s; ++round) {
      x = x * x % m;
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

WitnessPair witness_pair(const Nat& p) {
  require_prime_one_mod_four(p, "witness_pair");
  const Nat n = (p - 1) / 4;
  const Nat two_n = 2 * n;
  for (Nat h = 1; h < p; ++h) {
    const Nat h_pow = mod_pow(h, two_n, p);
    for (Nat k = h + 1; k < p; ++k) {
      const Nat k_pow = mod_pow(k, two_n, p);
      if (h_pow == k_pow) continue;  // p divides h^{2n} - k^{2n}
      if ((h_pow + k_pow) % p != 0) {
        throw internal_error("witness_pair: h^{2n} + k^{2n} not divisible by p");
      }
      return {h, k, n};
    }
  }
  // the 2n-th difference of (k^{2n}) is (2n)!, which p cannot divide, so the
  // residues k^{2n} cannot all agree and the scan above always returns
  throw internal_error("witness_pair: no pair found");
}

Nat sqrt_minus_one(const Nat& p) {
  require_prime_one_mod_four(p, "sqrt_minus_one");
  const WitnessPair w = witness_pair(p);
  Nat x = mod_pow(w.h * mod_inverse(w.k, p) % p, w.n, p);
  if (p - x < x) x = p - x;
  if (x * x % p != p - 1) {
    throw internal_error("sqrt_minus_one: x^2 != -1 (mod p)");
  }
  return x;
}

TwoSquares decompose_prime(const Nat& p) {
  require_prime_one_mod_four(p, "decompose_prime");
  const Nat x = sqrt_minus_one(p);
  Nat u = p, v = x;
  while (v * v > p) {
    const Nat r = u % v;
    u = v;
    v = r;
  }
  Nat a = v, b = u % v;
  if (a > b) std::swap(a, b);
  if (a * a + b * b != p || a < 1) {
    throw internal_error("decompose_prime: remainder cascade failed for " + p.str());
  }
  return {p, a, b};
}

TwoSquares decompose_brute(const Nat& p) {
  require_prime_one_mod_four(p, "decompose_brute");
  if (p > 100000000) {
    throw std::length_error("decompose_brute: p exceeds the scan bound 10^8");
  }
  for (Nat a = 1; 2 * a * a <= p; ++a) {
    const Nat rest = p - a * a;
    const Nat b = sqrt(rest);
    if (b * b == rest) return {p, a, b};
  }
  throw internal_error("decompose_brute: no representation found for " + p.str());
}

}  // namespace factsum
