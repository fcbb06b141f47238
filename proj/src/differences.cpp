#include "factsum/differences.hpp"

#include <utility>

namespace factsum {

struct Sequence::State {
  std::string description;
  Generator generator;
  mutable std::mutex mutex;
  mutable std::map<Nat, Rat> memo;
};

Sequence::Sequence(std::string description, Generator generator)
    : state_(std::make_shared<State>()) {
  detail::require(static_cast<bool>(generator), "Sequence: null generator");
  state_->description = std::move(description);
  state_->generator = std::move(generator);
}

Rat Sequence::operator()(const Nat& k) const {
  detail::require(k >= 0, "Sequence: index must be nonnegative");
  State& st = *state_;
  {
    std::lock_guard<std::mutex> lock(st.mutex);
    auto it = st.memo.find(k);
    if (it != st.memo.end()) return it->second;
  }
  // Evaluate outside the lock; the generator is pure, so a racing duplicate
  // evaluation produces the same value.
  Rat value = st.generator(k);
  std::lock_guard<std::mutex> lock(st.mutex);
  return st.memo.emplace(k, std::move(value)).first->second;
}

const std::string& Sequence::description() const { return state_->description; }

PolySpec::PolySpec() : coefficients_{Rat(0)} {}

PolySpec::PolySpec(std::vector<Rat> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
  if (coefficients_.empty()) coefficients_.push_back(Rat(0));
}

bool PolySpec::is_zero() const {
  return coefficients_.size() == 1 && coefficients_[0] == 0;
}

Rat PolySpec::operator()(const Rat& x) const {
  Rat result;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result = result * x + *it;
  }
  return result;
}

std::string PolySpec::label() const {
  std::string out = "poly(";
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (j > 0) out += ", ";
    out += to_string(coefficients_[j]);
  }
  return out + ")";
}

Sequence first_difference(const Sequence& s) {
  return Sequence("diff(" + s.description() + ")",
                  [s](const Nat& k) { return s(k + 1) - s(k); });
}

Sequence nth_difference(const Sequence& s, const Nat& n) {
  detail::require(n >= 0, "nth_difference: order must be nonnegative");
  Sequence result = s;
  for (Nat i = 0; i < n; ++i) result = first_difference(result);
  return result;
}

Rat nth_difference_direct(const Sequence& s, const Nat& n, const Nat& k) {
  detail::require(n >= 0, "nth_difference_direct: order must be nonnegative");
  detail::require(k >= 0, "nth_difference_direct: index must be nonnegative");
  return alt_binom_sum(n, [&](const Nat& i) { return s(k + i); });
}

Rat power_sequence_difference(const Nat& n, const Nat& k) {
  detail::require(n >= 1, "power_sequence_difference: n must be >= 1");
  detail::require(k >= 0, "power_sequence_difference: k must be nonnegative");
  Int sum = alt_binom_sum(n, [&](const Nat& i) { return int_pow(i + k, n); });
  return Rat(sum);
}

Sequence polynomial_sequence(const PolySpec& p) {
  return Sequence(p.label(), [p](const Nat& k) { return p(Rat(k)); });
}

bool is_constant_prefix(const Sequence& s, const Nat& count) {
  detail::require(count >= 1, "is_constant_prefix: count must be >= 1");
  const Rat first = s(0);
  for (Nat k = 1; k < count; ++k) {
    if (s(k) != first) return false;
  }
  return true;
}

}  // namespace factsum
