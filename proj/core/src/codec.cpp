#include "cgx/codec.hpp"

#include <cassert>

namespace cgx {

CoefficientSequence beta(std::size_t n, const Params& p) {
  if (n == 0) throw InvalidInput("beta: order starts at 1");
  if (n == 1) return CoefficientSequence{p.B};
  std::vector<Digit> digits(n, p.A_minus_1);
  digits.front() = p.B_minus_1;
  digits.back() = p.A;
  return CoefficientSequence(std::move(digits));
}

std::optional<std::size_t> beta_prefix_order(std::span<const Digit> digits, const Params& p) {
  if (digits.empty()) return std::nullopt;
  if (digits[0] == p.B) return 1;
  if (digits[0] != p.B_minus_1) return std::nullopt;
  std::size_t k = 2;
  while (k <= digits.size() && digits[k - 1] == p.A_minus_1) ++k;
  if (k <= digits.size() && digits[k - 1] == p.A) return k;
  return std::nullopt;
}

BigInt decode(std::span<const Digit> digits, const BaseSequence& h) {
  BigInt sum = 0;
  for (std::size_t k = 1; k <= digits.size(); ++k) {
    if (digits[k - 1] != 0) sum += digits[k - 1] * h.term(k);
  }
  return sum;
}

BigInt decode(const CoefficientSequence& eps, long long d) {
  return decode(eps.digits(), BaseSequence::for_interval(d));
}

CoefficientSequence encode(const BigInt& n, long long d) {
  const BaseSequence& h = BaseSequence::for_interval(d);
  if (n < 0) throw InvalidInput("encode: negative integers have no expansion");

  const BigInt a_cap = h.multiplier() - 1;
  const BigInt a_cap_minus_1 = a_cap - 1;
  const BigInt b_cap = h.term(2) - 1;

  std::vector<Digit> digits;
  const auto place = [&digits](std::size_t k, const BigInt& value) {
    if (digits.size() < k) digits.resize(k);
    digits[k - 1] = value;
  };
  const auto place_run = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = from; k <= to; ++k) place(k, a_cap_minus_1);
  };

  // Top-down: each pass fixes the digits at and above some position and
  // leaves a remainder below the weight of the next free position.
  BigInt rest = n;
  while (rest > b_cap) {
    const std::size_t top = h.floor_index(rest);
    const BigInt& weight = h.term(top);
    BigInt lead = rest / weight;
    assert(top >= 2 && lead <= a_cap);

    if (lead < a_cap) {
      rest -= lead * weight;
      place(top, lead);
      continue;
    }

    if (top == 2) {
      place(2, a_cap);
      place(1, rest - a_cap * weight);
      return CoefficientSequence(std::move(digits));
    }

    // Extend a run of A-1 below the leading A as far as it fits.
    BigInt covered = a_cap * weight;
    std::size_t k = top - 1;
    while (k >= 2) {
      BigInt next = covered + a_cap_minus_1 * h.term(k);
      if (next > rest) break;
      covered = std::move(next);
      --k;
    }
    place(top, a_cap);
    place_run(k + 1, top - 1);
    rest -= covered;

    if (k == 1) {
      // The run reaches position 2; what is left is below B.
      assert(rest < b_cap);
      place(1, rest);
      return CoefficientSequence(std::move(digits));
    }

    const BigInt& below = h.term(k);
    lead = rest / below;
    assert(lead <= a_cap - 2);
    rest -= lead * below;
    place(k, lead);
  }
  if (rest > 0) place(1, rest);
  return CoefficientSequence(std::move(digits));
}

}  // namespace cgx
