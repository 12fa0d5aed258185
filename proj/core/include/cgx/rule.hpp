#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgx/types.hpp"

namespace cgx {

/// Digit caps for an even interval d: A = K_d - 1 bounds positions k >= 2,
/// B = F_{2+d} - 1 bounds position 1. The shifted values are cached because
/// the rule and the successor operator compare against them constantly.
struct Params {
  unsigned d = 0;
  BigInt A;
  BigInt B;
  BigInt A_minus_1;
  BigInt A_minus_2;
  BigInt B_minus_1;
  BigInt B_minus_2;
};

/// Throws UnsupportedInterval for odd or non-positive d.
Params params(long long d);

/// Finite little-endian digit string (eps_1 first), kept without trailing
/// zeros. The zero integer is the empty string.
class CoefficientSequence {
 public:
  CoefficientSequence() = default;
  CoefficientSequence(std::initializer_list<Digit> digits);
  explicit CoefficientSequence(std::vector<Digit> digits);
  explicit CoefficientSequence(std::span<const Digit> digits);

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_.empty(); }

  /// 1-based access; positions past the end read as zero.
  const Digit& digit(std::size_t k) const;

  bool operator==(const CoefficientSequence&) const = default;

 private:
  void trim();

  std::vector<Digit> digits_;
};

/// Largest index with a nonzero digit; 1 for the zero sequence.
std::size_t ord(const CoefficientSequence& eps);

/// Which clause of the expansion rule failed, and the 1-based digit that
/// witnesses it.
///   item 1: a digit exceeds its cap (B at position 1, A elsewhere);
///   item 2: eps_1 = B below a run A-1,...,A-1 capped by A starting at 2;
///   item 3: two A's at positions >= 2 with no digit <= A-2 between them.
struct Violation {
  int item = 0;
  std::size_t index = 0;

  bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

/// nullopt when the digits satisfy the rule. Digits are scanned from
/// position 1 upward and the first position that breaks any clause is
/// reported; at a single position clause 1 is checked before 2 before 3.
std::optional<Violation> validate(std::span<const Digit> digits, const Params& p);
std::optional<Violation> validate(const CoefficientSequence& eps, const Params& p);

/// Order in which the highest differing position dominates.
std::strong_ordering compare_lex(std::span<const Digit> lhs, std::span<const Digit> rhs);
std::strong_ordering compare_lex(const CoefficientSequence& lhs,
                                 const CoefficientSequence& rhs);

inline std::strong_ordering operator<=>(const CoefficientSequence& lhs,
                                        const CoefficientSequence& rhs) {
  return compare_lex(lhs, rhs);
}

/// Comma-separated decimal digits, eps_1 first. "" is zero.
std::string to_string(const CoefficientSequence& eps);
std::string to_string(std::span<const Digit> digits);

/// Inverse of to_string. Whitespace around digits is ignored; trailing zeros
/// are dropped. Throws InvalidInput on anything else.
CoefficientSequence parse_digits(std::string_view text);

}  // namespace cgx
