#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cgx/rule.hpp"

namespace cgx {

// Enumerations stop at H_{L+1} values unless the caller raises this.
inline constexpr std::uint64_t kDefaultDeskLimit = 10'000'000;

// Witness lists in a report are truncated to this many entries.
inline constexpr std::size_t kMaxWitnesses = 32;

struct BijectionReport {
  unsigned d = 0;
  std::size_t max_order = 0;
  std::uint64_t count = 0;     // valid strings of order <= max_order
  std::uint64_t expected = 0;  // H_{max_order + 1}
  std::uint64_t min_value = 0;
  std::uint64_t max_value = 0;
  std::vector<std::uint64_t> duplicates;
  std::vector<std::uint64_t> missing;
  std::vector<std::uint64_t> out_of_range;
  // Values v whose greedy encoding differs from the enumerated string.
  std::vector<std::uint64_t> encode_mismatches;
  // The i-th string in lexicographic order decodes to i.
  bool lex_order_matches_values = false;

  bool ok() const noexcept {
    return count == expected && duplicates.empty() && missing.empty() &&
           out_of_range.empty() && encode_mismatches.empty() && lex_order_matches_values;
  }
};

/// Visit every valid digit string of order <= max_order in increasing
/// lexicographic order. The span always has max_order entries (high zeros
/// included) and is only valid during the call.
///
/// Works top-down with the rule state carried incrementally, independent
/// of validate(). Throws DeskScaleExceeded if H_{max_order+1} > desk_limit.
void for_each_valid(std::size_t max_order, const Params& p,
                    const std::function<void(std::span<const Digit>)>& visit,
                    std::uint64_t desk_limit = kDefaultDeskLimit);

std::vector<CoefficientSequence> enumerate_valid(std::size_t max_order, const Params& p,
                                                 std::uint64_t desk_limit = kDefaultDeskLimit);

/// Exhaustive check that decoding maps the valid strings of order <= L onto
/// 0 .. H_{L+1} - 1 one-to-one, in lexicographic order, and that encode
/// inverts it.
BijectionReport verify_bijection(std::size_t max_order, long long d,
                                 std::uint64_t desk_limit = kDefaultDeskLimit);

}  // namespace cgx
