#pragma once

#include <optional>
#include <span>

#include "cgx/rule.hpp"
#include "cgx/sequences.hpp"

namespace cgx {

/// Maximal coefficient sequence of order n: (B) for n = 1, (B-1, A) for
/// n = 2, (B-1, A-1, ..., A-1, A) with n entries beyond that. It is the
/// largest valid string of order <= n and 1 + decode(beta(n)) = H_{n+1}.
CoefficientSequence beta(std::size_t n, const Params& p);

/// The unique n with (eps_1, ..., eps_n) = beta(n), if any. Found with one
/// upward scan, since beta(1) is the only candidate starting with B and
/// beta(n >= 2) is fixed by where the run of A-1 ends in an A.
std::optional<std::size_t> beta_prefix_order(std::span<const Digit> digits, const Params& p);

/// Sum of eps_k H_k. Any digit string is accepted.
BigInt decode(std::span<const Digit> digits, const BaseSequence& h);
BigInt decode(const CoefficientSequence& eps, long long d);

/// Greedy expansion of n >= 0: the unique valid digit string decoding to n.
CoefficientSequence encode(const BigInt& n, long long d);

}  // namespace cgx
