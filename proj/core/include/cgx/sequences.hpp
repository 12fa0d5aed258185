#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

#include "cgx/types.hpp"

namespace cgx {

/// Fibonacci number F_k with F_1 = F_2 = 1. Throws InvalidInput for k = 0.
BigInt fibonacci(std::uint64_t k);

/// Companion sequence K_k with K_1 = 1, K_2 = 3 and the Fibonacci recurrence.
/// Throws InvalidInput for k = 0.
BigInt lucas_k(std::uint64_t k);

/// Positional weights H_k = F_{2+d(k-1)} for an even interval d.
///
/// Terms are produced by the order-2 recurrence H_{k+2} = K_d H_{k+1} - H_k
/// from the seeds H_1 = 1, H_2 = F_{2+d}, and cached in an append-only table.
/// The table grows on demand under a mutex and publishes each extended prefix
/// with a release store, so readers of already-published terms never lock.
/// References returned by term() stay valid for the lifetime of the object.
class BaseSequence {
 public:
  explicit BaseSequence(long long d);

  BaseSequence(const BaseSequence&) = delete;
  BaseSequence& operator=(const BaseSequence&) = delete;

  /// Process-wide shared table for interval d.
  static const BaseSequence& for_interval(long long d);

  unsigned interval() const noexcept { return d_; }

  /// K_d, the recurrence multiplier.
  const BigInt& multiplier() const noexcept { return multiplier_; }

  /// H_k, 1-based. Throws InvalidInput for k = 0.
  const BigInt& term(std::size_t k) const;

  /// Largest k with H_k <= n. Requires n >= 1.
  std::size_t floor_index(const BigInt& n) const;

  /// Number of terms currently cached.
  std::size_t published() const noexcept {
    return published_.load(std::memory_order_acquire);
  }

 private:
  static constexpr std::size_t kFirstChunk = 64;
  static constexpr std::size_t kMaxChunks = 40;

  const BigInt& slot(std::size_t index) const;
  void grow_to(std::size_t count) const;

  unsigned d_;
  BigInt multiplier_;
  // Chunk c holds kFirstChunk * 2^c terms; pointers never move once set.
  mutable std::array<std::unique_ptr<BigInt[]>, kMaxChunks> chunks_;
  mutable std::atomic<std::size_t> published_{0};
  mutable std::mutex grow_mutex_;
};

/// H_k for interval d via the shared table.
BigInt base_term(long long d, std::size_t k);

/// True iff K_d^2 - 5 F_d^2 = 4 (-1)^d. Holds for every d >= 1.
bool check_norm_identity(std::uint64_t d);

/// The constant (1 + sum_{k>=1} 1/F_{2k})^{-1} rounded half-up to the given
/// number of decimal places, formatted as "0.xxxx".
///
/// The partial sum is exact; summation stops once the next term drops below
/// 10^-(decimal_digits + 2). The dropped tail is at most phi^2/(phi^2 - 1)
/// times that first omitted term.
std::string alpha(unsigned decimal_digits);

}  // namespace cgx
