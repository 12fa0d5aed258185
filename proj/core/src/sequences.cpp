#include "cgx/sequences.hpp"

#include <bit>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgx {

UnsupportedInterval::UnsupportedInterval(long long d)
    : std::invalid_argument("interval must be even and at least 2, got " +
                            std::to_string(d)),
      d_(d) {}

void require_even_interval(long long d) {
  if (d < 2 || d % 2 != 0) throw UnsupportedInterval(d);
}

BigInt fibonacci(std::uint64_t k) {
  if (k == 0) throw InvalidInput("fibonacci: index starts at 1");
  BigInt prev = 1;
  BigInt cur = 1;
  for (std::uint64_t i = 2; i < k; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt lucas_k(std::uint64_t k) {
  if (k == 0) throw InvalidInput("lucas_k: index starts at 1");
  if (k == 1) return 1;
  BigInt prev = 1;
  BigInt cur = 3;
  for (std::uint64_t i = 2; i < k; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BaseSequence::BaseSequence(long long d) {
  require_even_interval(d);
  d_ = static_cast<unsigned>(d);
  multiplier_ = lucas_k(d_);
  grow_to(2);
}

const BaseSequence& BaseSequence::for_interval(long long d) {
  require_even_interval(d);
  static std::mutex registry_mutex;
  static std::map<long long, std::unique_ptr<BaseSequence>> registry;
  std::lock_guard lock(registry_mutex);
  auto& entry = registry[d];
  if (!entry) entry = std::make_unique<BaseSequence>(d);
  return *entry;
}

const BigInt& BaseSequence::slot(std::size_t index) const {
  const std::size_t q = index / kFirstChunk + 1;
  const std::size_t chunk = std::bit_width(q) - 1;
  const std::size_t base = kFirstChunk * ((std::size_t{1} << chunk) - 1);
  return chunks_[chunk][index - base];
}

void BaseSequence::grow_to(std::size_t count) const {
  std::lock_guard lock(grow_mutex_);
  std::size_t n = published_.load(std::memory_order_relaxed);
  if (n >= count) return;
  for (; n < count; ++n) {
    const std::size_t q = n / kFirstChunk + 1;
    const std::size_t chunk = std::bit_width(q) - 1;
    if (chunk >= kMaxChunks) throw std::length_error("BaseSequence: table full");
    if (!chunks_[chunk]) {
      chunks_[chunk] = std::make_unique<BigInt[]>(kFirstChunk << chunk);
    }
    const std::size_t base = kFirstChunk * ((std::size_t{1} << chunk) - 1);
    BigInt& out = chunks_[chunk][n - base];
    if (n == 0) {
      out = 1;
    } else if (n == 1) {
      out = fibonacci(2 + d_);
    } else {
      out = multiplier_ * slot(n - 1) - slot(n - 2);
    }
  }
  published_.store(n, std::memory_order_release);
}

const BigInt& BaseSequence::term(std::size_t k) const {
  if (k == 0) throw InvalidInput("BaseSequence: index starts at 1");
  if (k > published_.load(std::memory_order_acquire)) grow_to(k);
  return slot(k - 1);
}

std::size_t BaseSequence::floor_index(const BigInt& n) const {
  if (n < 1) throw InvalidInput("floor_index: argument must be positive");
  std::size_t count = published();
  while (slot(count - 1) <= n) {
    grow_to(count * 2);
    count = published();
  }
  // Invariant: H_lo <= n < H_hi.
  std::size_t lo = 1;
  std::size_t hi = count;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (slot(mid - 1) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

BigInt base_term(long long d, std::size_t k) {
  return BaseSequence::for_interval(d).term(k);
}

bool check_norm_identity(std::uint64_t d) {
  if (d == 0) throw InvalidInput("check_norm_identity: d starts at 1");
  const BigInt k = lucas_k(d);
  const BigInt f = fibonacci(d);
  const BigInt lhs = k * k - 5 * f * f;
  return lhs == (d % 2 == 0 ? 4 : -4);
}

std::string alpha(unsigned decimal_digits) {
  using boost::multiprecision::cpp_rational;
  if (decimal_digits == 0) throw InvalidInput("alpha: need at least one digit");

  const BigInt cutoff = boost::multiprecision::pow(BigInt(10), decimal_digits + 2);
  cpp_rational sum = 1;
  // Walk (F_{2k-1}, F_{2k}) two steps at a time.
  BigInt odd = 1;
  BigInt even = 1;
  while (even <= cutoff) {
    sum += cpp_rational(BigInt(1), even);
    odd += even;
    even += odd;
  }

  const cpp_rational value = 1 / sum;
  const BigInt scale = boost::multiprecision::pow(BigInt(10), decimal_digits);
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const BigInt rounded = (2 * num * scale + den) / (2 * den);

  const BigInt whole = rounded / scale;
  std::string frac = BigInt(rounded % scale).str();
  frac.insert(0, decimal_digits - frac.size(), '0');
  return whole.str() + "." + frac;
}

}  // namespace cgx
