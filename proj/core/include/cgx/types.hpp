#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgx {

using BigInt = boost::multiprecision::cpp_int;

// Digits are unbounded too: the caps A and B grow with the interval.
using Digit = BigInt;

// Interval d is odd, zero or otherwise outside the supported family.
class UnsupportedInterval : public std::invalid_argument {
 public:
  explicit UnsupportedInterval(long long d);
  long long interval() const noexcept { return d_; }

 private:
  long long d_;
};

// Caller broke a precondition (malformed text, invalid digit string, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Digit string cannot be split into blocks; position is the 1-based index
// of the top digit of the segment that fits no block kind.
class NotDecomposable : public std::domain_error {
 public:
  NotDecomposable(const std::string& what, std::size_t position)
      : std::domain_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Brute-force enumeration was asked for more values than the configured limit.
class DeskScaleExceeded : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Throws UnsupportedInterval unless d is even and at least 2.
void require_even_interval(long long d);

}  // namespace cgx
