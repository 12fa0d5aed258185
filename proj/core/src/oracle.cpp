#include "cgx/oracle.hpp"

#include <algorithm>
#include <limits>

#include "cgx/codec.hpp"
#include "cgx/sequences.hpp"

namespace cgx {

namespace {

std::uint64_t checked_count(std::size_t max_order, const Params& p, std::uint64_t desk_limit) {
  if (max_order == 0) throw InvalidInput("enumeration needs max order >= 1");
  const BigInt& total = BaseSequence::for_interval(p.d).term(max_order + 1);
  if (total > desk_limit) {
    throw DeskScaleExceeded("enumerating order <= " + std::to_string(max_order) +
                            " for d = " + std::to_string(p.d) + " needs " + total.str() +
                            " strings, above the limit of " + std::to_string(desk_limit));
  }
  return total.convert_to<std::uint64_t>();
}

class Enumerator {
 public:
  Enumerator(std::size_t max_order, const Params& p,
             const std::function<void(std::span<const Digit>)>& visit)
      : a_(p.A.convert_to<std::uint64_t>()),
        b_(p.B.convert_to<std::uint64_t>()),
        buffer_(max_order, Digit(0)),
        visit_(visit) {}

  void run() { descend(buffer_.size(), false, false); }

 private:
  // pending: some position m >= k holds A with A-1 everywhere in k..m-1,
  //          so eps_1 = B would break clause 2 if the run reaches 2.
  // armed:   an A sits at or above k with no digit <= A-2 since.
  void descend(std::size_t k, bool pending, bool armed) {
    if (k == 1) {
      const std::uint64_t cap = pending ? b_ - 1 : b_;
      for (std::uint64_t x = 0; x <= cap; ++x) {
        buffer_[0] = x;
        visit_(buffer_);
      }
      buffer_[0] = 0;
      return;
    }
    for (std::uint64_t x = 0; x <= a_; ++x) {
      buffer_[k - 1] = x;
      if (x == a_) {
        if (!armed) descend(k - 1, true, true);
      } else if (x == a_ - 1) {
        descend(k - 1, pending, armed);
      } else {
        descend(k - 1, false, false);
      }
    }
    buffer_[k - 1] = 0;
  }

  std::uint64_t a_;
  std::uint64_t b_;
  std::vector<Digit> buffer_;
  const std::function<void(std::span<const Digit>)>& visit_;
};

void note(std::vector<std::uint64_t>& witnesses, std::uint64_t value) {
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(value);
}

}  // namespace

void for_each_valid(std::size_t max_order, const Params& p,
                    const std::function<void(std::span<const Digit>)>& visit,
                    std::uint64_t desk_limit) {
  checked_count(max_order, p, desk_limit);
  Enumerator(max_order, p, visit).run();
}

std::vector<CoefficientSequence> enumerate_valid(std::size_t max_order, const Params& p,
                                                 std::uint64_t desk_limit) {
  std::vector<CoefficientSequence> out;
  out.reserve(checked_count(max_order, p, desk_limit));
  for_each_valid(
      max_order, p, [&out](std::span<const Digit> digits) { out.emplace_back(digits); },
      desk_limit);
  return out;
}

BijectionReport verify_bijection(std::size_t max_order, long long d, std::uint64_t desk_limit) {
  const Params p = params(d);
  const BaseSequence& h = BaseSequence::for_interval(d);

  BijectionReport report;
  report.d = p.d;
  report.max_order = max_order;
  report.expected = checked_count(max_order, p, desk_limit);
  report.min_value = std::numeric_limits<std::uint64_t>::max();
  report.lex_order_matches_values = true;

  std::vector<bool> seen(report.expected, false);
  std::uint64_t position = 0;

  for_each_valid(
      max_order, p,
      [&](std::span<const Digit> digits) {
        const BigInt value = decode(digits, h);
        const std::uint64_t v = value > std::numeric_limits<std::uint64_t>::max()
                                    ? std::numeric_limits<std::uint64_t>::max()
                                    : value.convert_to<std::uint64_t>();
        if (v != position) report.lex_order_matches_values = false;
        report.min_value = std::min(report.min_value, v);
        report.max_value = std::max(report.max_value, v);

        if (v >= report.expected) {
          note(report.out_of_range, v);
        } else if (seen[v]) {
          note(report.duplicates, v);
        } else {
          seen[v] = true;
        }
        if (encode(value, d) != CoefficientSequence(digits)) note(report.encode_mismatches, v);
        ++position;
      },
      desk_limit);

  report.count = position;
  if (report.count == 0) report.min_value = 0;
  for (std::uint64_t v = 0; v < report.expected; ++v) {
    if (!seen[v]) note(report.missing, v);
  }
  return report;
}

}  // namespace cgx
