#include "cgx/blocks.hpp"

#include <algorithm>

#include "cgx/codec.hpp"

namespace cgx {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::kMax:
      return "max";
    case BlockKind::kUpper:
      return "upper";
    case BlockKind::kLower:
      return "lower";
  }
  return "?";
}

namespace {

[[noreturn]] void fail_at(std::size_t position) {
  throw NotDecomposable("not decomposable: segment ending at index " +
                            std::to_string(position) + " fits no block kind",
                        position);
}

TrailingSplit split_top(std::span<const Digit> digits, const Params& p,
                        const BigInt& order_one_lower_cap) {
  if (digits.empty()) throw InvalidInput("classify_trailing_block: empty digit string");
  const std::size_t top = digits.size();
  const Digit& top_digit = digits[top - 1];

  if (top >= 2 && top_digit == p.A) {
    std::size_t lead = top - 1;
    while (lead >= 2 && digits[lead - 1] == p.A_minus_1) --lead;
    const Digit& c = digits[lead - 1];

    BlockKind kind;
    if (lead >= 2) {
      if (c > p.A_minus_2) fail_at(top);
      kind = BlockKind::kUpper;
    } else if (c == p.B_minus_1) {
      kind = BlockKind::kMax;
    } else if (c <= p.A_minus_2) {
      kind = BlockKind::kUpper;
    } else if (c <= p.B_minus_2) {
      kind = BlockKind::kLower;
    } else {
      fail_at(top);
    }
    return {Block{kind, {digits.begin() + static_cast<std::ptrdiff_t>(lead - 1), digits.end()}},
            lead - 1};
  }

  BlockKind kind;
  if (top >= 2) {
    if (top_digit > p.A_minus_1) fail_at(top);
    kind = BlockKind::kUpper;
  } else if (top_digit == p.B) {
    kind = BlockKind::kMax;
  } else if (top_digit <= p.A_minus_1) {
    kind = BlockKind::kUpper;
  } else if (top_digit <= order_one_lower_cap) {
    kind = BlockKind::kLower;
  } else {
    fail_at(top);
  }
  return {Block{kind, {top_digit}}, top - 1};
}

// Caller guarantees eps is valid.
CoefficientSequence lub_unchecked(const CoefficientSequence& eps, const Params& p) {
  std::vector<Digit> digits(eps.digits().begin(), eps.digits().end());
  std::size_t bump = 1;
  if (const auto n = beta_prefix_order(digits, p)) {
    std::fill_n(digits.begin(), *n, Digit(0));
    bump = *n + 1;
  }
  if (digits.size() < bump) digits.resize(bump);
  digits[bump - 1] += 1;
  return CoefficientSequence(std::move(digits));
}

}  // namespace

namespace detail {

std::vector<Block> decompose_with_lower_cap(std::span<const Digit> digits, const Params& p,
                                            const BigInt& order_one_lower_cap) {
  std::vector<Block> blocks;
  while (!digits.empty()) {
    TrailingSplit split = split_top(digits, p, order_one_lower_cap);
    blocks.push_back(std::move(split.block));
    digits = digits.first(split.prefix_length);
  }
  std::reverse(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace detail

TrailingSplit classify_trailing_block(std::span<const Digit> digits, const Params& p) {
  return split_top(digits, p, p.B_minus_1);
}

std::vector<Block> decompose(const CoefficientSequence& eps, const Params& p) {
  if (eps.is_zero()) return {Block{BlockKind::kUpper, {Digit(0)}}};
  return detail::decompose_with_lower_cap(eps.digits(), p, p.B_minus_1);
}

bool is_member(const CoefficientSequence& eps, const Params& p) {
  try {
    decompose(eps, p);
    return true;
  } catch (const NotDecomposable&) {
    return false;
  }
}

std::string format_blocks(std::span<const Block> blocks, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i != 0) out += separator;
    out += '(';
    out += to_string(std::span<const Digit>(blocks[i].digits));
    out += ')';
    if (blocks[i].kind == BlockKind::kMax) out += "[max]";
  }
  return out;
}

CoefficientSequence lub(const CoefficientSequence& eps, const Params& p) {
  if (const auto v = validate(eps, p)) {
    throw InvalidInput("lub: \"" + to_string(eps) + "\" violates the rule (" + to_string(*v) + ")");
  }
  return lub_unchecked(eps, p);
}

Successors::Successors(CoefficientSequence start, std::size_t count, Params p)
    : current_(std::move(start)), remaining_(count), params_(std::move(p)) {
  if (const auto v = validate(current_, params_)) {
    throw InvalidInput("successors: \"" + to_string(current_) + "\" violates the rule (" +
                       to_string(*v) + ")");
  }
}

std::optional<CoefficientSequence> Successors::next() {
  if (remaining_ == 0) return std::nullopt;
  current_ = lub_unchecked(current_, params_);
  --remaining_;
  return current_;
}

}  // namespace cgx
