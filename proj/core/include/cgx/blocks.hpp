#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgx/rule.hpp"

namespace cgx {

enum class BlockKind {
  kMax,    // beta(n)
  kUpper,  // (c) with c <= A-1, or (c, A-1, ..., A-1, A) with c <= A-2
  kLower,  // (c) with c <= B-1, or (c, A-1, ..., A-1, A) with c <= B-2
};

std::string_view to_string(BlockKind kind);

/// One segment of a block decomposition. Digits are positional (zeros kept),
/// so concatenating the blocks of a decomposition reproduces the string.
struct Block {
  BlockKind kind = BlockKind::kUpper;
  std::vector<Digit> digits;

  std::size_t order() const noexcept { return digits.size(); }
  bool operator==(const Block&) const = default;
};

struct TrailingSplit {
  Block block;
  std::size_t prefix_length = 0;  // digits below the block, untouched
};

/// Peel the top block off a nonempty digit string.
///
/// A top digit equal to A (above position 1) pulls in the maximal run of A-1
/// below it plus one lead digit; any other top digit is a block by itself.
/// The segment must be an upper proper block unless it reaches position 1,
/// where a maximal sequence or lower proper block is also accepted. When a
/// segment qualifies as both upper and lower it is reported as upper.
/// Throws NotDecomposable if the segment fits no kind.
TrailingSplit classify_trailing_block(std::span<const Digit> digits, const Params& p);

/// Decomposition into blocks, listed from position 1 upward. The zero
/// sequence decomposes as the single block (0).
std::vector<Block> decompose(const CoefficientSequence& eps, const Params& p);

/// True iff decompose succeeds. Agrees with validate for digit strings whose
/// entries are at most B.
bool is_member(const CoefficientSequence& eps, const Params& p);

/// Blocks written as "(5,5,6)v(0,5,6)v(0)", maximal ones tagged "[max]".
std::string format_blocks(std::span<const Block> blocks, std::string_view separator = "v");

/// Least valid digit string strictly above eps in lexicographic order.
/// If a prefix equals beta(n), that prefix is zeroed and digit n+1 goes up
/// by one; otherwise eps_1 goes up by one. decode(lub(eps)) = decode(eps)+1.
/// Throws InvalidInput if eps is not valid.
CoefficientSequence lub(const CoefficientSequence& eps, const Params& p);

/// Lazy stream lub^1(start), ..., lub^count(start).
class Successors {
 public:
  /// Throws InvalidInput if start is not valid.
  Successors(CoefficientSequence start, std::size_t count, Params p);

  /// Next element, or nullopt once count elements were produced.
  std::optional<CoefficientSequence> next();

  std::size_t remaining() const noexcept { return remaining_; }

 private:
  CoefficientSequence current_;
  std::size_t remaining_;
  Params params_;
};

namespace detail {

/// Block decomposition with an explicit cap for order-1 lower proper
/// blocks. The library uses B-1; tests use this to show that B-2 breaks
/// agreement with the rule.
std::vector<Block> decompose_with_lower_cap(std::span<const Digit> digits, const Params& p,
                                            const BigInt& order_one_lower_cap);

}  // namespace detail

}  // namespace cgx
