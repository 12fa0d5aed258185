#include "cgx/rule.hpp"

#include <algorithm>
#include <cctype>

#include "cgx/sequences.hpp"

namespace cgx {

Params params(long long d) {
  require_even_interval(d);
  Params p;
  p.d = static_cast<unsigned>(d);
  p.A = lucas_k(p.d) - 1;
  p.B = fibonacci(2 + p.d) - 1;
  p.A_minus_1 = p.A - 1;
  p.A_minus_2 = p.A - 2;
  p.B_minus_1 = p.B - 1;
  p.B_minus_2 = p.B - 2;
  return p;
}

CoefficientSequence::CoefficientSequence(std::initializer_list<Digit> digits)
    : digits_(digits) {
  trim();
}

CoefficientSequence::CoefficientSequence(std::vector<Digit> digits)
    : digits_(std::move(digits)) {
  trim();
}

CoefficientSequence::CoefficientSequence(std::span<const Digit> digits)
    : digits_(digits.begin(), digits.end()) {
  trim();
}

void CoefficientSequence::trim() {
  for (const Digit& x : digits_) {
    if (x < 0) throw InvalidInput("coefficient digits must be non-negative");
  }
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

const Digit& CoefficientSequence::digit(std::size_t k) const {
  static const Digit kZero = 0;
  if (k == 0) throw InvalidInput("digit positions start at 1");
  return k <= digits_.size() ? digits_[k - 1] : kZero;
}

std::size_t ord(const CoefficientSequence& eps) {
  return eps.is_zero() ? 1 : eps.size();
}

std::string to_string(const Violation& v) {
  return "item " + std::to_string(v.item) + " at index " + std::to_string(v.index);
}

std::optional<Violation> validate(std::span<const Digit> digits, const Params& p) {
  bool first_is_b = false;
  // Positions 2..k-1 are all A-1.
  bool run_from_two = true;
  // An A was seen at a position >= 2 with no digit <= A-2 after it.
  bool armed = false;

  for (std::size_t k = 1; k <= digits.size(); ++k) {
    const Digit& x = digits[k - 1];
    if (k == 1) {
      if (x > p.B) return Violation{1, k};
      first_is_b = x == p.B;
      continue;
    }
    if (x > p.A) return Violation{1, k};
    if (x == p.A) {
      if (run_from_two && first_is_b) return Violation{2, k};
      if (armed) return Violation{3, k};
      armed = true;
      run_from_two = false;
    } else if (x != p.A_minus_1) {
      armed = false;
      run_from_two = false;
    }
  }
  return std::nullopt;
}

std::optional<Violation> validate(const CoefficientSequence& eps, const Params& p) {
  return validate(eps.digits(), p);
}

namespace {

std::size_t significant_length(std::span<const Digit> digits) {
  std::size_t n = digits.size();
  while (n > 0 && digits[n - 1] == 0) --n;
  return n;
}

}  // namespace

std::strong_ordering compare_lex(std::span<const Digit> lhs, std::span<const Digit> rhs) {
  const std::size_t ln = significant_length(lhs);
  const std::size_t rn = significant_length(rhs);
  if (ln != rn) return ln <=> rn;
  for (std::size_t k = ln; k > 0; --k) {
    const int c = lhs[k - 1].compare(rhs[k - 1]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_lex(const CoefficientSequence& lhs,
                                 const CoefficientSequence& rhs) {
  return compare_lex(lhs.digits(), rhs.digits());
}

std::string to_string(std::span<const Digit> digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out += ',';
    out += digits[i].str();
  }
  return out;
}

std::string to_string(const CoefficientSequence& eps) { return to_string(eps.digits()); }

CoefficientSequence parse_digits(std::string_view text) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  const auto strip = [&](std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
  };

  text = strip(text);
  std::vector<Digit> digits;
  if (text.empty()) return CoefficientSequence{};

  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        strip(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (token.empty()) {
      throw InvalidInput("empty digit in \"" + std::string(text) + "\"");
    }
    if (!std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidInput("not a non-negative decimal digit: \"" + std::string(token) + "\"");
    }
    digits.emplace_back(std::string(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return CoefficientSequence(std::move(digits));
}

}  // namespace cgx
