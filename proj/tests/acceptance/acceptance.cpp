// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cgx/cgx.hpp"

using namespace cgx;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;  // 0 = no limit
  std::function<Outcome()> check;
};

struct Config {
  long long d;
  std::size_t max_order;
  std::uint64_t expected;
};

// Desk-scale bijection configurations, shared by several criteria.
const std::vector<Config> kBijectionConfigs = {
    {2, 10, 17711},
    {4, 5, 17711},
    {6, 4, 121393},
    {8, 3, 121393},
};

Outcome alpha_constant() {
  const std::string got = alpha(8);
  return {got == "0.39441967", "alpha(8) = " + got};
}

Outcome parameter_table() {
  const Params p2 = params(2);
  const Params p4 = params(4);
  const bool ok = p2.A == 2 && p2.B == 2 && p4.A == 6 && p4.B == 7;
  return {ok, "d=2: A=" + p2.A.str() + " B=" + p2.B.str() + "; d=4: A=" + p4.A.str() +
                  " B=" + p4.B.str()};
}

Outcome worked_strings() {
  const Params p4 = params(4);
  const Params p2 = params(2);
  bool ok = true;
  for (const CoefficientSequence& eps :
       {CoefficientSequence{6, 5, 5, 5, 6, 0, 2, 5, 6}, CoefficientSequence{7, 4, 5, 5, 6, 5, 5},
        CoefficientSequence{6, 6, 3, 5, 5, 0, 4}}) {
    ok = ok && !validate(eps, p4);
  }
  const auto rejected = validate(CoefficientSequence{2, 1, 1, 1, 2}, p2);
  ok = ok && rejected && rejected->item == 2;
  ok = ok && !validate(CoefficientSequence{1, 1, 1, 1, 2}, p2);
  return {ok, "(2,1,1,1,2): " + (rejected ? to_string(*rejected) : std::string("accepted"))};
}

Outcome carry_identity() {
  std::size_t checked = 0;
  for (long long d = 2; d <= 12; d += 2) {
    const Params p = params(d);
    for (std::size_t n = 1; n <= 50; ++n) {
      if (1 + decode(beta(n, p), d) != base_term(d, n + 1)) {
        return {false, "fails at d=" + std::to_string(d) + " n=" + std::to_string(n)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " exact identities"};
}

Outcome bijectivity() {
  std::string detail;
  for (const Config& c : kBijectionConfigs) {
    const auto start = std::chrono::steady_clock::now();
    const BijectionReport r = verify_bijection(c.max_order, c.d);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail += "d=" + std::to_string(c.d) + ",L=" + std::to_string(c.max_order) + ":" +
              std::to_string(r.count) + " ";
    if (!r.ok() || r.count != c.expected || secs >= 30.0) {
      return {false, detail + "FAILED (" + std::to_string(secs) + " s)"};
    }
  }
  return {true, detail};
}

Outcome successor_chain() {
  for (long long d : {2, 4}) {
    Successors stream(CoefficientSequence{}, 1'000'000, params(d));
    std::uint64_t n = 0;
    while (auto next = stream.next()) {
      ++n;
      if (decode(*next, d) != n) {
        return {false, "d=" + std::to_string(d) + ": lub^" + std::to_string(n) + "(0) decodes to " +
                           decode(*next, d).str()};
      }
    }
  }
  std::size_t compared = 0;
  for (const Config& c : kBijectionConfigs) {
    const Params p = params(c.d);
    bool ok = true;
    for_each_valid(c.max_order, p, [&](std::span<const Digit> digits) {
      const CoefficientSequence eps(digits);
      ok = ok && lub(eps, p) == encode(decode(eps, c.d) + 1, c.d);
      ++compared;
    });
    if (!ok) return {false, "lub != encode(decode+1) for d=" + std::to_string(c.d)};
  }
  return {true, "n <= 10^6 for d=2,4; " + std::to_string(compared) + " lub/encode agreements"};
}

Outcome rule_equals_blocks() {
  std::size_t strings = 0;
  for (const auto& [d, order] : {std::pair{2LL, std::size_t{6}}, std::pair{4LL, std::size_t{4}}}) {
    const Params p = params(d);
    const auto cap = p.B.convert_to<std::uint64_t>();
    std::vector<Digit> digits(order, Digit(0));
    std::vector<std::uint64_t> odometer(order, 0);
    while (true) {
      for (std::size_t k = 0; k < order; ++k) digits[k] = odometer[k];
      const CoefficientSequence eps(digits);
      if (is_member(eps, p) == validate(eps, p).has_value()) {
        return {false, "disagree at d=" + std::to_string(d) + " on (" + to_string(eps) + ")"};
      }
      ++strings;
      std::size_t k = 0;
      while (k < order && odometer[k] == cap) odometer[k++] = 0;
      if (k == order) break;
      ++odometer[k];
    }
  }
  const Params p2 = params(2);
  const CoefficientSequence one{1};
  const bool boundary = is_member(one, p2) && !validate(one, p2);
  return {boundary, std::to_string(strings) + " strings agree; (1) at d=2 in both: " +
                        (boundary ? "yes" : "no")};
}

Outcome lub_example() {
  const Params p4 = params(4);
  const CoefficientSequence eps{6, 5, 6, 0, 5, 6};
  const CoefficientSequence next = lub(eps, p4);
  const bool ok = next == CoefficientSequence{0, 0, 0, 1, 5, 6} &&
                  decode(next, 4) - decode(eps, 4) == 1;
  return {ok, "lub(" + to_string(eps) + ") = (" + to_string(next) + "), " +
                  decode(eps, 4).str() + " -> " + decode(next, 4).str()};
}

Outcome identity_suite() {
  for (std::uint64_t d = 1; d <= 60; ++d) {
    if (!check_norm_identity(d)) return {false, "norm identity fails at d=" + std::to_string(d)};
  }
  for (long long d = 2; d <= 20; d += 2) {
    for (std::size_t k = 1; k <= 40; ++k) {
      if (base_term(d, k) != fibonacci(2 + d * (k - 1))) {
        return {false, "H_k mismatch at d=" + std::to_string(d) + " k=" + std::to_string(k)};
      }
    }
  }
  return {true, "60 norm identities, 400 base terms"};
}

Outcome lex_value_isomorphism() {
  std::string detail;
  for (const Config& c : kBijectionConfigs) {
    const auto all = enumerate_valid(c.max_order, params(c.d));
    if (all.size() != c.expected) return {false, "wrong count for d=" + std::to_string(c.d)};
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i > 0 && compare_lex(all[i - 1], all[i]) != std::strong_ordering::less) {
        return {false, "not lex-sorted at d=" + std::to_string(c.d)};
      }
      if (decode(all[i], c.d) != i) {
        return {false, "value gap at d=" + std::to_string(c.d) + " index " + std::to_string(i)};
      }
    }
    detail += "d=" + std::to_string(c.d) + ":0.." + std::to_string(all.size() - 1) + " ";
  }
  return {true, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "constant alpha to 8 digits", 1.0, alpha_constant},
      {"C2", "parameter table", 0, parameter_table},
      {"C3", "worked digit strings", 0, worked_strings},
      {"C4", "carry identity, d in {2..12}, n in [1,50]", 0, carry_identity},
      {"C5", "bijectivity at desk scale", 4 * 30.0, bijectivity},
      {"C6", "successor chain", 60.0, successor_chain},
      {"C7", "rule membership equals block membership", 0, rule_equals_blocks},
      {"C8", "lub worked example", 0, lub_example},
      {"C9", "identity suite", 0, identity_suite},
      {"C10", "lexicographic order is value order", 0, lex_value_isomorphism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      outcome.pass = false;
      outcome.detail += " [over time limit]";
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %-4s %-42s %8.3f s  %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title,
                secs, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
