#include <algorithm>

#include <doctest.h>

#include "cgx/codec.hpp"
#include "cgx/oracle.hpp"
#include "support/oracles.hpp"

using namespace cgx;
using testing::SmallDigits;

TEST_CASE("enumerate_valid") {
  CHECK(enumerate_valid(1, params(2)) == std::vector<CoefficientSequence>{{}, {1}, {2}});

  const auto two = enumerate_valid(2, params(2));
  CHECK(two.size() == 8);
  for (std::size_t i = 0; i < two.size(); ++i) CHECK(decode(two[i], 2) == i);

  CHECK(enumerate_valid(2, params(4)).size() == 55);
  CHECK_THROWS_AS(enumerate_valid(0, params(2)), InvalidInput);
}

TEST_CASE("enumeration equals the filtered brute force, sorted") {
  for (unsigned d : {2u, 4u, 6u}) {
    const Params p = params(d);
    const testing::SmallParams sp = testing::small_params(d);
    const std::size_t length = d == 2 ? 6 : d == 4 ? 3 : 2;

    std::vector<CoefficientSequence> brute;
    testing::for_each_string(length, sp.B, [&](const SmallDigits& e) {
      if (testing::literal_rule(e, sp)) brute.push_back(testing::to_sequence(e));
    });
    std::sort(brute.begin(), brute.end());

    const auto ours = enumerate_valid(length, p);
    CHECK(std::is_sorted(ours.begin(), ours.end()));
    CHECK(std::adjacent_find(ours.begin(), ours.end()) == ours.end());
    CHECK(ours == brute);
  }
}

TEST_CASE("for_each_valid passes fixed-width buffers") {
  std::size_t calls = 0;
  for_each_valid(3, params(2), [&](std::span<const Digit> digits) {
    CHECK(digits.size() == 3);
    ++calls;
  });
  CHECK(calls == 21);
}

TEST_CASE("verify_bijection") {
  const BijectionReport a = verify_bijection(10, 2);
  CHECK(a.ok());
  CHECK(a.count == 17711);
  CHECK(a.expected == 17711);
  CHECK(a.min_value == 0);
  CHECK(a.max_value == 17710);

  const BijectionReport b = verify_bijection(5, 4);
  CHECK(b.ok());
  CHECK(b.count == 17711);

  const BijectionReport c = verify_bijection(1, 4);
  CHECK(c.ok());
  CHECK(c.count == 8);
  CHECK(c.max_value == 7);
  CHECK(c.d == 4);
  CHECK(c.max_order == 1);
}

TEST_CASE("desk-scale guard") {
  // H_21 = F_42 for d = 2 is far above the default limit.
  CHECK_THROWS_AS(enumerate_valid(20, params(2)), DeskScaleExceeded);
  CHECK_THROWS_AS(verify_bijection(5, 2, 100), DeskScaleExceeded);  // H_6 = 144
  CHECK(verify_bijection(5, 2, 144).ok());
  CHECK_THROWS_AS(verify_bijection(3, 3), UnsupportedInterval);
}

TEST_CASE("report ok() needs every check to pass") {
  BijectionReport r;
  r.count = r.expected = 5;
  r.lex_order_matches_values = true;
  CHECK(r.ok());
  r.count = 4;
  CHECK_FALSE(r.ok());
  r.count = 5;
  r.missing = {3};
  CHECK_FALSE(r.ok());
  r.missing.clear();
  r.encode_mismatches = {1};
  CHECK_FALSE(r.ok());
  r.encode_mismatches.clear();
  r.lex_order_matches_values = false;
  CHECK_FALSE(r.ok());
}
