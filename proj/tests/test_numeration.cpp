#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibfact/errors.hpp"
#include "fibfact/numeration.hpp"
#include "test_support.hpp"

using namespace fibfact;

TEST_CASE("fib base values and recurrence") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(7) == 13);
  CHECK(fib(10) == 55);
  for (unsigned i = 0; i <= 90; ++i) CHECK(fib(i) == testsupport::naive_fib(i));
  for (unsigned i = 2; i <= 400; ++i) CHECK(fib(i) == fib(i - 1) + fib(i - 2));
  for (unsigned i = 3; i <= 400; ++i) CHECK(fib(i) > fib(i - 1));
}

TEST_CASE("isqrt floor postcondition") {
  for (std::uint64_t x : {0ull, 1ull, 2ull, 3ull, 4ull, 5ull, 24ull, 25ull}) {
    const BigInt r = isqrt(BigInt(x));
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    BigInt x = rng();
    x = x * rng() + rng();  // up to ~2^192
    x *= rng();
    const BigInt r = isqrt(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
    CHECK(r == boost::multiprecision::sqrt(x));
  }
  CHECK_THROWS_AS(isqrt(BigInt(-1)), PreconditionViolated);
}

TEST_CASE("floor_phi against the high-precision oracle") {
  CHECK(floor_phi(0) == 0);
  CHECK(floor_phi(1) == 1);
  CHECK(floor_phi(16) == 25);
  for (std::uint64_t n = 0; n <= 20000; ++n)
    CHECK(floor_phi(n) == testsupport::float_floor_phi(n));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const BigInt n = BigInt(rng()) % BigInt("1000000000000000");
    CHECK(floor_phi(n) == testsupport::float_floor_phi(n));
  }
}

TEST_CASE("digit string parsing and normalization") {
  CHECK(DigitString::parse("").empty());
  CHECK(DigitString::parse("1300").str() == "1300");
  CHECK(DigitString::parse("00101").normalized().str() == "101");
  CHECK(DigitString::parse("000").normalized().empty());
  CHECK_THROWS_AS(DigitString::parse("14"), DigitOverflow);
  CHECK_THROWS_AS(DigitString::parse("1a"), std::invalid_argument);
  CHECK_THROWS_AS(DigitString({1, 4}), DigitOverflow);
}

TEST_CASE("canonical representation round trip") {
  CHECK(to_canonical(0).str() == "");
  CHECK(to_canonical(1).str() == "1");
  CHECK(to_canonical(2).str() == "10");
  CHECK(to_canonical(16).str() == "100100");
  CHECK(to_canonical(14).str() == "100001");
  for (std::uint64_t n = 0; n <= 3000; ++n) {
    const CanonicalRep rep = to_canonical(n);
    CHECK(is_canonical(rep.digits()));
    CHECK(value(rep.digits()) == n);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const BigInt n = BigInt(rng()) * rng();
    CHECK(value(to_canonical(n).digits()) == n);
  }
  CHECK_THROWS_AS(CanonicalRep::parse("11"), NonCanonicalInput);
  CHECK_THROWS_AS(CanonicalRep::parse("011"), NonCanonicalInput);
  CHECK_THROWS_AS(CanonicalRep::parse("2"), NonCanonicalInput);
}

TEST_CASE("value is leading-zero insensitive") {
  CHECK(value(DigitString::parse("1300")) == 14);
  CHECK(value(DigitString::parse("100100")) == 16);
  CHECK(value(DigitString{}) == 0);
  CHECK(value(DigitString::parse("00101")) ==
        value(DigitString::parse("101")));
}

TEST_CASE("canonical implies legal implies digits at most one") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> len_dist(0, 12), digit_dist(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Digit> digits(len_dist(rng));
    for (Digit& d : digits) d = static_cast<Digit>(digit_dist(rng));
    const DigitString s{std::move(digits)};
    if (is_canonical(s)) CHECK(is_legal(s));
    if (is_legal(s)) {
      for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] <= 1);
    }
  }
  CHECK(is_legal(DigitString::parse("11")));
  CHECK(!is_canonical(DigitString::parse("11")));
  CHECK(!is_legal(DigitString::parse("011")));
}

TEST_CASE("apply_rule worked examples") {
  const DigitString d = DigitString::parse("100100");
  CHECK(apply_rule(d, 0, RuleDirection::forward).str() == "11100");
  CHECK_THROWS_AS(apply_rule(DigitString::parse("11"), 0, RuleDirection::forward),
                  PatternMismatch);
  CHECK_THROWS_AS(apply_rule(d, 1, RuleDirection::forward), PatternMismatch);
  // backward pattern needs the middle digit to be exactly one
  CHECK(apply_rule(DigitString::parse("011"), 0, RuleDirection::backward).str() ==
        "100");
  CHECK_THROWS_AS(apply_rule(DigitString::parse("021"), 0, RuleDirection::backward),
                  PatternMismatch);
  CHECK_THROWS_AS(apply_rule(DigitString::parse("313"), 0, RuleDirection::backward),
                  DigitOverflow);
  CHECK_THROWS_AS(apply_rule(DigitString::parse("103"), 0, RuleDirection::forward),
                  DigitOverflow);
}

TEST_CASE("apply_rule preserves value and digit bound, exhaustively") {
  // every digit string of length <= 8
  std::vector<Digit> digits;
  auto visit = [&](auto&& self, std::size_t remaining) -> void {
    const DigitString s{std::vector<Digit>(digits)};
    for (std::size_t p = 0; p + 2 < s.size(); ++p) {
      for (RuleDirection dir : {RuleDirection::forward, RuleDirection::backward}) {
        DigitString out;
        if (try_apply_rule(s, p, dir, out)) {
          CHECK(value(out) == value(s));
          for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] <= 3);
          CHECK(out == out.normalized());
        } else {
          CHECK_THROWS_AS(apply_rule(s, p, dir), Error);
        }
      }
    }
    if (remaining == 0) return;
    for (Digit d = 0; d <= 3; ++d) {
      digits.push_back(d);
      self(self, remaining - 1);
      digits.pop_back();
    }
  };
  visit(visit, 8);
}

TEST_CASE("forward then backward at the same window returns home") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> digit_dist(0, 3);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Digit> digits(6);
    for (Digit& d : digits) d = static_cast<Digit>(digit_dist(rng));
    const DigitString s{std::move(digits)};
    for (std::size_t p = 0; p + 2 < s.size(); ++p) {
      DigitString forward;
      if (!try_apply_rule(s, p, RuleDirection::forward, forward)) continue;
      // the rewrite may strip leading zeros; re-pad before inverting
      std::vector<Digit> padded(s.size() - forward.size(), 0);
      padded.insert(padded.end(), forward.digits().begin(),
                    forward.digits().end());
      const DigitString back =
          apply_rule(DigitString{std::move(padded)}, p, RuleDirection::backward);
      CHECK(back == s.normalized());
    }
  }
}

TEST_CASE("parse_count forms") {
  CHECK(parse_count("123") == 123);
  CHECK(parse_count("10^30") == BigInt("1000000000000000000000000000000"));
  CHECK(parse_count("F(7)") == 13);
  CHECK(parse_count("F(9)-2") == 32);
  CHECK(parse_count("F(9)+2") == 36);
  CHECK(parse_count("F(80)") == BigInt("23416728348467685"));
  CHECK_THROWS_AS(parse_count("F(2)-5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_count("12x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_count(""), std::invalid_argument);
}
