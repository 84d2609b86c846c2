#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibfact/bigint.hpp"

namespace fibfact {

using Digit = std::uint8_t;

/// Digit string over {0,1,2,3}, most significant digit first.
/// The empty string denotes zero. Construction rejects digits above 3.
class DigitString {
 public:
  DigitString() = default;
  explicit DigitString(std::vector<Digit> msb_first);

  /// Parses an ASCII string over "0123". Throws DigitOverflow on '4'..'9',
  /// std::invalid_argument on anything else.
  static DigitString parse(std::string_view text);

  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  /// Copy with leading zeros stripped.
  DigitString normalized() const;

  /// ASCII over "0123"; the empty string for zero.
  std::string str() const;

  auto operator<=>(const DigitString&) const = default;

 private:
  std::vector<Digit> digits_;
};

/// A digit string in the canonical language: empty, or starting with 1,
/// all digits in {0,1}, no two adjacent ones. Exactly one per natural number.
class CanonicalRep {
 public:
  CanonicalRep() = default;  // zero
  explicit CanonicalRep(DigitString d);  // throws NonCanonicalInput
  static CanonicalRep parse(std::string_view text);

  const DigitString& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::string str() const { return digits_.str(); }
  std::size_t trailing_zeros() const;

  auto operator<=>(const CanonicalRep&) const = default;

 private:
  DigitString digits_;
};

/// F_0 = 0, F_1 = 1, F_{i+2} = F_{i+1} + F_i. Memoized, thread-safe.
BigInt fib(std::uint64_t i);

/// Greedy canonical representation of n >= 0. to_canonical(0) is empty.
CanonicalRep to_canonical(const BigInt& n);

/// Value of a digit string: sum of digit(i) * F_{i+2} with i counted from
/// the least significant end. Leading zeros do not change the value.
BigInt value(const DigitString& d);

bool is_canonical(const DigitString& d);

/// All digits in {0,1} and no leading zero.
bool is_legal(const DigitString& d);

enum class RuleDirection { forward, backward };

/// Local rewriting of three adjacent digits (window_top indexes the most
/// significant digit of the window; window_top + 2 must be inside d).
///
/// forward:  (k, 0, l) -> (k-1, 1, l+1)   requires k >= 1; l <= 2
/// backward: (k, 1, l) -> (k+1, 0, l-1)   requires l >= 1; k <= 2
///
/// Both directions preserve the value. The result is normalized.
/// Throws PatternMismatch when the pattern is absent, DigitOverflow when a
/// digit would exceed 3.
DigitString apply_rule(const DigitString& d, std::size_t window_top,
                       RuleDirection dir);

/// Non-throwing variant; false when apply_rule would throw.
bool try_apply_rule(const DigitString& d, std::size_t window_top,
                    RuleDirection dir, DigitString& out);

/// Accepts "123", "10^30", "F(80)", "F(80)-2", "F(80)+2".
BigInt parse_count(std::string_view text);

}  // namespace fibfact
