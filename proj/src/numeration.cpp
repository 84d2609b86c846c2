#include "fibfact/numeration.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

#include "fibfact/errors.hpp"

namespace fibfact {

namespace {

class FibCache {
 public:
  BigInt at(std::uint64_t i) {
    std::scoped_lock lock(mutex_);
    grow_to_index(i);
    return table_[i];
  }

  // Table copy F_0..F_m with F_m <= n < F_{m+1} (requires n >= 1).
  std::vector<BigInt> up_to_value(const BigInt& n) {
    std::scoped_lock lock(mutex_);
    while (table_.back() <= n) push_next();
    auto past = std::upper_bound(table_.begin(), table_.end(), n);
    return {table_.begin(), past};
  }

 private:
  void grow_to_index(std::uint64_t i) {
    while (table_.size() <= i) push_next();
  }
  void push_next() {
    table_.push_back(table_[table_.size() - 1] + table_[table_.size() - 2]);
  }

  std::mutex mutex_;
  std::vector<BigInt> table_ = {0, 1};
};

FibCache& fib_cache() {
  static FibCache cache;
  return cache;
}

}  // namespace

DigitString::DigitString(std::vector<Digit> msb_first)
    : digits_(std::move(msb_first)) {
  for (Digit d : digits_) {
    if (d > 3) throw DigitOverflow("digit above 3");
  }
}

DigitString DigitString::parse(std::string_view text) {
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c >= '0' && c <= '3') {
      digits.push_back(static_cast<Digit>(c - '0'));
    } else if (c >= '4' && c <= '9') {
      throw DigitOverflow("digit above 3");
    } else {
      throw std::invalid_argument("digit string may only contain 0-3");
    }
  }
  return DigitString(std::move(digits));
}

DigitString DigitString::normalized() const {
  std::size_t first = 0;
  while (first < digits_.size() && digits_[first] == 0) ++first;
  return DigitString({digits_.begin() + first, digits_.end()});
}

std::string DigitString::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (Digit d : digits_) out.push_back(static_cast<char>('0' + d));
  return out;
}

CanonicalRep::CanonicalRep(DigitString d) : digits_(std::move(d)) {
  if (!is_canonical(digits_)) throw NonCanonicalInput(digits_.str());
}

CanonicalRep CanonicalRep::parse(std::string_view text) {
  return CanonicalRep(DigitString::parse(text));
}

std::size_t CanonicalRep::trailing_zeros() const {
  const auto& d = digits_.digits();
  std::size_t count = 0;
  for (auto it = d.rbegin(); it != d.rend() && *it == 0; ++it) ++count;
  return count;
}

BigInt fib(std::uint64_t i) { return fib_cache().at(i); }

CanonicalRep to_canonical(const BigInt& n) {
  if (n < 0) throw PreconditionViolated("to_canonical: negative input");
  if (n == 0) return {};
  const std::vector<BigInt> fibs = fib_cache().up_to_value(n);
  const std::size_t m = fibs.size() - 1;  // F_m <= n < F_{m+1}, m >= 2
  std::vector<Digit> digits;
  digits.reserve(m - 1);
  BigInt rem = n;
  for (std::size_t j = m; j >= 2; --j) {
    if (fibs[j] <= rem) {
      digits.push_back(1);
      rem -= fibs[j];
    } else {
      digits.push_back(0);
    }
  }
  return CanonicalRep(DigitString(std::move(digits)));
}

BigInt value(const DigitString& d) {
  BigInt acc = 0;
  BigInt lo = 1, hi = 2;  // F_2, F_3
  const auto& digits = d.digits();
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it != 0) acc += int(*it) * lo;
    BigInt next = lo + hi;
    lo = hi;
    hi = next;
  }
  return acc;
}

bool is_canonical(const DigitString& d) {
  const auto& digits = d.digits();
  if (digits.empty()) return true;
  if (digits.front() != 1) return false;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] > 1) return false;
    if (i + 1 < digits.size() && digits[i] == 1 && digits[i + 1] == 1)
      return false;
  }
  return true;
}

bool is_legal(const DigitString& d) {
  const auto& digits = d.digits();
  if (digits.empty()) return true;
  if (digits.front() == 0) return false;
  return std::all_of(digits.begin(), digits.end(),
                     [](Digit x) { return x <= 1; });
}

namespace {

enum class RuleFailure { none, pattern, overflow };

RuleFailure rule_window(const DigitString& d, std::size_t p, RuleDirection dir,
                        Digit out[3]) {
  if (d.size() < 3 || p > d.size() - 3) return RuleFailure::pattern;
  const Digit a = d[p], b = d[p + 1], c = d[p + 2];
  if (dir == RuleDirection::forward) {
    if (a < 1 || b != 0) return RuleFailure::pattern;
    if (c == 3) return RuleFailure::overflow;
    out[0] = a - 1;
    out[1] = 1;
    out[2] = c + 1;
  } else {
    if (b != 1 || c < 1) return RuleFailure::pattern;
    if (a == 3) return RuleFailure::overflow;
    out[0] = a + 1;
    out[1] = 0;
    out[2] = c - 1;
  }
  return RuleFailure::none;
}

DigitString rewrite(const DigitString& d, std::size_t p, const Digit w[3]) {
  std::vector<Digit> digits = d.digits();
  digits[p] = w[0];
  digits[p + 1] = w[1];
  digits[p + 2] = w[2];
  return DigitString(std::move(digits)).normalized();
}

}  // namespace

DigitString apply_rule(const DigitString& d, std::size_t window_top,
                       RuleDirection dir) {
  Digit w[3];
  switch (rule_window(d, window_top, dir, w)) {
    case RuleFailure::pattern:
      throw PatternMismatch("no rule window at position " +
                            std::to_string(window_top) + " in " + d.str());
    case RuleFailure::overflow:
      throw DigitOverflow("rule would push a digit above 3 in " + d.str());
    case RuleFailure::none:
      break;
  }
  return rewrite(d, window_top, w);
}

bool try_apply_rule(const DigitString& d, std::size_t window_top,
                    RuleDirection dir, DigitString& out) {
  Digit w[3];
  if (rule_window(d, window_top, dir, w) != RuleFailure::none) return false;
  out = rewrite(d, window_top, w);
  return true;
}

namespace {

BigInt parse_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty count");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad digit in count");
  }
  return BigInt(std::string(s));
}

constexpr std::uint64_t kMaxFibIndexInput = 20000;
constexpr std::uint64_t kMaxExponentInput = 100000;

}  // namespace

BigInt parse_count(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty count");
  if (text.substr(0, 2) == "F(") {
    std::size_t close = text.find(')');
    if (close == std::string_view::npos)
      throw std::invalid_argument("unterminated F(");
    BigInt index = parse_decimal(text.substr(2, close - 2));
    if (index > kMaxFibIndexInput)
      throw std::invalid_argument("Fibonacci index too large");
    BigInt result = fib(index.convert_to<std::uint64_t>());
    std::string_view rest = text.substr(close + 1);
    if (!rest.empty()) {
      if (rest[0] == '+') {
        result += parse_decimal(rest.substr(1));
      } else if (rest[0] == '-') {
        result -= parse_decimal(rest.substr(1));
        if (result < 0) throw std::invalid_argument("negative count");
      } else {
        throw std::invalid_argument("expected + or - after F(...)");
      }
    }
    return result;
  }
  std::size_t caret = text.find('^');
  if (caret != std::string_view::npos) {
    BigInt base = parse_decimal(text.substr(0, caret));
    BigInt exp = parse_decimal(text.substr(caret + 1));
    if (exp > kMaxExponentInput) throw std::invalid_argument("exponent too large");
    return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
  }
  return parse_decimal(text);
}

}  // namespace fibfact
