#include "fibfact/fibword.hpp"

#include <algorithm>

#include "fibfact/errors.hpp"
#include "fibfact/numeration.hpp"

namespace fibfact {

std::string standard_word(std::int64_t order, std::size_t cap) {
  if (order < -1) throw PreconditionViolated("standard_word: order < -1");
  if (fib(static_cast<std::uint64_t>(order + 2)) > cap)
    throw ResourceBound("standard_word: length exceeds cap");
  if (order == -1) return "b";
  std::string prev = "b";
  std::string cur = "a";
  for (std::int64_t i = 0; i < order; ++i) {
    std::string old = cur;
    cur += prev;
    prev = std::move(old);
  }
  return cur;
}

std::string fib_prefix(const BigInt& n, std::size_t cap) {
  if (n < 0) throw PreconditionViolated("fib_prefix: negative length");
  if (n > cap) throw ResourceBound("fib_prefix: length exceeds cap");
  const std::size_t len = n.convert_to<std::size_t>();
  if (len == 0) return "";
  std::string prev = "b";
  std::string cur = "a";
  while (cur.size() < len) {
    std::string old = cur;
    cur += prev;
    prev = std::move(old);
  }
  cur.resize(len);
  return cur;
}

std::string mu(std::string_view word) {
  std::string out;
  out.reserve(word.size() * 2);
  for (char c : word) {
    if (c == 'a') {
      out += "ab";
    } else {
      out += 'a';
    }
  }
  return out;
}

Sym symbol_at(const BigInt& n) {
  if (n < 1) throw PreconditionViolated("symbol_at: position must be >= 1");
  return to_canonical(n).trailing_zeros() % 2 == 0 ? Sym::a : Sym::b;
}

Sym symbol_at_sturmian(const BigInt& n) {
  if (n < 1) throw PreconditionViolated("symbol_at: position must be >= 1");
  return floor_phi(n + 1) - floor_phi(n) == 2 ? Sym::a : Sym::b;
}

BigInt count_b(const BigInt& n) {
  if (n < 0) throw PreconditionViolated("count_b: negative length");
  if (n == 0) return 0;
  return 2 * n + 1 - floor_phi(n + 1);
}

BigInt count_aa(const BigInt& n) {
  if (n < 0) throw PreconditionViolated("count_aa: negative length");
  if (n == 0) return 0;
  return floor_phi(n + 1) + floor_phi(n) - 3 * n - 1;
}

BigInt count_b_scan(const BigInt& n, std::size_t cap) {
  const std::string w = fib_prefix(n, cap);
  return static_cast<std::uint64_t>(std::count(w.begin(), w.end(), 'b'));
}

BigInt count_aa_scan(const BigInt& n, std::size_t cap) {
  const std::string w = fib_prefix(n, cap);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == 'a' && w[i + 1] == 'a') ++count;
  }
  return count;
}

}  // namespace fibfact
