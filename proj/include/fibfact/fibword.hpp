#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fibfact/bigint.hpp"

namespace fibfact {

enum class Sym : char { a = 'a', b = 'b' };

inline char to_char(Sym s) { return static_cast<char>(s); }

/// Default cap on materialized word length, in symbols.
inline constexpr std::size_t kDefaultCap = std::size_t{1} << 26;

/// Standard words: order -1 is "b", order 0 is "a", then each word is the
/// previous one followed by the one before it. Length of order i is F_{i+2}.
/// Throws ResourceBound when the word would exceed cap symbols.
std::string standard_word(std::int64_t order, std::size_t cap = kDefaultCap);

/// First n symbols of the infinite word (the limit of the standard words).
std::string fib_prefix(const BigInt& n, std::size_t cap = kDefaultCap);

/// Morphism a -> ab, b -> a.
std::string mu(std::string_view word);

/// Symbol at 1-based position n, for any n: 'a' exactly when the canonical
/// representation of n has an even number of trailing zeros.
Sym symbol_at(const BigInt& n);

/// Same symbol through the Beatty sequence instead: 'a' exactly when
/// floor((n+1)*phi) - floor(n*phi) = 2.
Sym symbol_at_sturmian(const BigInt& n);

/// Number of b's among the first n symbols. Closed form, any n.
BigInt count_b(const BigInt& n);

/// Number of occurrences of "aa" starting within the first n-1 positions.
/// Closed form, any n.
BigInt count_aa(const BigInt& n);

/// Scan counterparts, bounded by the materialization cap.
BigInt count_b_scan(const BigInt& n, std::size_t cap = kDefaultCap);
BigInt count_aa_scan(const BigInt& n, std::size_t cap = kDefaultCap);

}  // namespace fibfact
