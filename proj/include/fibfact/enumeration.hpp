#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibfact/bigint.hpp"
#include "fibfact/fibword.hpp"
#include "fibfact/numeration.hpp"

namespace fibfact {

enum class RepKind { legal, valid };

/// All representations of one target value, normalized and sorted
/// lexicographically.
struct RepresentationSet {
  BigInt target;
  RepKind kind = RepKind::valid;
  std::vector<DigitString> members;

  std::size_t size() const { return members.size(); }
  bool contains(std::string_view rep) const;
  /// One member per line, in set order.
  std::string lines() const;
};

/// Enumeration bound for the exhaustive oracles.
inline constexpr std::uint64_t kDefaultOracleMax = 3000;

/// Materialized word prefix plus a longest-common-prefix table, so that
/// "does the standard word of order j occur at position p" is one lookup.
struct PrefixIndex {
  std::string text;
  std::vector<std::uint32_t> lcp;  // lcp[p] = longest match with own prefix

  bool prefix_matches_at(std::size_t pos, std::size_t len) const {
    if (pos + len > text.size()) return false;
    return pos == 0 || lcp[pos] >= len;
  }
};

PrefixIndex build_prefix_index(std::uint64_t n, std::size_t cap = kDefaultCap);

/// All 0/1 representations of n, by bounded search over canonical digit
/// positions. Throws ResourceBound when n exceeds the budget.
RepresentationSet enumerate_legal(const BigInt& n,
                                  std::uint64_t budget = kDefaultOracleMax);

/// All representations arising from factorizations of the length-n prefix
/// into non-increasing standard words: each member records how many copies
/// of each word order the factorization uses. Digits never exceed 3.
RepresentationSet enumerate_valid_by_factorization(
    const BigInt& n, std::size_t cap = kDefaultCap);
RepresentationSet enumerate_valid_by_factorization(const BigInt& n,
                                                   const PrefixIndex& index);

/// Same set, computed instead as the closure of the canonical representation
/// under apply_rule in both directions. Breadth-first; states are normalized
/// and padded to the canonical length when windows are enumerated.
RepresentationSet enumerate_valid_by_closure(const BigInt& n,
                                             std::size_t cap = kDefaultCap);

/// Number of factorizations of the length-n prefix that only use standard
/// words of order >= min_order.
BigInt count_min_index(const BigInt& n, std::uint32_t min_order,
                       std::size_t cap = kDefaultCap);

}  // namespace fibfact
