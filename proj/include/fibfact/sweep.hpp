#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibfact/bigint.hpp"
#include "fibfact/enumeration.hpp"

namespace fibfact::sweep {

// Each kernel has a serial reference twin with identical output; the
// parallel versions write into preallocated slots, so results and any
// reported first failure are deterministic.

std::vector<BigInt> v_closed_range_serial(const BigInt& from,
                                          std::size_t count);
std::vector<BigInt> v_closed_range(const BigInt& from, std::size_t count);

std::vector<BigInt> v_linrep_range_serial(const BigInt& from,
                                          std::size_t count);
std::vector<BigInt> v_linrep_range(const BigInt& from, std::size_t count);

std::vector<BigInt> l_linrep_range_serial(const BigInt& from,
                                          std::size_t count);
std::vector<BigInt> l_linrep_range(const BigInt& from, std::size_t count);

struct Disagreement {
  bool found = false;
  BigInt n = -1;
  std::string detail;
};

/// Evaluates every n in [0, max_n] through all five V algorithms (the two
/// enumeration oracles compared as whole sets, then recurrence, closed form,
/// linear representation) and reports the smallest disagreement, if any.
Disagreement five_way_agreement_serial(std::uint64_t max_n,
                                       std::size_t cap = kDefaultCap);
Disagreement five_way_agreement(std::uint64_t max_n,
                                std::size_t cap = kDefaultCap);

/// Structural checks over the oracle range: 0/1 members form a subset of the
/// valid set and number l_count(n) = linear-representation L, every member
/// keeps digits at most 3, trailing-zero parity of every member matches the
/// symbol at n, and L <= V.
Disagreement structure_sweep(std::uint64_t max_n,
                             std::size_t cap = kDefaultCap);

struct IdentityFailure {
  bool found = false;
  std::string witness;  // 0/1 string
  std::string which;    // identity label or matrix digit
};

/// Checks the six extension identities and the matrix recurrence (both
/// digits) on every 0/1 string of length <= max_len.
IdentityFailure identity_sweep_serial(int max_len);
IdentityFailure identity_sweep(int max_len);

/// Seeded random agreement between closed form and linear representation,
/// for sample_count values uniform in [1, max_n].
Disagreement random_consistency_serial(std::size_t sample_count,
                                       const BigInt& max_n,
                                       std::uint64_t seed);
Disagreement random_consistency(std::size_t sample_count, const BigInt& max_n,
                                std::uint64_t seed);

/// bridge_check at every position reading 'a' up to max_n.
Disagreement bridge_sweep(std::uint64_t max_n);

}  // namespace fibfact::sweep
