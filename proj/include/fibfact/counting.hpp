#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibfact/bigint.hpp"
#include "fibfact/numeration.hpp"

namespace fibfact {

/// Number of factorizations of the length-n word prefix into non-increasing
/// standard words, by structural recursion on the canonical representation.
/// Memoized and thread-safe; works for any n >= 0 (V(0) = 1).
BigInt v_recurrence(const BigInt& n);

enum class RecurrenceRule {
  base,             // empty or "1"
  append_zero_eq,   // z 1 0^{odd}      -> z 1 0^{odd-1}
  even_zeros_split, // z 1 0^{2k}, k>=1 -> z 1 0^{2k-2}  +  z (01)^k
  odd_gap_merge,    // z 1 0^{odd} 1    -> z 1 0^{odd+1}
  even_gap_split,   // z 1 0^{2k} 1     -> z 1 0^{2k}    +  z (01)^k
};

const char* rule_name(RecurrenceRule rule);

struct RecurrenceStep {
  RecurrenceRule rule;
  std::string rep;                    // canonical input of this step
  std::vector<std::string> operands;  // canonical reps the step reduces to
};

/// Full recursion transcript: every distinct subproblem appears once, each
/// after its operands, so replaying the steps in order rebuilds the result.
struct RecurrenceTrace {
  std::string input;
  std::vector<RecurrenceStep> steps;
  BigInt result;
};

RecurrenceTrace v_recurrence_trace(const BigInt& n);

/// ceil(n / phi^2) = 2n - floor(n*phi) for n >= 1; 0 for n = 0.
BigInt ceil_div_phi2(const BigInt& n);

/// ceil(n / phi^3) = floor(n*sqrt(5)) + 1 - 2n for n >= 1; 0 for n = 0.
BigInt ceil_div_phi3(const BigInt& n);

/// Same count as v_recurrence, in O(log n) arithmetic: V(0) = 1, then
/// ceil(n/phi^2) at positions reading 'a' and ceil(n/phi^3) at 'b'.
BigInt v_closed_form(const BigInt& n);

struct IdentityCheck {
  std::string name;
  BigInt expected;
  BigInt via_closed;
  BigInt via_recurrence;
  bool pass = false;
};

/// The five Fibonacci-point identities at parameter k >= 1:
///   V(F_{2k+1}-1) = V(F_{2k+1}-2) = F_{2k-1}
///   V(F_{2k+2}-2) = F_{2k}
///   V(F_{2k}) = V(F_{2k+1}) = F_{2k-2}+1
std::vector<IdentityCheck> special_value_check(std::uint32_t k);

/// For n with symbol 'a': appending one zero to the canonical representation
/// gives n' with ceil(n/phi^2) = ceil(n'/phi^3). Throws PreconditionViolated
/// when the symbol at n is 'b'.
bool bridge_check(const BigInt& n);

/// Number of 0/1 representations of n, by dynamic programming over canonical
/// digit positions. Independent of the linear-representation path.
BigInt l_count(const BigInt& n);

}  // namespace fibfact
