#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibfact/bigint.hpp"
#include "fibfact/enumeration.hpp"

namespace fibfact {

enum class SequenceKind { v, l };
enum class SequenceFormat { bfile, csv };
enum class FigureSource { closed, oracle };

/// "n value" lines (bfile) or "n,value,symbol" lines (csv), ascending n.
std::string sequence_report(const BigInt& from, const BigInt& to,
                            SequenceKind what, SequenceFormat format);

/// "n,V(n),symbol,line" rows for 1 <= n <= max; line is "upper" for 'a'
/// positions and "lower" for 'b' positions.
std::string figure_csv(std::uint64_t max, FigureSource source,
                       std::size_t cap = kDefaultCap);

struct SelfcheckOptions {
  std::uint64_t max_oracle = 500;
  BigInt max_fast = BigInt("1000000000000");
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultCap;
  std::optional<std::string> berstel_fixture_path;
  std::optional<std::string> v_fixture_path;
};

struct SelfcheckRow {
  std::string name;
  std::string range;
  bool pass = false;
  std::string detail;
};

struct SelfcheckResult {
  std::vector<SelfcheckRow> rows;
  bool all_pass = false;
  std::string first_fail;
};

SelfcheckResult selfcheck_run(const SelfcheckOptions& options);
std::string selfcheck_table(const SelfcheckResult& result);

/// "task,n,micros" timing rows comparing the per-value algorithms and the
/// serial versus parallel sweep kernels.
std::string bench_csv(std::uint64_t max_n);

}  // namespace fibfact
