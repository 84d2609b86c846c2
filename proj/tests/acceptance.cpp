// Acceptance gate: one line per criterion, exit 0 only if every one passes.
// `--write-golden <path>` regenerates the committed figure data through the
// enumeration oracle instead of running the checks.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fibfact/counting.hpp"
#include "fibfact/enumeration.hpp"
#include "fibfact/errors.hpp"
#include "fibfact/fibword.hpp"
#include "fibfact/linrep.hpp"
#include "fibfact/numeration.hpp"
#include "fibfact/report.hpp"
#include "fibfact/sweep.hpp"
#include "test_support.hpp"

using namespace fibfact;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::set<std::string> as_set(const RepresentationSet& reps) {
  std::set<std::string> out;
  for (const DigitString& m : reps.members) out.insert(m.str());
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome worked_example() {
  const auto start = Clock::now();
  const std::set<std::string> expected = {"100100", "11100",  "11011",
                                          "100011", "10121",  "1221",
                                          "20000"};
  bool ok = v_closed_form(16) == 7;
  ok = ok && v_recurrence(16) == 7;
  ok = ok && eval(linrep_v(), to_canonical(16)) == 7;
  ok = ok && as_set(enumerate_valid_by_factorization(16)) == expected;
  ok = ok && as_set(enumerate_valid_by_closure(16)) == expected;
  ok = ok && l_count(16) == 4;
  ok = ok && eval(berstel_l(), to_canonical(16)) == 4;
  ok = ok && enumerate_legal(16).size() == 4;
  return {ok, "V(16)=7 by all five algorithms, L(16)=4, " +
                  fmt_seconds(seconds_since(start))};
}

Outcome five_way_3000() {
  const auto start = Clock::now();
  const sweep::Disagreement bad = sweep::five_way_agreement_serial(3000);
  const double elapsed = seconds_since(start);
  if (bad.found) return {false, "n=" + bad.n.str() + " " + bad.detail};
  return {elapsed < 120.0,
          "n=0..3000 serial, " + fmt_seconds(elapsed) + " (budget 120s)"};
}

Outcome fibonacci_points() {
  for (std::uint32_t k = 1; k <= 40; ++k) {
    const std::uint64_t kk = k;
    const std::pair<BigInt, BigInt> points[] = {
        {fib(2 * kk + 1) - 1, fib(2 * kk - 1)},
        {fib(2 * kk + 1) - 2, fib(2 * kk - 1)},
        {fib(2 * kk + 2) - 2, fib(2 * kk)},
        {fib(2 * kk), fib(2 * kk - 2) + 1},
        {fib(2 * kk + 1), fib(2 * kk - 2) + 1},
    };
    for (const auto& [n, expected] : points) {
      if (v_closed_form(n) != expected ||
          eval(linrep_v(), to_canonical(n)) != expected)
        return {false, "value mismatch at n=" + n.str() +
                           ", k=" + std::to_string(k)};
    }
    for (const IdentityCheck& check : special_value_check(k)) {
      if (!check.pass)
        return {false, check.name + " fails at k=" + std::to_string(k)};
    }
  }
  return {true, "k=1..40 via closed form, recurrence and matrices"};
}

Outcome count_restatement() {
  const std::string w = fib_prefix(3000);
  std::uint64_t b = 0, aa = 0;
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    if (w[n - 1] == 'b') ++b;
    if (n >= 2 && w[n - 2] == 'a' && w[n - 1] == 'a') ++aa;
    const BigInt expected = w[n - 1] == 'a' ? BigInt(b + 1) : BigInt(aa + 1);
    if (v_closed_form(n) != expected || count_b(n) != BigInt(b) ||
        count_aa(n) != BigInt(aa))
      return {false, "n=" + std::to_string(n)};
  }
  return {true, "scanned letter counts match, n=1..3000"};
}

Outcome figure_golden() {
  const std::string committed =
      slurp(std::string(FIBFACT_DATA_DIR) + "/figure_100.csv");
  if (committed.empty()) return {false, "missing data/figure_100.csv"};
  if (figure_csv(100, FigureSource::oracle) != committed)
    return {false, "oracle regeneration differs from committed rows"};
  if (figure_csv(100, FigureSource::closed) != committed)
    return {false, "closed-form regeneration differs from committed rows"};
  return {true, "committed rows match oracle and closed-form regeneration"};
}

Outcome extension_identities() {
  const auto start = Clock::now();
  const sweep::IdentityFailure bad = sweep::identity_sweep(10);
  const double elapsed = seconds_since(start);
  if (bad.found) return {false, bad.which + " fails at x=" + bad.witness};
  return {elapsed < 30.0, "all 0/1 strings up to length 10, " +
                              fmt_seconds(elapsed) + " (budget 30s)"};
}

Outcome l_bounds_and_points() {
  const std::vector<BigInt> l = sweep::l_linrep_range(1, 10000);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (l[n - 1] < 1 || l[n - 1] * l[n - 1] > BigInt(n) + 1)
      return {false, "bound fails at n=" + std::to_string(n)};
  }
  for (std::uint64_t i = 2; i <= 25; ++i) {
    if (eval(berstel_l(), to_canonical(fib(i) - 1)) != 1)
      return {false, "L(F(" + std::to_string(i) + ")-1) != 1"};
  }
  for (std::uint64_t i = 3; i <= 12; ++i) {
    if (eval(berstel_l(), to_canonical(fib(i) * fib(i) - 1)) != fib(i))
      return {false, "L(F(" + std::to_string(i) + ")^2-1) != F(i)"};
  }
  for (std::uint64_t i = 2; i <= 18; ++i) {
    if (enumerate_legal(fib(i) - 1).size() != 1)
      return {false, "enumeration contradicts L(F(" + std::to_string(i) +
                         ")-1)=1"};
  }
  for (std::uint64_t i = 3; i <= 8; ++i) {
    if (BigInt(enumerate_legal(fib(i) * fib(i) - 1).size()) != fib(i))
      return {false, "enumeration contradicts L(F(" + std::to_string(i) +
                         ")^2-1)=F(i)"};
  }
  return {true, "bounds n<=10000; sharp families by matrices and enumeration"};
}

Outcome large_n_consistency() {
  const auto start = Clock::now();
  const sweep::Disagreement bad =
      sweep::random_consistency(1000, BigInt("1000000000000000"), 42);
  if (bad.found) return {false, "n=" + bad.n.str() + " " + bad.detail};
  const BigInt f80 = fib(80);
  for (BigInt n = f80 - 2; n <= f80 + 2; ++n) {
    const BigInt v = v_closed_form(n);
    if (v != eval(linrep_v(), to_canonical(n)) || v != v_recurrence(n))
      return {false, "mismatch at n=" + n.str()};
  }
  const double elapsed = seconds_since(start);
  return {elapsed < 10.0, "1000 samples below 10^15 plus F(80)+-2, " +
                              fmt_seconds(elapsed) + " (budget 10s)"};
}

Outcome exactness_gate() {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const BigInt big(n);
    if (symbol_at(big) != symbol_at_sturmian(big))
      return {false, "symbol paths split at n=" + std::to_string(n)};
    if (floor_phi(big) != testsupport::float_floor_phi(big))
      return {false, "floor(n*phi) off at n=" + std::to_string(n)};
    if (ceil_div_phi2(big) != testsupport::float_ceil_phi2(big))
      return {false, "ceil(n/phi^2) off at n=" + std::to_string(n)};
    if (ceil_div_phi3(big) != testsupport::float_ceil_phi3(big))
      return {false, "ceil(n/phi^3) off at n=" + std::to_string(n)};
    if ((symbol_at(big) == Sym::a) != testsupport::float_symbol_is_a(big))
      return {false, "symbol inequality off at n=" + std::to_string(n)};
  }
  return {true, "integer paths match 100-digit arithmetic, n=1..100000"};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {"worked-example-16", worked_example},
    {"five-way-agreement", five_way_3000},
    {"fibonacci-point-identities", fibonacci_points},
    {"count-restatement", count_restatement},
    {"figure-golden", figure_golden},
    {"extension-identities", extension_identities},
    {"l-bounds-and-points", l_bounds_and_points},
    {"large-n-consistency", large_n_consistency},
    {"exactness-gate", exactness_gate},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--write-golden") {
    std::ofstream out(argv[2], std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << argv[2] << "\n";
      return 1;
    }
    out << figure_csv(100, FigureSource::oracle);
    return out.good() ? 0 : 1;
  }
  if (argc != 1) {
    std::cerr << "usage: " << argv[0] << " [--write-golden <path>]\n";
    return 1;
  }

  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& err) {
      outcome = {false, std::string("exception: ") + err.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << criterion.name;
    if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
    std::cout << "\n" << std::flush;
  }
  std::cout << (failures == 0 ? "acceptance: PASS"
                              : "acceptance: FAIL (" +
                                    std::to_string(failures) + " criteria)")
            << "\n";
  return failures == 0 ? 0 : 1;
}
