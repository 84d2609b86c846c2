#include "fibfact/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "fibfact/counting.hpp"
#include "fibfact/errors.hpp"
#include "fibfact/fibword.hpp"
#include "fibfact/linrep.hpp"
#include "fibfact/sweep.hpp"

namespace fibfact {

namespace {

constexpr std::size_t kMaxSequenceRows = 100000000;

char symbol_char(const BigInt& n) {
  return n == 0 ? '-' : to_char(symbol_at(n));
}

}  // namespace

std::string sequence_report(const BigInt& from, const BigInt& to,
                            SequenceKind what, SequenceFormat format) {
  if (from < 0 || to < from)
    throw PreconditionViolated("sequence: need 0 <= from <= to");
  const BigInt span = to - from + 1;
  if (span > kMaxSequenceRows) throw ResourceBound("sequence: too many rows");
  const std::size_t count = span.convert_to<std::size_t>();
  const std::vector<BigInt> values = what == SequenceKind::v
                                         ? sweep::v_closed_range(from, count)
                                         : sweep::l_linrep_range(from, count);
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt n = from + i;
    out += n.str();
    if (format == SequenceFormat::bfile) {
      out += ' ';
      out += values[i].str();
    } else {
      out += ',';
      out += values[i].str();
      out += ',';
      out += symbol_char(n);
    }
    out += '\n';
  }
  return out;
}

std::string figure_csv(std::uint64_t max, FigureSource source,
                       std::size_t cap) {
  if (max < 1) throw PreconditionViolated("figure: max >= 1");
  std::vector<BigInt> values;
  if (source == FigureSource::closed) {
    values = sweep::v_closed_range(1, max);
  } else {
    const PrefixIndex index = build_prefix_index(max, cap);
    values.reserve(max);
    for (std::uint64_t n = 1; n <= max; ++n)
      values.push_back(enumerate_valid_by_factorization(BigInt(n), index).size());
  }
  std::string out;
  for (std::uint64_t n = 1; n <= max; ++n) {
    const char sym = to_char(symbol_at(n));
    out += std::to_string(n);
    out += ',';
    out += values[n - 1].str();
    out += ',';
    out += sym;
    out += sym == 'a' ? ",upper\n" : ",lower\n";
  }
  return out;
}

namespace {

SelfcheckRow fixture_row(const SelfcheckOptions& options) {
  SelfcheckRow row{"transcription", "-", true, ""};
  if (!transcription_ok()) {
    row.pass = false;
    row.detail = "built-in matrices do not reproduce their fixtures";
    return row;
  }
  auto check_file = [&row](const std::string& path, const LinearRep& want) {
    std::ifstream in(path);
    if (!in) {
      row.pass = false;
      row.detail = "cannot open fixture " + path;
      return;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      if (from_fixture(buffer.str()) != want) {
        row.pass = false;
        row.detail = "fixture " + path + " disagrees with built-in matrices";
      }
    } catch (const std::exception& err) {
      row.pass = false;
      row.detail = "fixture " + path + ": " + err.what();
    }
  };
  if (options.berstel_fixture_path)
    check_file(*options.berstel_fixture_path, berstel_l());
  if (row.pass && options.v_fixture_path)
    check_file(*options.v_fixture_path, linrep_v());
  return row;
}

std::string range_label(std::uint64_t max) {
  return max == 0 ? "skipped" : "0.." + std::to_string(max);
}

}  // namespace

SelfcheckResult selfcheck_run(const SelfcheckOptions& options) {
  SelfcheckResult result;
  auto add = [&result](SelfcheckRow row) {
    result.rows.push_back(std::move(row));
  };

  add(fixture_row(options));

  {
    SelfcheckRow row{"oracle-agreement", range_label(options.max_oracle), true,
                     ""};
    if (options.max_oracle > 0) {
      const sweep::Disagreement bad =
          sweep::five_way_agreement(options.max_oracle, options.cap);
      if (bad.found) {
        row.pass = false;
        row.detail = "n=" + bad.n.str() + " " + bad.detail;
      }
    }
    add(row);
  }

  {
    SelfcheckRow row{"representation-structure",
                     range_label(options.max_oracle), true, ""};
    if (options.max_oracle > 0) {
      const sweep::Disagreement bad =
          sweep::structure_sweep(options.max_oracle, options.cap);
      if (bad.found) {
        row.pass = false;
        row.detail = "n=" + bad.n.str() + " " + bad.detail;
      }
    }
    add(row);
  }

  {
    SelfcheckRow row{"closed-vs-linrep-random",
                     "1000 samples <= " + options.max_fast.str(), true, ""};
    const sweep::Disagreement bad =
        sweep::random_consistency(1000, options.max_fast, options.seed);
    if (bad.found) {
      row.pass = false;
      row.detail = "n=" + bad.n.str() + " " + bad.detail;
    }
    add(row);
  }

  {
    SelfcheckRow row{"fibonacci-point-identities", "k=1..40", true, ""};
    for (std::uint32_t k = 1; k <= 40 && row.pass; ++k) {
      for (const IdentityCheck& check : special_value_check(k)) {
        if (!check.pass) {
          row.pass = false;
          row.detail = check.name + " fails at k=" + std::to_string(k);
          break;
        }
      }
    }
    add(row);
  }

  {
    SelfcheckRow row{"extension-identities", "|x| <= 10", true, ""};
    const sweep::IdentityFailure bad = sweep::identity_sweep(10);
    if (bad.found) {
      row.pass = false;
      row.detail = bad.which + " fails at x=" + bad.witness;
    }
    add(row);
  }

  {
    SelfcheckRow row{"ceiling-bridge", range_label(options.max_oracle), true,
                     ""};
    if (options.max_oracle > 0) {
      const sweep::Disagreement bad = sweep::bridge_sweep(options.max_oracle);
      if (bad.found) {
        row.pass = false;
        row.detail = bad.detail;
      }
    }
    add(row);
  }

  {
    SelfcheckRow row{"symbol-paths-agree", "1..100000", true, ""};
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      if (symbol_at(n) != symbol_at_sturmian(n)) {
        row.pass = false;
        row.detail = "n=" + std::to_string(n);
        break;
      }
    }
    add(row);
  }

  {
    SelfcheckRow row{"count-restatement", range_label(options.max_oracle),
                     true, ""};
    if (options.max_oracle > 0) {
      const std::string w = fib_prefix(options.max_oracle, options.cap);
      std::uint64_t b_count = 0, aa_count = 0;
      for (std::uint64_t n = 1; n <= options.max_oracle && row.pass; ++n) {
        if (w[n - 1] == 'b') ++b_count;
        if (n >= 2 && w[n - 2] == 'a' && w[n - 1] == 'a') ++aa_count;
        const BigInt v = v_closed_form(n);
        const BigInt expected =
            w[n - 1] == 'a' ? BigInt(b_count + 1) : BigInt(aa_count + 1);
        if (v != expected ||
            count_b(n) != BigInt(b_count) ||
            count_aa(n) != BigInt(aa_count)) {
          row.pass = false;
          row.detail = "n=" + std::to_string(n);
        }
      }
    }
    add(row);
  }

  {
    SelfcheckRow row{"l-bounds", "1..10000", true, ""};
    const std::vector<BigInt> l = sweep::l_linrep_range(1, 10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      const BigInt& ln = l[n - 1];
      if (ln < 1 || ln * ln > BigInt(n) + 1) {
        row.pass = false;
        row.detail = "n=" + std::to_string(n) + " L=" + ln.str();
        break;
      }
    }
    if (row.pass) {
      for (std::uint64_t i = 2; i <= 25 && row.pass; ++i) {
        if (eval(berstel_l(), to_canonical(fib(i) - 1)) != 1) {
          row.pass = false;
          row.detail = "L(F(" + std::to_string(i) + ")-1) != 1";
        }
      }
      for (std::uint64_t i = 3; i <= 12 && row.pass; ++i) {
        if (eval(berstel_l(), to_canonical(fib(i) * fib(i) - 1)) != fib(i)) {
          row.pass = false;
          row.detail = "L(F(" + std::to_string(i) + ")^2-1) != F(" +
                       std::to_string(i) + ")";
        }
      }
    }
    add(row);
  }

  result.all_pass = true;
  for (const SelfcheckRow& row : result.rows) {
    if (!row.pass) {
      result.all_pass = false;
      result.first_fail = row.name;
      break;
    }
  }
  return result;
}

std::string selfcheck_table(const SelfcheckResult& result) {
  std::size_t name_width = 4, range_width = 5;
  for (const SelfcheckRow& row : result.rows) {
    name_width = std::max(name_width, row.name.size());
    range_width = std::max(range_width, row.range.size());
  }
  std::string out;
  auto pad = [](const std::string& s, std::size_t width) {
    return s + std::string(width - s.size() + 2, ' ');
  };
  out += pad("name", name_width) + pad("range", range_width) + "status\n";
  for (const SelfcheckRow& row : result.rows) {
    out += pad(row.name, name_width) + pad(row.range, range_width) +
           (row.pass ? "pass" : "FAIL");
    if (!row.pass && !row.detail.empty()) out += "  (" + row.detail + ")";
    out += '\n';
  }
  out += result.all_pass
             ? "selfcheck: PASS\n"
             : "selfcheck: FAIL (first failure: " + result.first_fail + ")\n";
  return out;
}

namespace {

template <typename Fn>
std::int64_t time_micros(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
      .count();
}

}  // namespace

std::string bench_csv(std::uint64_t max_n) {
  if (max_n < 10) throw PreconditionViolated("bench: max >= 10");
  std::string out = "task,n,micros\n";
  auto row = [&out](const std::string& task, std::uint64_t n,
                    std::int64_t micros) {
    out += task + "," + std::to_string(n) + "," + std::to_string(micros) +
           "\n";
  };
  const std::uint64_t oracle_n = std::min<std::uint64_t>(max_n, 800);
  {
    const PrefixIndex index = build_prefix_index(oracle_n, kDefaultCap);
    row("value-factorization", oracle_n, time_micros([&] {
          enumerate_valid_by_factorization(BigInt(oracle_n), index);
        }));
  }
  row("value-closure", oracle_n, time_micros([&] {
        enumerate_valid_by_closure(BigInt(oracle_n));
      }));
  row("value-recurrence", max_n,
      time_micros([&] { v_recurrence(BigInt(max_n)); }));
  row("value-closed", max_n,
      time_micros([&] { v_closed_form(BigInt(max_n)); }));
  row("value-linrep", max_n,
      time_micros([&] { eval(linrep_v(), to_canonical(BigInt(max_n))); }));
  row("sweep-closed-serial", max_n, time_micros([&] {
        sweep::v_closed_range_serial(0, max_n + 1);
      }));
  row("sweep-closed-omp", max_n,
      time_micros([&] { sweep::v_closed_range(0, max_n + 1); }));
  row("sweep-l-serial", max_n, time_micros([&] {
        sweep::l_linrep_range_serial(0, max_n + 1);
      }));
  row("sweep-l-omp", max_n,
      time_micros([&] { sweep::l_linrep_range(0, max_n + 1); }));
  row("sweep-identities-serial", 8,
      time_micros([&] { sweep::identity_sweep_serial(8); }));
  row("sweep-identities-omp", 8,
      time_micros([&] { sweep::identity_sweep(8); }));
  return out;
}

}  // namespace fibfact
