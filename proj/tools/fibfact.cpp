#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fibfact/counting.hpp"
#include "fibfact/enumeration.hpp"
#include "fibfact/errors.hpp"
#include "fibfact/fibword.hpp"
#include "fibfact/linrep.hpp"
#include "fibfact/report.hpp"
#include "fibfact/sweep.hpp"

namespace {

using fibfact::BigInt;

constexpr int kExitOk = 0;
constexpr int kExitSelfcheckFail = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitResourceBound = 3;

std::string display(const fibfact::DigitString& d) {
  return d.empty() ? "ε" : d.str();
}

int run_value(const std::string& n_text, const std::string& algo,
              std::uint64_t max_oracle, std::size_t cap) {
  const BigInt n = fibfact::parse_count(n_text);
  std::map<std::string, BigInt> results;
  const bool all = algo == "all";
  const bool oracle_feasible = n <= max_oracle;
  if (algo == "oracle" || (all && oracle_feasible))
    results["oracle"] = fibfact::enumerate_valid_by_factorization(
                            n, std::min<std::size_t>(cap, max_oracle + 1))
                            .size();
  if (algo == "closure" || (all && oracle_feasible))
    results["closure"] =
        fibfact::enumerate_valid_by_closure(n, std::min<std::size_t>(
                                                   cap, max_oracle + 1))
            .size();
  if (algo == "recurrence" || all)
    results["recurrence"] = fibfact::v_recurrence(n);
  if (algo == "closed" || all) results["closed"] = fibfact::v_closed_form(n);
  if (algo == "linrep" || all)
    results["linrep"] = fibfact::eval(fibfact::linrep_v(), fibfact::to_canonical(n));

  if (!all) {
    std::cout << results.begin()->second.str() << '\n';
    return kExitOk;
  }
  std::cout << "n " << n.str() << '\n';
  std::cout << "symbol "
            << (n == 0 ? '-' : fibfact::to_char(fibfact::symbol_at(n)))
            << '\n';
  bool agree = true;
  const BigInt& reference = results.begin()->second;
  for (const char* name :
       {"oracle", "closure", "recurrence", "closed", "linrep"}) {
    auto it = results.find(name);
    if (it == results.end()) continue;
    std::cout << name << ' ' << it->second.str() << '\n';
    if (it->second != reference) agree = false;
  }
  std::cout << (agree ? "agreement ok" : "agreement FAILED") << '\n';
  if (!agree) {
    std::cerr << "algorithms disagree at n=" << n.str() << '\n';
    return kExitDisagreement;
  }
  return kExitOk;
}

int run_enumerate(const std::string& n_text, const std::string& kind,
                  std::uint64_t max_oracle, std::size_t cap) {
  const BigInt n = fibfact::parse_count(n_text);
  const fibfact::RepresentationSet set =
      kind == "legal"
          ? fibfact::enumerate_legal(n, max_oracle)
          : fibfact::enumerate_valid_by_factorization(
                n, std::min<std::size_t>(cap, max_oracle + 1));
  for (const fibfact::DigitString& member : set.members)
    std::cout << display(member) << '\n';
  std::cout << "count " << set.size() << '\n';
  return kExitOk;
}

int run_sequence(const std::string& from_text, const std::string& to_text,
                 const std::string& what, const std::string& format) {
  const BigInt from = fibfact::parse_count(from_text);
  const BigInt to = fibfact::parse_count(to_text);
  std::cout << fibfact::sequence_report(
      from, to,
      what == "L" ? fibfact::SequenceKind::l : fibfact::SequenceKind::v,
      format == "csv" ? fibfact::SequenceFormat::csv
                      : fibfact::SequenceFormat::bfile);
  return kExitOk;
}

int run_selfcheck(const fibfact::SelfcheckOptions& options) {
  const fibfact::SelfcheckResult result = fibfact::selfcheck_run(options);
  std::cout << fibfact::selfcheck_table(result);
  return result.all_pass ? kExitOk : kExitSelfcheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization counts over the Fibonacci word"};
  app.require_subcommand(1);

  std::size_t cap = fibfact::kDefaultCap;
  app.add_option("--cap", cap, "materialized word length cap in symbols");

  std::string n_text, algo = "closed";
  std::uint64_t max_oracle = fibfact::kDefaultOracleMax;
  auto* value_cmd = app.add_subcommand("value", "V(n) by one or all algorithms");
  value_cmd->add_option("n", n_text, "decimal, a^b, or F(k)+-c")->required();
  value_cmd->add_option("--algo", algo)
      ->check(CLI::IsMember(
          {"oracle", "closure", "recurrence", "closed", "linrep", "all"}));
  value_cmd->add_option("--max-oracle", max_oracle,
                        "bound for the enumeration algorithms");

  std::string kind = "valid";
  auto* enum_cmd = app.add_subcommand("enumerate", "all representations of n");
  enum_cmd->add_option("n", n_text)->required();
  enum_cmd->add_option("--kind", kind)->check(CLI::IsMember({"legal", "valid"}));
  enum_cmd->add_option("--max-oracle", max_oracle);

  std::string from_text, to_text, what = "V", format = "bfile";
  auto* seq_cmd = app.add_subcommand("sequence", "V or L over a range of n");
  seq_cmd->add_option("from", from_text)->required();
  seq_cmd->add_option("to", to_text)->required();
  seq_cmd->add_option("--what", what)->check(CLI::IsMember({"V", "L"}));
  seq_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"bfile", "csv"}));

  std::uint64_t figure_max = 100;
  auto* figure_cmd = app.add_subcommand("figure", "plot rows for V(n)");
  figure_cmd->add_option("--max", figure_max)->check(CLI::PositiveNumber);

  fibfact::SelfcheckOptions selfcheck;
  std::string max_fast_text = "10^12";
  std::string berstel_path, v_path;
  auto* check_cmd = app.add_subcommand("selfcheck", "run every invariant suite");
  check_cmd->add_option("--max-oracle", selfcheck.max_oracle);
  check_cmd->add_option("--max-fast", max_fast_text);
  check_cmd->add_option("--seed", selfcheck.seed);
  check_cmd->add_option("--berstel-fixture", berstel_path,
                        "external fixture to verify against");
  check_cmd->add_option("--v-fixture", v_path,
                        "external fixture to verify against");

  std::uint64_t bench_max = 2000;
  auto* bench_cmd = app.add_subcommand("bench", "timing comparison CSV");
  bench_cmd->add_option("--max", bench_max);

  CLI11_PARSE(app, argc, argv);

  try {
    if (value_cmd->parsed()) return run_value(n_text, algo, max_oracle, cap);
    if (enum_cmd->parsed())
      return run_enumerate(n_text, kind, max_oracle, cap);
    if (seq_cmd->parsed())
      return run_sequence(from_text, to_text, what, format);
    if (figure_cmd->parsed()) {
      std::cout << fibfact::figure_csv(figure_max, fibfact::FigureSource::closed,
                                       cap);
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      selfcheck.cap = cap;
      selfcheck.max_fast = fibfact::parse_count(max_fast_text);
      if (!berstel_path.empty()) selfcheck.berstel_fixture_path = berstel_path;
      if (!v_path.empty()) selfcheck.v_fixture_path = v_path;
      return run_selfcheck(selfcheck);
    }
    if (bench_cmd->parsed()) {
      std::cout << fibfact::bench_csv(bench_max);
      return kExitOk;
    }
  } catch (const fibfact::ResourceBound& err) {
    std::cerr << "resource bound: " << err.what() << '\n';
    return kExitResourceBound;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitSelfcheckFail;
  }
  return kExitOk;
}
