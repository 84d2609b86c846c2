#include "fibfact/sweep.hpp"

#include <functional>
#include <random>
#include <utility>

#include "fibfact/counting.hpp"
#include "fibfact/fibword.hpp"
#include "fibfact/linrep.hpp"

namespace fibfact::sweep {

namespace {

template <typename Fn>
std::vector<BigInt> range_kernel(const BigInt& from, std::size_t count,
                                 Fn&& per_n, bool parallel) {
  std::vector<BigInt> out(count);
  if (count == 0) return out;
  // Warm the shared Fibonacci table once so the loop body rarely locks.
  to_canonical(from + count);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t i = 0; i < count; ++i) out[i] = per_n(from + i);
  } else {
    for (std::size_t i = 0; i < count; ++i) out[i] = per_n(from + i);
  }
  return out;
}

BigInt v_linrep(const BigInt& n) { return eval(linrep_v(), to_canonical(n)); }
BigInt l_linrep(const BigInt& n) { return eval(berstel_l(), to_canonical(n)); }

std::string join_counts(const BigInt& oracle, const BigInt& closure,
                        const BigInt& rec, const BigInt& closed,
                        const BigInt& lin) {
  std::string out = "factorization=" + oracle.str();
  out += " closure=" + closure.str();
  out += " recurrence=" + rec.str();
  out += " closed=" + closed.str();
  out += " linrep=" + lin.str();
  return out;
}

std::string five_way_detail_at(const BigInt& n, const PrefixIndex& index) {
  const RepresentationSet oracle = enumerate_valid_by_factorization(n, index);
  const RepresentationSet closure =
      enumerate_valid_by_closure(n, index.text.size());
  if (oracle.members != closure.members)
    return "oracle sets differ:\n" + oracle.lines() + "--\n" + closure.lines();
  const BigInt rec = v_recurrence(n);
  const BigInt closed = v_closed_form(n);
  const BigInt lin = v_linrep(n);
  const BigInt count = oracle.size();
  if (rec != count || closed != count || lin != count)
    return join_counts(count, closure.size(), rec, closed, lin);
  return {};
}

Disagreement smallest_failure(std::uint64_t max_n, std::size_t cap,
                              bool parallel,
                              const std::function<std::string(
                                  const BigInt&, const PrefixIndex&)>& probe) {
  const PrefixIndex index = build_prefix_index(max_n, cap);
  to_canonical(BigInt(max_n) + 1);
  std::vector<std::string> bad(max_n + 1);
  std::vector<char> has_bad(max_n + 1, 0);
  const std::int64_t limit = static_cast<std::int64_t>(max_n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t n = 0; n <= limit; ++n) {
      std::string detail = probe(BigInt(n), index);
      if (!detail.empty()) {
        bad[n] = std::move(detail);
        has_bad[n] = 1;
      }
    }
  } else {
    for (std::int64_t n = 0; n <= limit; ++n) {
      std::string detail = probe(BigInt(n), index);
      if (!detail.empty()) {
        bad[n] = std::move(detail);
        has_bad[n] = 1;
      }
    }
  }
  for (std::int64_t n = 0; n <= limit; ++n) {
    if (has_bad[n]) return {true, BigInt(n), bad[n]};
  }
  return {};
}

std::string structure_detail_at(const BigInt& n, const PrefixIndex& index) {
  const RepresentationSet valid = enumerate_valid_by_factorization(n, index);
  const RepresentationSet legal =
      enumerate_legal(n, index.text.size() + 1);
  for (const DigitString& member : legal.members) {
    if (!valid.contains(member.str()))
      return "0/1 representation " + member.str() + " not in the valid set";
  }
  const BigInt l_dp = l_count(n);
  const BigInt l_lin = l_linrep(n);
  if (l_dp != BigInt(legal.size()) || l_lin != BigInt(legal.size()))
    return "L mismatch: enumerated=" + std::to_string(legal.size()) +
           " dp=" + l_dp.str() + " linrep=" + l_lin.str();
  if (legal.size() > valid.size()) return "L above V";
  if (n > 0) {
    const bool is_a = symbol_at(n) == Sym::a;
    for (const DigitString& member : valid.members) {
      std::size_t zeros = 0;
      const auto& digits = member.digits();
      for (auto it = digits.rbegin(); it != digits.rend() && *it == 0; ++it)
        ++zeros;
      if ((zeros % 2 == 0) != is_a)
        return "member " + member.str() + " parity clashes with symbol";
      for (Digit d : digits)
        if (d > 3) return "digit above 3 in " + member.str();
    }
  }
  return {};
}

}  // namespace

std::vector<BigInt> v_closed_range_serial(const BigInt& from,
                                          std::size_t count) {
  return range_kernel(from, count, v_closed_form, false);
}
std::vector<BigInt> v_closed_range(const BigInt& from, std::size_t count) {
  return range_kernel(from, count, v_closed_form, true);
}

std::vector<BigInt> v_linrep_range_serial(const BigInt& from,
                                          std::size_t count) {
  return range_kernel(from, count, v_linrep, false);
}
std::vector<BigInt> v_linrep_range(const BigInt& from, std::size_t count) {
  return range_kernel(from, count, v_linrep, true);
}

std::vector<BigInt> l_linrep_range_serial(const BigInt& from,
                                          std::size_t count) {
  return range_kernel(from, count, l_linrep, false);
}
std::vector<BigInt> l_linrep_range(const BigInt& from, std::size_t count) {
  return range_kernel(from, count, l_linrep, true);
}

Disagreement five_way_agreement_serial(std::uint64_t max_n, std::size_t cap) {
  return smallest_failure(max_n, cap, false, five_way_detail_at);
}
Disagreement five_way_agreement(std::uint64_t max_n, std::size_t cap) {
  return smallest_failure(max_n, cap, true, five_way_detail_at);
}

Disagreement structure_sweep(std::uint64_t max_n, std::size_t cap) {
  return smallest_failure(max_n, cap, true, structure_detail_at);
}

namespace {

DigitString binary_string(int len, std::uint32_t bits) {
  std::vector<Digit> digits(len);
  for (int i = 0; i < len; ++i)
    digits[i] = static_cast<Digit>((bits >> (len - 1 - i)) & 1);
  return DigitString(std::move(digits));
}

IdentityFailure identity_probe(int len, std::uint32_t bits) {
  const DigitString x = binary_string(len, bits);
  const IdentityReport report = verify_identities(x);
  for (std::size_t i = 0; i < report.pass.size(); ++i) {
    if (!report.pass[i]) return {true, x.str(), IdentityReport::kNames[i]};
  }
  for (Digit d : {Digit{0}, Digit{1}}) {
    if (!verify_vector_recurrence(x, d))
      return {true, x.str(), std::string("matrix digit ") +
                                 static_cast<char>('0' + d)};
  }
  return {};
}

IdentityFailure identity_sweep_impl(int max_len, bool parallel) {
  std::vector<std::pair<int, std::uint32_t>> inputs;
  for (int len = 0; len <= max_len; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits)
      inputs.emplace_back(len, bits);
  std::vector<IdentityFailure> failures(inputs.size());
  const std::int64_t total = static_cast<std::int64_t>(inputs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < total; ++i)
      failures[i] = identity_probe(inputs[i].first, inputs[i].second);
  } else {
    for (std::int64_t i = 0; i < total; ++i)
      failures[i] = identity_probe(inputs[i].first, inputs[i].second);
  }
  for (const IdentityFailure& f : failures)
    if (f.found) return f;
  return {};
}

}  // namespace

IdentityFailure identity_sweep_serial(int max_len) {
  return identity_sweep_impl(max_len, false);
}
IdentityFailure identity_sweep(int max_len) {
  return identity_sweep_impl(max_len, true);
}

namespace {

Disagreement random_consistency_impl(std::size_t sample_count,
                                     const BigInt& max_n, std::uint64_t seed,
                                     bool parallel) {
  std::mt19937_64 rng(seed);
  const std::uint64_t hi = max_n.convert_to<std::uint64_t>();
  std::uniform_int_distribution<std::uint64_t> dist(1, hi);
  std::vector<BigInt> samples(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) samples[i] = dist(rng);
  std::vector<char> bad(sample_count, 0);
  const std::int64_t total = static_cast<std::int64_t>(sample_count);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < total; ++i)
      bad[i] = v_closed_form(samples[i]) != v_linrep(samples[i]) ? 1 : 0;
  } else {
    for (std::int64_t i = 0; i < total; ++i)
      bad[i] = v_closed_form(samples[i]) != v_linrep(samples[i]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < sample_count; ++i) {
    if (bad[i])
      return {true, samples[i],
              "closed=" + v_closed_form(samples[i]).str() +
                  " linrep=" + v_linrep(samples[i]).str()};
  }
  return {};
}

}  // namespace

Disagreement random_consistency_serial(std::size_t sample_count,
                                       const BigInt& max_n,
                                       std::uint64_t seed) {
  return random_consistency_impl(sample_count, max_n, seed, false);
}
Disagreement random_consistency(std::size_t sample_count, const BigInt& max_n,
                                std::uint64_t seed) {
  return random_consistency_impl(sample_count, max_n, seed, true);
}

Disagreement bridge_sweep(std::uint64_t max_n) {
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (symbol_at(n) != Sym::a) continue;
    if (!bridge_check(n))
      return {true, BigInt(n), "ceiling bridge fails at " + std::to_string(n)};
  }
  return {};
}

}  // namespace fibfact::sweep
