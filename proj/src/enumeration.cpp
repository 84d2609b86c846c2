#include "fibfact/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "fibfact/errors.hpp"

namespace fibfact {

bool RepresentationSet::contains(std::string_view rep) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const DigitString& d) { return d.str() == rep; });
}

std::string RepresentationSet::lines() const {
  std::string out;
  for (const DigitString& d : members) {
    out += d.str();
    out += '\n';
  }
  return out;
}

PrefixIndex build_prefix_index(std::uint64_t n, std::size_t cap) {
  PrefixIndex index;
  index.text = fib_prefix(n, cap);
  const std::string& s = index.text;
  const std::size_t len = s.size();
  index.lcp.assign(len, 0);
  if (len > 0) index.lcp[0] = static_cast<std::uint32_t>(len);
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t k = 0;
    if (i < r) k = std::min(r - i, static_cast<std::size_t>(index.lcp[i - l]));
    while (i + k < len && s[k] == s[i + k]) ++k;
    index.lcp[i] = static_cast<std::uint32_t>(k);
    if (i + k > r) {
      l = i;
      r = i + k;
    }
  }
  return index;
}

namespace {

// Word lengths F_{j+2} for orders 0..top, plus how much value the orders
// 0..j can still contribute at multiplicity 3.
struct OrderTable {
  std::vector<std::uint64_t> len;
  std::vector<std::uint64_t> reach;
};

OrderTable make_order_table(int top) {
  OrderTable t;
  t.len.resize(top + 1);
  t.reach.resize(top + 1);
  std::uint64_t lo = 1, hi = 2, total = 0;
  for (int j = 0; j <= top; ++j) {
    t.len[j] = lo;
    total += 3 * lo;
    t.reach[j] = total;
    std::uint64_t next = lo + hi;
    lo = hi;
    hi = next;
  }
  return t;
}

void sort_members(RepresentationSet& set) {
  std::sort(set.members.begin(), set.members.end());
}

struct FactorizationSearch {
  const PrefixIndex& index;
  std::uint64_t target;
  int top;
  OrderTable orders;
  std::vector<Digit> digit;  // digit[j] = multiplicity of order j
  RepresentationSet* out = nullptr;

  void run(RepresentationSet* sink) {
    out = sink;
    digit.assign(top + 1, 0);
    descend(0, top);
  }

  void descend(std::uint64_t pos, int j) {
    if (j < 0) {
      if (pos == target) emit();
      return;
    }
    const std::uint64_t rem = target - pos;
    if (rem > orders.reach[j]) return;
    const std::uint64_t len = orders.len[j];
    for (Digit k = 0;; ++k) {
      digit[j] = k;
      descend(pos + k * len, j - 1);
      if (k == 3) break;
      const std::uint64_t next_end = pos + (k + 1) * len;
      if (next_end > target) break;
      if (!index.prefix_matches_at(pos + k * len, len)) break;
    }
    digit[j] = 0;
  }

  void emit() {
    std::vector<Digit> msb_first(digit.rbegin(), digit.rend());
    out->members.push_back(DigitString(std::move(msb_first)).normalized());
  }
};

std::uint64_t bounded_u64(const BigInt& n, std::uint64_t bound,
                          const char* what) {
  if (n < 0) throw PreconditionViolated(std::string(what) + ": negative");
  if (n > bound) throw ResourceBound(std::string(what) + ": bound exceeded");
  return n.convert_to<std::uint64_t>();
}

}  // namespace

RepresentationSet enumerate_legal(const BigInt& n, std::uint64_t budget) {
  RepresentationSet set{n, RepKind::legal, {}};
  const std::uint64_t target = bounded_u64(n, budget, "enumerate_legal");
  if (target == 0) {
    set.members.push_back(DigitString{});
    return set;
  }
  const int top = static_cast<int>(to_canonical(n).size()) - 1;
  const OrderTable orders = make_order_table(top);
  std::vector<Digit> digit(top + 1, 0);

  auto emit = [&](int open_below) {
    std::vector<Digit> msb;
    msb.reserve(top + 1);
    for (int q = top; q > open_below; --q) msb.push_back(digit[q]);
    msb.insert(msb.end(), static_cast<std::size_t>(open_below + 1), 0);
    set.members.push_back(DigitString(std::move(msb)).normalized());
  };
  auto descend = [&](auto&& self, std::uint64_t rem, int j) -> void {
    if (rem == 0) {
      emit(j);
      return;
    }
    if (j < 0 || rem > orders.reach[j]) return;
    digit[j] = 0;
    self(self, rem, j - 1);
    if (orders.len[j] <= rem) {
      digit[j] = 1;
      self(self, rem - orders.len[j], j - 1);
      digit[j] = 0;
    }
  };
  descend(descend, target, top);
  sort_members(set);
  return set;
}

RepresentationSet enumerate_valid_by_factorization(const BigInt& n,
                                                   const PrefixIndex& index) {
  RepresentationSet set{n, RepKind::valid, {}};
  const std::uint64_t target =
      bounded_u64(n, index.text.size(), "enumerate_valid_by_factorization");
  if (target == 0) {
    set.members.push_back(DigitString{});
    return set;
  }
  const int top = static_cast<int>(to_canonical(n).size()) - 1;
  FactorizationSearch search{index, target, top, make_order_table(top), {}, nullptr};
  search.run(&set);
  sort_members(set);
  return set;
}

RepresentationSet enumerate_valid_by_factorization(const BigInt& n,
                                                   std::size_t cap) {
  if (n > cap) throw ResourceBound("enumerate_valid_by_factorization: cap");
  const PrefixIndex index =
      build_prefix_index(n.convert_to<std::uint64_t>(), cap);
  return enumerate_valid_by_factorization(n, index);
}

RepresentationSet enumerate_valid_by_closure(const BigInt& n,
                                             std::size_t cap) {
  RepresentationSet set{n, RepKind::valid, {}};
  const std::uint64_t target = bounded_u64(n, cap, "enumerate_valid_by_closure");
  if (target == 0) {
    set.members.push_back(DigitString{});
    return set;
  }
  const CanonicalRep canon = to_canonical(n);
  const std::size_t width = canon.size();

  std::unordered_set<std::string> seen{canon.str()};
  std::deque<std::string> frontier{canon.str()};
  while (!frontier.empty()) {
    const std::string state = std::move(frontier.front());
    frontier.pop_front();
    std::vector<Digit> padded(width - state.size(), 0);
    for (char c : state) padded.push_back(static_cast<Digit>(c - '0'));
    const DigitString current{std::move(padded)};
    DigitString next;
    for (std::size_t p = 0; p + 2 < width; ++p) {
      for (RuleDirection dir :
           {RuleDirection::forward, RuleDirection::backward}) {
        if (!try_apply_rule(current, p, dir, next)) continue;
        std::string key = next.str();
        if (seen.insert(key).second) frontier.push_back(std::move(key));
      }
    }
  }
  set.members.reserve(seen.size());
  for (const std::string& s : seen)
    set.members.push_back(DigitString::parse(s));
  sort_members(set);
  return set;
}

BigInt count_min_index(const BigInt& n, std::uint32_t min_order,
                       std::size_t cap) {
  if (n > cap) throw ResourceBound("count_min_index: cap");
  const std::uint64_t target = bounded_u64(n, cap, "count_min_index");
  if (target == 0) return 1;
  const int top = static_cast<int>(to_canonical(n).size()) - 1;
  if (static_cast<int>(min_order) > top) return 0;
  const PrefixIndex index = build_prefix_index(target, cap);
  const OrderTable orders = make_order_table(top);
  const int floor_order = static_cast<int>(min_order);

  std::unordered_map<std::uint64_t, BigInt> memo;
  auto key = [](std::uint64_t pos, int j) {
    return (pos << 8) | static_cast<std::uint64_t>(j + 1);
  };
  auto count = [&](auto&& self, std::uint64_t pos, int j) -> BigInt {
    if (j < floor_order) return pos == target ? 1 : 0;
    const std::uint64_t rem = target - pos;
    if (rem > orders.reach[j]) return 0;
    const auto it = memo.find(key(pos, j));
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    const std::uint64_t len = orders.len[j];
    for (Digit k = 0;; ++k) {
      total += self(self, pos + k * len, j - 1);
      if (k == 3) break;
      const std::uint64_t next_end = pos + (k + 1) * len;
      if (next_end > target) break;
      if (!index.prefix_matches_at(pos + k * len, len)) break;
    }
    memo.emplace(key(pos, j), total);
    return total;
  };
  return count(count, 0, top);
}

}  // namespace fibfact
