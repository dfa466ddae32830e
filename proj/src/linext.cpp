#include "stanley/linext.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace stanley {

namespace {

// Up to 20 elements every count is at most 20! < 2^63, so machine words suffice.
constexpr int kWordCountLimit = 20;

struct PinLayout {
  std::vector<int> pin;    // element -> position or 0
  std::vector<int> owner;  // position (1..n) -> element or -1
  bool consistent = true;
};

PinLayout layout(const Poset& p, const Pins& pins) {
  const int n = p.size();
  if (static_cast<int>(pins.size()) != n) throw std::invalid_argument("pin vector length differs from poset size");
  PinLayout out;
  out.pin = pins;
  out.owner.assign(n + 2, -1);
  for (int e = 0; e < n; ++e) {
    int q = pins[e];
    if (q == 0) continue;
    if (q < 1 || q > n || out.owner[q] != -1) {
      out.consistent = false;
      continue;
    }
    out.owner[q] = e;
  }
  return out;
}

// Elements that may occupy position |placed|+1 next.
template <typename F>
void for_each_candidate(const Poset& p, const PinLayout& lay, Mask placed, F&& f) {
  const int pos = std::popcount(placed) + 1;
  const int forced = lay.owner[pos];
  if (forced >= 0) {
    if (!((placed >> forced) & 1U) && (p.below(forced) & ~placed) == 0) f(forced);
    return;
  }
  for (Mask free = low_bits(p.size()) & ~placed; free != 0; free &= free - 1) {
    int e = std::countr_zero(free);
    if (lay.pin[e] == 0 && (p.below(e) & ~placed) == 0) f(e);
  }
}

// Number of ways to complete a placed prefix, memoized on the prefix set.
template <typename T>
class Completions {
 public:
  Completions(const Poset& p, const PinLayout& lay) : p_(p), lay_(lay), full_(low_bits(p.size())) {}

  T operator()(Mask placed) {
    if (placed == full_) return T(1);
    auto it = memo_.find(placed);
    if (it != memo_.end()) return it->second;
    T total(0);
    for_each_candidate(p_, lay_, placed, [&](int e) { total += (*this)(placed | bit(e)); });
    memo_.emplace(placed, total);
    return total;
  }

 private:
  const Poset& p_;
  const PinLayout& lay_;
  Mask full_;
  std::unordered_map<Mask, T> memo_;
};

template <typename T>
BigInt count_impl(const Poset& p, const PinLayout& lay) {
  Completions<T> completions(p, lay);
  return BigInt(completions(0));
}

template <typename T>
void pair_counts_impl(const Poset& p, const PinLayout& lay, int first_slot, std::pair<int, int> slots,
                      std::map<std::pair<int, int>, BigInt>& out) {
  // Prefixes filling positions 1..first_slot-1, with their multiplicities.
  std::unordered_map<Mask, T> layer{{Mask{0}, T(1)}};
  for (int pos = 1; pos < first_slot; ++pos) {
    std::unordered_map<Mask, T> next;
    for (const auto& [placed, ways] : layer) {
      for_each_candidate(p, lay, placed, [&](int e) { next[placed | bit(e)] += ways; });
    }
    layer = std::move(next);
  }
  Completions<T> completions(p, lay);
  std::map<std::pair<int, int>, T> acc;
  for (const auto& [placed, ways] : layer) {
    // Fill the three slots first_slot..first_slot+2 explicitly.
    int chosen[3];
    auto fill = [&](auto&& self, Mask m, int depth) -> void {
      if (depth == 3) {
        T rest = completions(m);
        if (rest == T(0)) return;
        int a = chosen[slots.first - first_slot];
        int b = chosen[slots.second - first_slot];
        acc[{a, b}] += ways * rest;
        return;
      }
      for_each_candidate(p, lay, m, [&](int e) {
        chosen[depth] = e;
        self(self, m | bit(e), depth + 1);
      });
    };
    fill(fill, placed, 0);
  }
  for (const auto& [key, value] : acc) out[key] += BigInt(value);
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Minus:
      return "minus";
    case Variant::Equal:
      return "equal";
    case Variant::Plus:
      return "plus";
  }
  return "?";
}

std::vector<int> LinearExtension::word() const {
  std::vector<int> w(placement.size(), -1);
  for (std::size_t e = 0; e < placement.size(); ++e) w[placement[e] - 1] = static_cast<int>(e);
  return w;
}

int LinearExtension::at(int pos) const {
  for (std::size_t e = 0; e < placement.size(); ++e) {
    if (placement[e] == pos) return static_cast<int>(e);
  }
  return -1;
}

Pins variant_pins(const Poset& p, const ChainConfig& c, Variant v) {
  Pins pins(p.size(), 0);
  for (int j = 1; j <= c.k(); ++j) {
    int pos = c.position(j, p.size());
    if (j == c.ell) pos += offset(v);
    pins[c.x(j)] = pos;
  }
  return pins;
}

BigInt count_with_pins(const Poset& p, const Pins& pins) {
  PinLayout lay = layout(p, pins);
  if (!lay.consistent) return 0;
  if (p.size() <= kWordCountLimit) return count_impl<std::uint64_t>(p, lay);
  return count_impl<BigInt>(p, lay);
}

void for_each_with_pins(const Poset& p, const Pins& pins, const ExtensionVisitor& visit) {
  PinLayout lay = layout(p, pins);
  if (!lay.consistent) return;
  const int n = p.size();
  // Feasibility only, so saturating machine counts are not needed: any
  // nonzero completion count proves the prefix extends.
  std::unordered_map<Mask, bool> viable;
  const Mask full = low_bits(n);
  auto extends = [&](auto&& self, Mask placed) -> bool {
    if (placed == full) return true;
    auto it = viable.find(placed);
    if (it != viable.end()) return it->second;
    bool ok = false;
    for_each_candidate(p, lay, placed, [&](int e) { ok = ok || self(self, placed | bit(e)); });
    viable.emplace(placed, ok);
    return ok;
  };
  if (!extends(extends, 0)) return;

  LinearExtension sigma;
  sigma.placement.assign(n, 0);
  bool stop = false;
  auto dfs = [&](auto&& self, Mask placed) -> void {
    if (placed == full) {
      stop = !visit(sigma);
      return;
    }
    const int pos = std::popcount(placed) + 1;
    for_each_candidate(p, lay, placed, [&](int e) {
      if (stop) return;
      Mask next = placed | bit(e);
      if (!extends(extends, next)) return;
      sigma.placement[e] = pos;
      self(self, next);
      sigma.placement[e] = 0;
    });
  };
  dfs(dfs, 0);
}

BigInt count(const Poset& p, const ChainConfig& c, Variant v) { return count_with_pins(p, variant_pins(p, c, v)); }

void for_each_extension(const Poset& p, const ChainConfig& c, Variant v, const ExtensionVisitor& visit) {
  for_each_with_pins(p, variant_pins(p, c, v), visit);
}

std::vector<LinearExtension> enumerate(const Poset& p, const ChainConfig& c, Variant v) {
  std::vector<LinearExtension> out;
  for_each_extension(p, c, v, [&](const LinearExtension& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::pair<int, int> companion_slots(const ChainConfig& c, Variant v) {
  if (!c.has_ell()) throw std::invalid_argument("companions need a distinguished chain element");
  const int i = c.positions.at(c.ell - 1);
  switch (v) {
    case Variant::Minus:
      return {i, i + 1};
    case Variant::Equal:
      return {i - 1, i + 1};
    case Variant::Plus:
      return {i - 1, i};
  }
  return {0, 0};
}

Companions companions(const LinearExtension& sigma, const ChainConfig& c, Variant v) {
  auto [lo, hi] = companion_slots(c, v);
  return {sigma.at(lo), sigma.at(hi)};
}

std::vector<CompanionPairCount> companion_pair_counts(const Poset& p, const ChainConfig& c, Variant v) {
  const auto slots = companion_slots(c, v);
  const int first_slot = c.positions.at(c.ell - 1) - 1;
  PinLayout lay = layout(p, variant_pins(p, c, v));
  std::map<std::pair<int, int>, BigInt> acc;
  if (lay.consistent) {
    if (p.size() <= kWordCountLimit) {
      pair_counts_impl<std::uint64_t>(p, lay, first_slot, slots, acc);
    } else {
      pair_counts_impl<BigInt>(p, lay, first_slot, slots, acc);
    }
  }
  std::vector<CompanionPairCount> out;
  out.reserve(acc.size());
  for (auto& [key, value] : acc) out.push_back({key.first, key.second, std::move(value)});
  return out;
}

BigInt DecompositionTable::total(Variant v) const {
  BigInt sum = 0;
  for (const auto& row : cells[index_of(v)]) {
    for (const auto& cell : row) sum += cell;
  }
  return sum;
}

DecompositionTable decompose(const Poset& p, const ChainConfig& c) {
  DecompositionTable table;
  const int xl = c.x(c.ell);
  auto rel = [&](int y) { return p.comparable(y, xl) ? Rel::Comparable : Rel::Incomparable; };
  for (Variant v : kVariants) {
    for (const auto& pc : companion_pair_counts(p, c, v)) table.at(v, rel(pc.lower), rel(pc.upper)) += pc.count;
  }
  return table;
}

std::vector<BigInt> a_sequence(const Poset& p, int x) {
  std::vector<BigInt> out;
  Pins pins(p.size(), 0);
  for (int i = 1; i <= p.size(); ++i) {
    pins[x] = i;
    out.push_back(count_with_pins(p, pins));
  }
  return out;
}

}  // namespace stanley
