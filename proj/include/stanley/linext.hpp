#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stanley/poset.hpp"

namespace stanley {

using BigInt = boost::multiprecision::cpp_int;

enum class Variant { Minus, Equal, Plus };
inline constexpr std::array<Variant, 3> kVariants = {Variant::Minus, Variant::Equal, Variant::Plus};

constexpr int offset(Variant v) { return v == Variant::Plus ? 1 : (v == Variant::Minus ? -1 : 0); }
constexpr int index_of(Variant v) { return static_cast<int>(v); }
std::string_view variant_name(Variant v);  // "minus", "equal", "plus"

// placement[e] is the 1-based position of element e.
struct LinearExtension {
  std::vector<int> placement;

  int size() const { return static_cast<int>(placement.size()); }
  // word()[pos-1] is the element at position pos.
  std::vector<int> word() const;
  int at(int pos) const;

  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

// pins[e] is the forced position of e, or 0 when e is free.
using Pins = std::vector<int>;

// x_j at i_j for j != ell and x_ell at i_ell + offset(v). With ell == 0 every
// chain element sits at its own position and `v` is ignored.
Pins variant_pins(const Poset& p, const ChainConfig& c, Variant v);

BigInt count_with_pins(const Poset& p, const Pins& pins);

// Visits extensions in lexicographic order of their words; the visitor
// returns false to stop early.
using ExtensionVisitor = std::function<bool(const LinearExtension&)>;
void for_each_with_pins(const Poset& p, const Pins& pins, const ExtensionVisitor& visit);

BigInt count(const Poset& p, const ChainConfig& c, Variant v);
void for_each_extension(const Poset& p, const ChainConfig& c, Variant v, const ExtensionVisitor& visit);
std::vector<LinearExtension> enumerate(const Poset& p, const ChainConfig& c, Variant v);

// Slots among i_ell-1, i_ell, i_ell+1 not taken by x_ell, lower first.
std::pair<int, int> companion_slots(const ChainConfig& c, Variant v);

struct Companions {
  int lower = -1;
  int upper = -1;
};
Companions companions(const LinearExtension& sigma, const ChainConfig& c, Variant v);

enum class Rel { Incomparable = 0, Comparable = 1 };

struct CompanionPairCount {
  int lower;
  int upper;
  BigInt count;
};
// Number of extensions in N_v for each ordered companion pair that occurs.
std::vector<CompanionPairCount> companion_pair_counts(const Poset& p, const ChainConfig& c, Variant v);

struct DecompositionTable {
  // cells[variant][lower rel][upper rel]
  std::array<std::array<std::array<BigInt, 2>, 2>, 3> cells{};

  BigInt& at(Variant v, Rel lower, Rel upper) {
    return cells[index_of(v)][static_cast<int>(lower)][static_cast<int>(upper)];
  }
  const BigInt& at(Variant v, Rel lower, Rel upper) const {
    return cells[index_of(v)][static_cast<int>(lower)][static_cast<int>(upper)];
  }
  BigInt total(Variant v) const;
};

DecompositionTable decompose(const Poset& p, const ChainConfig& c);

// a_i = #{sigma : sigma(x) = i} for i = 1..n (index 0 of the result is a_1).
std::vector<BigInt> a_sequence(const Poset& p, int x);

}  // namespace stanley
