#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stanley {

using Mask = std::uint64_t;
inline constexpr int kMaxElements = 64;

inline constexpr Mask bit(int id) { return Mask{1} << id; }
inline constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

// A subset of element ids, stored as a bitmask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}
  static ElementSet of(std::initializer_list<int> ids);

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(int id) const { return (bits_ >> id) & 1U; }
  int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  void insert(int id) { bits_ |= bit(id); }
  void erase(int id) { bits_ &= ~bit(id); }
  std::vector<int> to_vector() const;
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

 private:
  Mask bits_ = 0;
};

class PosetError : public std::runtime_error {
 public:
  enum class Kind { CycleDetected, OutOfRange, TooLarge };
  PosetError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Strict partial order on ids 0..n-1, kept transitively closed.
class Poset {
 public:
  Poset() = default;

  // Transitive closure of the given pairs (a,b) meaning a<b.
  static Poset build(int n, const std::vector<std::pair<int, int>>& relations);
  // Trusts that `up` is already a transitively closed strict order.
  static Poset from_closed_rows(std::vector<Mask> up);

  int size() const { return n_; }
  ElementSet all() const { return ElementSet(low_bits(n_)); }
  bool less(int a, int b) const { return (up_[a] >> b) & 1U; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  // {b : a < b} and {b : b < a}.
  Mask above(int a) const { return up_[a]; }
  Mask below(int a) const { return down_[a]; }

  std::vector<std::pair<int, int>> relations() const;
  std::vector<std::pair<int, int>> cover_relations() const;
  int relation_count() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

// An element or one of the two virtual sentinels x_0 (bottom) and x_{k+1} (top).
struct Endpoint {
  enum class Kind { Bottom, Element, Top };
  Kind kind = Kind::Element;
  int id = -1;

  static constexpr Endpoint bottom() { return {Kind::Bottom, -1}; }
  static constexpr Endpoint top() { return {Kind::Top, -1}; }
  static constexpr Endpoint element(int id) { return {Kind::Element, id}; }
};

// {z : a < z < b}, with the bottom sentinel below and the top sentinel above everything.
ElementSet between(const Poset& p, Endpoint a, Endpoint b);

bool covers(const Poset& p, int a, int b);

// The chain x_1<...<x_k with target positions and the distinguished index.
// `ell` is 1-based; ell == 0 marks a configuration without a distinguished
// element, which only supports counting.
struct ChainConfig {
  std::vector<int> chain;
  std::vector<int> positions;
  int ell = 0;

  int k() const { return static_cast<int>(chain.size()); }
  bool has_ell() const { return ell != 0; }
  int x(int j) const { return chain.at(j - 1); }
  // i_j for j in 0..k+1, with i_0 = 0 and i_{k+1} = n+1.
  int position(int j, int n) const;
  Endpoint point(int j) const;
  ElementSet chain_set() const;

  friend bool operator==(const ChainConfig&, const ChainConfig&) = default;
};

struct ConfigCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

ConfigCheck validate_config(const Poset& p, const ChainConfig& c);

// The non-chain elements.
ElementSet alpha(const Poset& p, const ChainConfig& c);

// A poset together with its chain configuration and display labels.
struct Instance {
  Poset poset;
  ChainConfig config;
  std::vector<std::string> labels;

  std::string label(int id) const;
  int n() const { return poset.size(); }
};

}  // namespace stanley
