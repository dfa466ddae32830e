#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stanley/criticality.hpp"
#include "stanley/linext.hpp"
#include "stanley/poset.hpp"

namespace stanley {

class TransformError : public std::runtime_error {
 public:
  enum class Kind { NoExtensions, EllOnBoundary, NotSplitting, Sandwich };
  TransformError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct ClosureResult {
  Poset closed;
  // Relations of the closed poset missing from the input, all of them and
  // those that are cover relations of the closed poset.
  std::vector<std::pair<int, int>> added_relations;
  std::vector<std::pair<int, int>> added_covers;
};

// w < z exactly when every extension in N_- u N_= u N_+ places w before z.
// Decided per pair by asking whether the reversed pair still admits an extension.
ClosureResult closure(const Poset& p, const ChainConfig& c);

struct SplitPart {
  Poset poset;
  ChainConfig config;
  std::vector<int> origin;  // part element -> parent element, -1 for the compressed element
};

struct SplitResult {
  SplitPart part1;  // abar_{>=x_{r+1}, <=x_s}
  SplitPart part2;  // the rest plus the compressed element
  int compressed = -1;
  int split_case = 0;  // 1 when x_ell lies strictly inside the interval, 2 otherwise
  bool rigid = false;  // part1 exactly fills the slots it is pinned across
};

// Part1 positions are 1-based: x_j goes to i_j - lo + 1 with lo = i_{r+1} (1 at the
// bottom sentinel). Part2 pins the compressed element at lo and shifts the tail by hi - lo.
SplitResult split(const Poset& p, const ChainConfig& c, SplittingPair pr);

struct VariantCounts {
  std::array<BigInt, 3> n;  // minus, equal, plus
  const BigInt& operator[](Variant v) const { return n[index_of(v)]; }
  bool equality() const { return n[1] * n[1] == n[0] * n[2]; }
};
VariantCounts variant_counts(const Poset& p, const ChainConfig& c);

struct SplitReport {
  SplittingPair pair;
  int split_case = 0;
  bool rigid = false;
  VariantCounts parent, part1, part2;
  bool parent_equality = false;
  bool parts_equality = false;
  // Only meaningful when rigid.
  bool product_identity = false;
  // Parent equality implies parts equality or an interval with two free slots.
  bool claim_holds = true;
};

SplitReport verify_split_reduction(const Poset& p, const ChainConfig& c, SplittingPair pr);

// A splitting pair read off a sharp-subcritical sub-collection of K, if K has one:
// consecutive support indices r < s with a gap between them that is exactly full.
std::optional<SplittingPair> subcritical_split_pair(const Poset& p, const ChainConfig& c);

}  // namespace stanley
