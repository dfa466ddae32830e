#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/linext.hpp"
#include "stanley/poset.hpp"

namespace stanley {

class CriticalityError : public std::runtime_error {
 public:
  enum class Kind { EmptyCollection, Undefined, NotEllSplitting };
  CriticalityError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Bit j set means polytope index j (0..k) is in the support.
using Support = std::uint32_t;

// Multiplicities kappa_j for the polytopes K_0..K_k.
struct CollectionDescriptor {
  std::vector<int> kappa;

  int size() const;  // sum of multiplicities
  Support support() const;
  friend bool operator==(const CollectionDescriptor&, const CollectionDescriptor&) = default;
};

// kappa_j = i_{j+1} - i_j - 1 - [j in {ell-1, ell}].
int canonical_multiplicity(int n, const ChainConfig& c, int j);
CollectionDescriptor canonical_collection(int n, const ChainConfig& c);

// Supports whose canonical multiplicities are all positive, in increasing mask order.
std::vector<Support> admissible_supports(int n, const ChainConfig& c);

// beta_i; empty for i outside 0..k.
ElementSet beta(const Poset& p, const ChainConfig& c, int i);
ElementSet beta_of(const Poset& p, const ChainConfig& c, Support s);

// Span formula: n - k minus the alpha-elements strictly inside each gap of the support.
int support_dim(const Poset& p, const ChainConfig& c, Support s);
int collection_dim(const Poset& p, const ChainConfig& c, const CollectionDescriptor& K);

// Dimension form: dim >= |K'| + excess for every admissible support at full multiplicity.
bool dimension_condition(const Poset& p, const ChainConfig& c, int excess);
// The equivalent counting form stated directly on the poset.
bool inequality_condition(const Poset& p, const ChainConfig& c, int excess);

// Every splitting pair leaves at least `slack` free slots:
// |abar_{>x_{r+1},<x_s}| <= i_s - i_{r+1} - slack, sentinels included.
bool slack_bound(const Poset& p, const ChainConfig& c, int slack);
// K critical (dimension excess 1) and slack 2 on every splitting pair: the
// standing assumption under which the extreme-direction and mixed-element
// results are proved.
bool critical_regime(const Poset& p, const ChainConfig& c);

enum class CriticalityClass { Supercritical, CriticalNotSuper, SubcriticalOnly, NotSubcritical };
std::string_view class_name(CriticalityClass c);

// Evaluates the conditions without checking |N_=| > 0.
CriticalityClass criticality_class(const Poset& p, const ChainConfig& c);
// Throws Undefined when |N_=| = 0.
CriticalityClass classify(const Poset& p, const ChainConfig& c);

struct SplittingPair {
  int r = 0;
  int s = 0;
  friend bool operator==(const SplittingPair&, const SplittingPair&) = default;
  friend auto operator<=>(const SplittingPair&, const SplittingPair&) = default;
};

// Pairs with 0 <= r+1 < s <= k+1 and (r+1, s) != (0, k+1), ordered by (r, s).
std::vector<SplittingPair> splitting_pairs(const ChainConfig& c);
bool is_ell_splitting(const ChainConfig& c, SplittingPair pr);
std::vector<SplittingPair> ell_splitting_pairs(const ChainConfig& c);

// Index set {0..r} u {s..k}. Indices whose canonical multiplicity is zero stay in,
// so the dimension is |beta_{[0,r] u [s,k]}| even outside the critical regime.
Support pair_support(const ChainConfig& c, SplittingPair pr);
// dim minus size of the collection (K_0..K_r, K_s..K_k).
int pair_excess(const Poset& p, const ChainConfig& c, SplittingPair pr);

enum class PairClass { Supercritical, SharpCritical, Other };
std::string_view pair_class_name(PairClass c);
PairClass pair_criticality(const Poset& p, const ChainConfig& c, SplittingPair pr);

std::vector<SplittingPair> sharp_critical_pairs(const Poset& p, const ChainConfig& c);

struct MaximalPair {
  SplittingPair pair;
  ElementSet beta_max;    // beta over [0, r_max] u [s_min, k]
  ElementSet remainder;  // alpha strictly between x_{r_max+1} and x_{s_min}
};
std::optional<MaximalPair> maximal_splitting_pair(const Poset& p, const ChainConfig& c);

// y in beta_r u beta_s placed in [i_{r+1}, i_s] on a slot not held by x_{r+1}..x_s.
ElementSet mixed_elements(const Poset& p, const ChainConfig& c, const LinearExtension& sigma, SplittingPair pr);

}  // namespace stanley
