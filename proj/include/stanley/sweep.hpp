#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stanley/criticality.hpp"
#include "stanley/extremal.hpp"
#include "stanley/poset.hpp"

namespace stanley {

class SweepError : public std::runtime_error {
 public:
  enum class Kind { CapExceeded, BadSpec };
  SweepError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// One property suite per theorem family. Each is evaluated per instance.
enum class Suite {
  Stanley,           // |N_=|^2 >= |N_-||N_+|
  Trivial,           // witness pair exists iff |N_=| = 0
  Identities,        // companion cell identities
  Characterization,  // equality <=> balance <=> (iii) per class
  Posetchar,         // poset-side condition <=> supercritical (iii), on the closure
  KTwo,              // k <= 2 equality => supercritical (iii)
  Range,             // placement formula versus enumeration
  CritEquiv,         // dimension form <=> inequality form, excess 0, 1, 2
  Mixed,             // exact mixed-element counts
  MaxPair,           // maximal splitting pair: sharp, dominating, unique mixed element
  Closure,           // same extension sets, idempotent
  Split,             // product identity on rigid pairs, split claim
  Volume,            // count / mixed-volume identity and Alexandrov-Fenchel
  MvPos,             // mixed volume positive <=> dimension condition
  Dirs,              // certified directions pass the extremality rank test
};
inline constexpr int kSuiteCount = 15;
std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

using SuiteMask = std::uint32_t;
inline constexpr SuiteMask suite_bit(Suite s) { return SuiteMask{1} << static_cast<int>(s); }
inline constexpr SuiteMask kAllSuites = (SuiteMask{1} << kSuiteCount) - 1;
// Comma-separated suite names, or "all".
SuiteMask parse_suites(std::string_view list);

// How the posets of each size are produced.
enum class Labeling {
  Labeled,    // every labeled poset (n <= 6)
  Natural,    // naturally labeled posets: a < b only when a < b as ids; every isomorphism class appears
  Signature,  // natural, keeping one poset per degree/cover signature (best effort, not canonical)
};
std::string_view labeling_name(Labeling l);

struct SweepSpec {
  int n_min = 1;
  int n_max = 6;
  int k_min = 1;
  int k_max = -1;                   // -1: no limit
  std::vector<int> fixed_positions;  // empty: every valid position vector
  Labeling labeling = Labeling::Natural;
  SuiteMask suites = kAllSuites;
  int jobs = 1;
  bool auto_closure = true;
  int exhaustive_limit = 6;  // sizes above this are sampled
  long long samples = 100000;
  std::uint64_t seed = 0;
  int max_n = 7;
};
nlohmann::json spec_to_json(const SweepSpec& spec);

struct Anomaly {
  Suite suite;
  std::string detail;
};

struct DirStats {
  int certified = 0;
  int failures = 0;
  bool critical_regime = false;
};

struct Finding {
  Instance instance;
  VariantCounts counts;
  StanleyRelation relation = StanleyRelation::Degenerate;
  std::optional<SplittingPair> witness;
  // Present when |N_=| > 0.
  std::optional<CriticalityClass> cls;
  std::optional<bool> supercritical_iii, critical_iii, posetchar;
  DirStats dirs;
  SuiteMask evaluated = 0;
  std::vector<Anomaly> anomalies;

  bool anomaly() const { return !anomalies.empty(); }
  // Equality that the supercritical mechanism does not explain.
  bool sharp() const { return relation == StanleyRelation::Equality && critical_iii == true && supercritical_iii == false; }
};
nlohmann::json finding_to_json(const Finding& f);

Finding evaluate(const Poset& p, const ChainConfig& c, SuiteMask suites, bool auto_closure = true);

struct SuiteTally {
  long long instances = 0;
  long long anomalous = 0;
};

struct SweepSummary {
  long long posets = 0;
  long long instances = 0;
  long long with_equal = 0;  // |N_=| > 0
  long long equality = 0;
  long long sharp = 0;
  long long anomalous = 0;
  long long k2_equality = 0;  // k <= 2 equality instances checked for supercritical (iii)
  std::map<int, long long> by_n;
  std::array<SuiteTally, kSuiteCount> suites{};
  DirStats dirs_all;  // summed certified / failures
  long long regime_instances = 0;
  long long regime_certified = 0;
  long long regime_failures = 0;

  void add(const Finding& f);
};
nlohmann::json summary_to_json(const SweepSummary& s);

// Visits every valid (chain, positions, ell) of p with k_min <= k <= k_max, in
// a fixed order: chains grow by id, positions increase lexicographically, ell last.
void for_each_valid_config(const Poset& p, int k_min, int k_max, const std::function<void(const ChainConfig&)>& f);

// The posets of size n in generation order for the given labeling.
std::vector<Poset> enumerate_posets(int n, Labeling labeling);

// A random naturally labeled poset with a random valid configuration, |N_=| > 0
// whenever one is found within a bounded number of draws.
std::pair<Poset, ChainConfig> sample_instance(int n, int k_min, int k_max, std::mt19937_64& rng);

// Findings reach `sink` in the same order for every worker count: sizes
// ascending, posets in generation order, configurations in for_each_valid_config
// order; sampled sizes follow the sample index. Throws CapExceeded when n_max
// exceeds max_n.
SweepSummary sweep(const SweepSpec& spec, const std::function<void(const Finding&)>& sink);

}  // namespace stanley
