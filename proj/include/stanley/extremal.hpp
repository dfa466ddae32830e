#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/criticality.hpp"
#include "stanley/linext.hpp"
#include "stanley/poset.hpp"
#include "stanley/transforms.hpp"

namespace stanley {

enum class StanleyRelation { Strict, Equality, Degenerate };
std::string_view relation_name(StanleyRelation r);  // "strict", "equality", "degenerate"

struct StanleyVerdict {
  VariantCounts counts;
  StanleyRelation relation = StanleyRelation::Degenerate;
  // |N_=|^2 >= |N_-| |N_+|, evaluated rather than assumed.
  bool inequality_holds = true;
};

StanleyVerdict stanley_verdict(const Poset& p, const ChainConfig& c);

// Splitting pair whose open interval holds more elements than the slots between
// its endpoints, preferring the narrowest one. Present exactly when |N_=| = 0.
std::optional<SplittingPair> trivial_witness(const Poset& p, const ChainConfig& c);

struct CharacterizationReport {
  int k = 0;
  bool closure_applied = false;
  std::vector<std::pair<int, int>> closure_added;  // cover relations added by the closure
  CriticalityClass cls = CriticalityClass::NotSubcritical;
  VariantCounts counts;
  DecompositionTable cells;

  bool equality = false;  // |N_=|^2 = |N_-| |N_+|
  bool balance = false;   // |N_-| = |N_=| = |N_+|
  // Neither companion is ever comparable to x_ell.
  bool supercritical_iii = false;
  // Never two comparable companions, one-sided counts equal to a common N1 and
  // both-incomparable counts equal to a common N2 across the three sets.
  bool critical_iii = false;
  std::optional<BigInt> n1, n2;
  // Whenever exactly one companion is comparable to x_ell, the two companions
  // are incomparable to each other.
  bool companion_incomparability = false;
  bool posetchar = false;
};

// Requires |N_=| > 0 (CriticalityError::Undefined otherwise). By default the
// analysis runs on the closure; the counts and sets are unchanged by it.
CharacterizationReport characterize(const Poset& p, const ChainConfig& c, bool auto_closure = true);

// Poset-side form of supercritical_iii. Every non-chain y < x_ell needs some
// x_s above it with |{z : y < z < x_s}| > i_s - i_ell, and dually above x_ell.
bool posetchar(const Poset& p, const ChainConfig& c);

// Which result a violated implication belongs to.
enum class AuditTopic {
  Identities,        // log-concavity and the companion cell identities
  Characterization,  // equality, balance and the (iii) conditions per class
  KTwo,              // k <= 2 equality instances satisfy supercritical (iii)
  Posetchar,         // poset-side condition versus supercritical (iii)
};
std::string_view audit_topic_name(AuditTopic t);

struct AuditViolation {
  AuditTopic topic;
  std::string what;
};

struct AuditReport {
  std::vector<AuditViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Every implication among (i), (ii), (iii) proved for the instance's class,
// evaluated on the report. Any entry in `violations` is a bug somewhere.
AuditReport equivalence_audit(const CharacterizationReport& report);
AuditReport equivalence_audit(const Poset& p, const ChainConfig& c, bool auto_closure = true);

}  // namespace stanley
