#include <array>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "stanley/extremal.hpp"

using namespace stanley;

namespace {

struct OracleCells {
  // [variant][lower comparable][upper comparable]
  std::array<std::array<std::array<long long, 2>, 2>, 3> n{};
  bool addendum = true;
  long long at(int v, int lo, int up) const { return n[v][lo][up]; }
};

// Companion census read directly off the words, comparability taken from m.
OracleCells oracle_cells(const oracle::Matrix& order, const oracle::Matrix& m, const ChainConfig& c) {
  OracleCells out;
  const int xl = c.chain[c.ell - 1];
  const int il = c.positions[c.ell - 1];
  auto cmp = [&](int a, int b) { return m[a][b] || m[b][a]; };
  for (int v = 0; v < 3; ++v) {
    for (const auto& w : oracle::words(order, c, v - 1)) {
      std::vector<int> comp;
      for (int pos = il - 1; pos <= il + 1; ++pos)
        if (w[pos - 1] != xl) comp.push_back(w[pos - 1]);
      const bool lc = cmp(comp[0], xl), uc = cmp(comp[1], xl);
      ++out.n[v][lc][uc];
      if (lc != uc && cmp(comp[0], comp[1])) out.addendum = false;
    }
  }
  return out;
}

bool oracle_posetchar(const oracle::Matrix& m, const ChainConfig& c) {
  const int n = static_cast<int>(m.size());
  const int k = c.k();
  const int xl = c.chain[c.ell - 1];
  const int il = c.positions[c.ell - 1];
  auto on_chain = [&](int y) { return std::find(c.chain.begin(), c.chain.end(), y) != c.chain.end(); };
  for (int y = 0; y < n; ++y) {
    if (on_chain(y)) continue;
    if (m[y][xl]) {
      bool ok = false;
      for (int s = 1; s <= k + 1; ++s) {
        const int top = s <= k ? c.chain[s - 1] : -1;
        if (top >= 0 && !m[y][top]) continue;
        int inside = 0;
        for (int z = 0; z < n; ++z) inside += m[y][z] && (top < 0 || m[z][top]);
        ok = ok || inside > (s <= k ? c.positions[s - 1] : n + 1) - il;
      }
      if (!ok) return false;
    }
    if (m[xl][y]) {
      bool ok = false;
      for (int r = 0; r <= k; ++r) {
        const int bot = r >= 1 ? c.chain[r - 1] : -1;
        if (bot >= 0 && !m[bot][y]) continue;
        int inside = 0;
        for (int z = 0; z < n; ++z) inside += m[z][y] && (bot < 0 || m[bot][z]);
        ok = ok || inside > il - (r >= 1 ? c.positions[r - 1] : 0);
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("seven-element example: equality without the supercritical mechanism") {
  Instance inst = fixtures::crit();
  StanleyVerdict s = stanley_verdict(inst.poset, inst.config);
  CHECK(s.relation == StanleyRelation::Equality);
  for (Variant v : kVariants) CHECK(s.counts[v] == 4);
  CharacterizationReport r = characterize(inst.poset, inst.config);
  CHECK(r.equality);
  CHECK(r.balance);
  CHECK_FALSE(r.supercritical_iii);
  CHECK(r.critical_iii);
  REQUIRE(r.n1.has_value());
  CHECK(*r.n1 == 1);
  CHECK(*r.n2 == 2);
  CHECK(r.companion_incomparability);
  CHECK_FALSE(r.posetchar);
  CHECK(r.cls == CriticalityClass::CriticalNotSuper);
  CHECK(equivalence_audit(r).ok());

  const oracle::Matrix m = oracle::matrix_of(inst.poset);
  OracleCells o = oracle_cells(m, oracle::closure_of(m, inst.config), inst.config);
  for (int v = 0; v < 3; ++v) {
    CHECK(o.at(v, 0, 1) == 1);
    CHECK(o.at(v, 1, 0) == 1);
    CHECK(o.at(v, 0, 0) == 2);
    CHECK(o.at(v, 1, 1) == 0);
  }
}

TEST_CASE("closure example: balanced with every companion free") {
  Instance inst = fixtures::closure_example();
  StanleyVerdict s = stanley_verdict(inst.poset, inst.config);
  CHECK(s.relation == StanleyRelation::Equality);
  for (Variant v : kVariants) CHECK(s.counts[v] == 2);
  CharacterizationReport r = characterize(inst.poset, inst.config);
  CHECK(r.closure_applied);
  CHECK(r.closure_added.size() == 2);
  CHECK(r.supercritical_iii);
  CHECK(r.critical_iii);
  CHECK(*r.n1 == 0);
  CHECK(*r.n2 == 2);
  CHECK(r.posetchar);
  CHECK(equivalence_audit(r).ok());
}

TEST_CASE("a three-element chain is strict") {
  Poset p = Poset::build(3, {{0, 1}, {1, 2}});
  ChainConfig c{{1}, {2}, 1};
  StanleyVerdict s = stanley_verdict(p, c);
  CHECK(s.counts[Variant::Minus] == 0);
  CHECK(s.counts[Variant::Equal] == 1);
  CHECK(s.counts[Variant::Plus] == 0);
  CHECK(s.relation == StanleyRelation::Strict);
  CHECK(s.inequality_holds);
}

TEST_CASE("an antichain around x_ell is supercritical and balanced") {
  Poset p = Poset::build(5, {});
  ChainConfig c{{2}, {3}, 1};
  CharacterizationReport r = characterize(p, c);
  CHECK(r.supercritical_iii);
  CHECK(r.balance);
  CHECK(r.posetchar);
  CHECK(r.cls == CriticalityClass::Supercritical);
}

TEST_CASE("characterize needs |N_=| > 0") {
  Poset p = Poset::build(4, {{0, 2}, {1, 2}});
  ChainConfig c{{2}, {2}, 1};
  REQUIRE(count(p, c, Variant::Equal) == 0);
  CHECK(stanley_verdict(p, c).relation == StanleyRelation::Degenerate);
  try {
    characterize(p, c);
    FAIL("expected Undefined");
  } catch (const CriticalityError& e) {
    CHECK(e.kind() == CriticalityError::Kind::Undefined);
  }
}

TEST_CASE("trivial witness on a pinned gap that is too small") {
  // x_1 < y < x_2 pinned at 1 and 2: nothing fits between them.
  Poset p = Poset::build(3, {{0, 1}, {1, 2}});
  ChainConfig c{{0, 2}, {1, 2}, 0};
  CHECK(count(p, c, Variant::Equal) == 0);
  auto w = trivial_witness(p, c);
  REQUIRE(w.has_value());
  CHECK(*w == SplittingPair{0, 2});
  CHECK_FALSE(trivial_witness(fixtures::crit().poset, fixtures::crit().config).has_value());
}

TEST_CASE("trivial witness exists exactly when N_= is empty, n <= 6") {
  long long empty = 0;
  for (int n = 1; n <= 6; ++n) {
    oracle::for_each_natural_poset(n, [&](const Poset& p) {
      const oracle::Matrix m = oracle::matrix_of(p);
      oracle::for_each_config(p, [&](const ChainConfig& c) {
        const bool none = n <= 5 ? oracle::count(m, c, 0) == 0 : count(p, c, Variant::Equal) == 0;
        empty += none;
        CHECK(trivial_witness(p, c).has_value() == none);
      });
    });
  }
  CHECK(empty > 1000);
}

TEST_CASE("characterization against companion census, n <= 5, and audits up to 6") {
  long long seen = 0, equal = 0, sharp_examples = 0;
  for (int n = 3; n <= 6; ++n) {
    oracle::for_each_natural_poset(n, [&](const Poset& p) {
      const oracle::Matrix m = oracle::matrix_of(p);
      oracle::for_each_config(p, [&](const ChainConfig& c) {
        if (count(p, c, Variant::Equal) == 0) return;
        ++seen;
        for (bool auto_closure : {true, false}) {
          CharacterizationReport r = characterize(p, c, auto_closure);
          CHECK(equivalence_audit(r).ok());
          StanleyVerdict s = stanley_verdict(p, c);
          CHECK(s.inequality_holds);
          CHECK((s.relation == StanleyRelation::Equality) == r.equality);
          if (auto_closure) {
            equal += r.equality;
            sharp_examples += r.equality && r.critical_iii && !r.supercritical_iii;
          }
          if (n > 5) continue;
          const oracle::Matrix cm = auto_closure ? oracle::closure_of(m, c) : m;
          const OracleCells o = oracle_cells(m, cm, c);
          bool super = true, never_both = true, n1 = true, n2 = true;
          for (int v = 0; v < 3; ++v) {
            super = super && o.at(v, 0, 1) == 0 && o.at(v, 1, 0) == 0 && o.at(v, 1, 1) == 0;
            never_both = never_both && o.at(v, 1, 1) == 0;
            n1 = n1 && o.at(v, 0, 1) == o.at(1, 0, 1) && o.at(v, 1, 0) == o.at(1, 0, 1);
            n2 = n2 && o.at(v, 0, 0) == o.at(1, 0, 0);
          }
          CHECK(r.supercritical_iii == super);
          CHECK(r.critical_iii == (never_both && n1 && n2));
          CHECK(r.companion_incomparability == o.addendum);
          CHECK(r.posetchar == oracle_posetchar(cm, c));
        }
      });
    });
  }
  CHECK(seen > 100000);
  CHECK(equal > 10000);
  // k <= 2 never produces one, and n <= 6 leaves no room for k = 3 with a free pair.
  CHECK(sharp_examples == 0);
}

TEST_CASE("k = 1 log-concave triples in the support are constant, n <= 6") {
  long long triples = 0;
  for (int n = 3; n <= 6; ++n) {
    oracle::for_each_natural_poset(n, [&](const Poset& p) {
      for (int x = 0; x < n; ++x) {
        const std::vector<BigInt> a = a_sequence(p, x);
        for (int j = 2; j <= n - 1; ++j) {
          const BigInt &lo = a[j - 2], &mid = a[j - 1], &hi = a[j];
          if (lo == 0 || mid == 0 || hi == 0) continue;
          CHECK(mid * mid >= lo * hi);
          if (mid * mid == lo * hi) {
            ++triples;
            CHECK((lo == mid && mid == hi));
          }
        }
      }
    });
  }
  CHECK(triples > 0);
}
