#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "stanley/io.hpp"
#include "stanley/report.hpp"
#include "stanley/sweep.hpp"

using namespace stanley;

namespace {

std::vector<std::string> collect(const SweepSpec& spec, SweepSummary* summary = nullptr) {
  std::vector<std::string> out;
  SweepSummary s = sweep(spec, [&](const Finding& f) { out.push_back(finding_to_json(f).dump()); });
  if (summary) *summary = s;
  return out;
}

bool has_suite(const Finding& f, Suite s) {
  for (const Anomaly& a : f.anomalies)
    if (a.suite == s) return true;
  return false;
}

}  // namespace

TEST_CASE("natural enumeration matches the brute-force generator") {
  const long long expected[] = {1, 2, 7, 40, 357, 4824};
  for (int n = 1; n <= 6; ++n) {
    std::vector<Poset> got = enumerate_posets(n, Labeling::Natural);
    CHECK(static_cast<long long>(got.size()) == expected[n - 1]);
    std::set<std::vector<std::pair<int, int>>> mine, theirs;
    auto relations = [n](const Poset& p) {
      std::vector<std::pair<int, int>> r;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (p.less(a, b)) r.emplace_back(a, b);
      return r;
    };
    for (const Poset& p : got) mine.insert(relations(p));
    if (n <= 5) {
      oracle::for_each_natural_poset(n, [&](const Poset& p) { theirs.insert(relations(p)); });
      CHECK(mine == theirs);
    }
    CHECK(mine.size() == got.size());
  }
}

TEST_CASE("labeled enumeration counts every labeled poset") {
  for (int n = 1; n <= 4; ++n)
    CHECK(enumerate_posets(n, Labeling::Labeled).size() == oracle::all_posets(n).size());
  CHECK(enumerate_posets(5, Labeling::Labeled).size() == 4231);
}

TEST_CASE("valid configurations agree with the oracle in the same order") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n, Labeling::Natural)) {
      std::vector<ChainConfig> mine, theirs;
      for_each_valid_config(p, 1, -1, [&](const ChainConfig& c) { mine.push_back(c); });
      oracle::for_each_config(p, [&](const ChainConfig& c) { theirs.push_back(c); });
      REQUIRE(mine.size() == theirs.size());
      std::sort(theirs.begin(), theirs.end(), [](const ChainConfig& a, const ChainConfig& b) {
        return std::tie(a.chain, a.positions, a.ell) < std::tie(b.chain, b.positions, b.ell);
      });
      std::vector<ChainConfig> sorted = mine;
      std::sort(sorted.begin(), sorted.end(), [](const ChainConfig& a, const ChainConfig& b) {
        return std::tie(a.chain, a.positions, a.ell) < std::tie(b.chain, b.positions, b.ell);
      });
      CHECK(sorted == theirs);
      for (const ChainConfig& c : mine) CHECK(validate_config(p, c).ok);
    }
}

TEST_CASE("k bounds restrict the chain length") {
  const Poset chain4 = Poset::build(4, {{0, 1}, {1, 2}, {2, 3}});
  for_each_valid_config(chain4, 2, 2, [&](const ChainConfig& c) { CHECK(c.k() == 2); });
}

TEST_CASE("findings do not depend on the worker count") {
  SweepSpec spec;
  spec.n_max = 5;
  spec.jobs = 1;
  SweepSummary one, three;
  const auto a = collect(spec, &one);
  spec.jobs = 3;
  const auto b = collect(spec, &three);
  CHECK(a == b);
  CHECK(summary_to_json(one) == summary_to_json(three));
}

TEST_CASE("sampling is reproducible from the seed") {
  SweepSpec spec;
  spec.n_min = 7;
  spec.n_max = 7;
  spec.samples = 40;
  spec.seed = 11;
  spec.suites = parse_suites("stanley,trivial,characterization");
  const auto a = collect(spec);
  spec.jobs = 2;
  CHECK(collect(spec) == a);
  spec.seed = 12;
  CHECK(collect(spec) != a);
  CHECK(a.size() == 40);
}

TEST_CASE("sampled instances are valid and mostly have equal extensions") {
  std::mt19937_64 rng(5);
  int with_equal = 0;
  for (int i = 0; i < 200; ++i) {
    auto [p, c] = sample_instance(7, 1, -1, rng);
    CHECK(p.size() == 7);
    CHECK(validate_config(p, c).ok);
    if (count(p, c, Variant::Equal) > 0) ++with_equal;
  }
  CHECK(with_equal >= 190);
}

TEST_CASE("small exhaustive sweeps are clean outside the known conflicts") {
  SweepSpec spec;
  spec.n_max = 5;
  SweepSummary s;
  sweep(spec, [&](const Finding& f) {
    for (const Anomaly& a : f.anomalies) {
      const bool known = a.suite == Suite::Range || a.suite == Suite::Dirs;
      CHECK_MESSAGE(known, suite_name(a.suite), ": ", a.detail);
    }
  });
  spec.suites = kAllSuites & ~suite_bit(Suite::Range) & ~suite_bit(Suite::Dirs);
  s = sweep(spec, [](const Finding&) {});
  CHECK(s.anomalous == 0);
  CHECK(s.instances > 0);
  CHECK(s.regime_failures == 0);
}

TEST_CASE("size cap and bad specs") {
  SweepSpec spec;
  spec.n_max = 8;
  try {
    sweep(spec, [](const Finding&) {});
    FAIL("expected CapExceeded");
  } catch (const SweepError& e) {
    CHECK(e.kind() == SweepError::Kind::CapExceeded);
  }
  CHECK_THROWS_AS(parse_suites("stanley,nonsense"), SweepError);
  CHECK(parse_suites("all") == kAllSuites);
  CHECK(parse_suites("k2,dirs") == (suite_bit(Suite::KTwo) | suite_bit(Suite::Dirs)));
  for (int i = 0; i < kSuiteCount; ++i) {
    const Suite s = static_cast<Suite>(i);
    CHECK(parse_suite(suite_name(s)) == s);
  }
}

TEST_CASE("the critical example is a sharp finding") {
  const Instance inst = fixtures::crit();
  const Finding f = evaluate(inst.poset, inst.config, kAllSuites);
  CHECK(f.relation == StanleyRelation::Equality);
  CHECK(f.sharp());
  CHECK(f.dirs.critical_regime);
  CHECK(f.dirs.failures == 0);
  // The shifted-variant placement conflict reaches this instance too; nothing else may fire.
  for (const Anomaly& a : f.anomalies) CHECK_MESSAGE(a.suite == Suite::Range, a.detail);
}

TEST_CASE("the range counterexample is flagged") {
  const Instance inst = parse_instance_json(
      R"({"n":3,"relations":[[0,1]],"chain":[2],"positions":[2],"ell":1})");
  const Finding f = evaluate(inst.poset, inst.config, kAllSuites);
  CHECK(has_suite(f, Suite::Range));
}

TEST_CASE("the direction counterexample is flagged") {
  const Instance inst = parse_instance_json(
      R"({"n":5,"relations":[[0,1],[0,2],[0,3]],"chain":[0,1],"positions":[2,4],"ell":2})");
  const Finding f = evaluate(inst.poset, inst.config, kAllSuites);
  CHECK(has_suite(f, Suite::Dirs));
  CHECK_FALSE(f.dirs.critical_regime);
  CHECK(f.dirs.failures >= 1);
}

TEST_CASE("a finding replays to the same instance") {
  SweepSpec spec;
  spec.n_max = 4;
  sweep(spec, [&](const Finding& f) {
    const Instance back = parse_instance_json(finding_to_json(f).dump());
    CHECK(back.poset == f.instance.poset);
    CHECK(back.config == f.instance.config);
  });
}

TEST_CASE("analyze reports the fixture expectations") {
  const Instance crit = fixtures::crit();
  const auto a = analyze_json(crit);
  CHECK(a["verdict"]["counts"]["minus"] == 4);
  CHECK(a["verdict"]["counts"]["equal"] == 4);
  CHECK(a["verdict"]["counts"]["plus"] == 4);
  CHECK(a["verdict"]["relation"] == "equality");
  CHECK(a["characterization"]["supercritical_iii"] == false);
  CHECK(a["characterization"]["critical_iii"] == true);
  CHECK(a["audit"].empty());
  CHECK(a["certified_not_extreme"].empty());

  const Instance cl = fixtures::closure_example();
  const auto c = closure_json(cl);
  std::set<std::pair<std::string, std::string>> added;
  for (const auto& pr : c["added_covers"]) added.emplace(pr[0], pr[1]);
  CHECK(added == std::set<std::pair<std::string, std::string>>{{"x1", "y2"}, {"x1", "y3"}});
  const auto words = extensions_json(cl);
  CHECK(words["equal"].size() == 2);
}

TEST_CASE("analyze without a distinguished element stops after the verdict") {
  const Instance inst = parse_instance_json(R"({"n":2,"relations":[],"chain":[],"positions":[],"ell":0})");
  const auto a = analyze_json(inst);
  CHECK(a.contains("verdict"));
  CHECK_FALSE(a.contains("class"));
}
