#include "stanley/sweep.hpp"

#include <algorithm>
#include <condition_variable>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "stanley/geometry.hpp"
#include "stanley/io.hpp"
#include "stanley/range.hpp"
#include "stanley/transforms.hpp"

namespace stanley {

namespace {

constexpr std::array<std::string_view, kSuiteCount> kSuiteNames = {
    "stanley", "trivial", "identities", "characterization", "posetchar", "k2",    "range", "critequiv",
    "mixed",   "maxpair", "closure",    "split",            "volume",    "mvpos", "dirs"};

nlohmann::json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

// First anomaly per suite, with a count of the rest folded into its detail.
class AnomalyLog {
 public:
  void add(Suite s, std::string detail) {
    const int i = static_cast<int>(s);
    if (count_[i]++ == 0) first_[i] = std::move(detail);
  }
  std::vector<Anomaly> take() const {
    std::vector<Anomaly> out;
    for (int i = 0; i < kSuiteCount; ++i) {
      if (count_[i] == 0) continue;
      std::string d = first_[i];
      if (count_[i] > 1) d += " (+" + std::to_string(count_[i] - 1) + " more)";
      out.push_back({static_cast<Suite>(i), d});
    }
    return out;
  }

 private:
  std::array<int, kSuiteCount> count_{};
  std::array<std::string, kSuiteCount> first_;
};

Suite suite_of(AuditTopic t) {
  switch (t) {
    case AuditTopic::Identities: return Suite::Identities;
    case AuditTopic::Characterization: return Suite::Characterization;
    case AuditTopic::KTwo: return Suite::KTwo;
    case AuditTopic::Posetchar: return Suite::Posetchar;
  }
  return Suite::Characterization;
}

std::string pair_text(SplittingPair pr) { return "(" + std::to_string(pr.r) + "," + std::to_string(pr.s) + ")"; }

bool support_within(Support inner, Support outer) { return (inner & ~outer) == 0; }

void check_range(const Poset& p, const ChainConfig& c, const std::array<std::vector<LinearExtension>, 3>& sets,
                 bool lemma_scope, AnomalyLog& log) {
  const int n = p.size();
  const ElementSet chain = c.chain_set();
  for (int y = 0; y < n; ++y) {
    if (chain.contains(y)) continue;
    std::array<Bounds, 3> b;
    for (Variant v : kVariants) {
      const int vi = index_of(v);
      b[vi] = bounds(p, c, y, v);
      std::vector<bool> attained(n + 1, false);
      for (const LinearExtension& s : sets[vi]) attained[s.placement[y]] = true;
      for (int i = 1; i <= n; ++i) {
        const bool f = feasible(p, c, y, v, i);
        const std::string where =
            "element " + std::to_string(y) + " slot " + std::to_string(i) + " in N_" + std::string(variant_name(v));
        if (attained[i] && !f) log.add(Suite::Range, where + ": used by an extension but outside the formula range");
        if (lemma_scope && !sets[vi].empty() && f && !attained[i])
          log.add(Suite::Range, where + ": formula admits the slot but no extension uses it");
      }
    }
    const Bounds &mi = b[0], &eq = b[1], &pl = b[2];
    if (!(eq.l - 1 <= mi.l && mi.l <= eq.l && eq.l <= pl.l && pl.l <= eq.l + 1 && eq.u - 1 <= mi.u && mi.u <= eq.u &&
          eq.u <= pl.u && pl.u <= eq.u + 1))
      log.add(Suite::Range, "element " + std::to_string(y) + ": bound chains l_- <= l_= <= l_+ out of order");
    if (i_max(p, c, y) < c.ell && !(mi.l == eq.l && eq.l == pl.l))
      log.add(Suite::Range, "element " + std::to_string(y) + ": lower bounds differ although i_max < ell");
    if (i_min(p, c, y) > c.ell && !(mi.u == eq.u && eq.u == pl.u))
      log.add(Suite::Range, "element " + std::to_string(y) + ": upper bounds differ although i_min > ell");
  }
}

// Runs work(i) for i in [0, count) on `jobs` threads and hands each result to
// emit(i, result) in index order from the calling thread.
template <class Result>
void run_ordered(std::size_t count, int jobs, const std::function<Result(std::size_t)>& work,
                 const std::function<void(Result&)>& emit) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      Result r = work(i);
      emit(r);
    }
    return;
  }
  const std::size_t window = static_cast<std::size_t>(jobs) * 8;
  std::mutex mu;
  std::condition_variable cv;
  std::vector<std::optional<Result>> slots(count);
  std::size_t next = 0, emitted = 0;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return next >= count || next < emitted + window || failure; });
        if (next >= count || failure) return;
        i = next++;
      }
      std::optional<Result> r;
      try {
        r = work(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      slots[i] = std::move(r);
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::size_t i = 0; i < count; ++i) {
    std::optional<Result> r;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return slots[i].has_value() || failure; });
      if (failure) break;
      r = std::move(slots[i]);
      slots[i].reset();
    }
    emit(*r);
    std::lock_guard lock(mu);
    emitted = i + 1;
    cv.notify_all();
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Window condition for x_ell plus strictly increasing positions.
void for_each_position_vector(int n, int k, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> pos;
  std::function<void(int)> grow = [&](int from) {
    if (static_cast<int>(pos.size()) == k) {
      for (int ell = 1; ell <= k; ++ell) {
        const int lo = ell >= 2 ? pos[ell - 2] : 0;
        const int hi = ell < k ? pos[ell] : n + 1;
        if (lo + 1 < pos[ell - 1] && pos[ell - 1] < hi - 1) f(pos, ell);
      }
      return;
    }
    for (int q = from; q <= n - (k - static_cast<int>(pos.size()) - 1); ++q) {
      pos.push_back(q);
      grow(q + 1);
      pos.pop_back();
    }
  };
  grow(1);
}

std::vector<std::vector<Mask>> natural_rows(int n) {
  std::vector<std::vector<Mask>> level{{}};
  for (int m = 0; m < n; ++m) {
    std::vector<std::vector<Mask>> grown;
    for (const auto& up : level) {
      // down[a] recovered from the up rows.
      std::vector<Mask> down(m, 0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if ((up[a] >> b) & 1U) down[b] |= bit(a);
      for (Mask s = 0; s < bit(m); ++s) {
        bool closed = true;
        for (int a = 0; a < m && closed; ++a)
          if (((s >> a) & 1U) && (down[a] & ~s)) closed = false;
        if (!closed) continue;
        std::vector<Mask> next = up;
        next.push_back(0);
        for (int a = 0; a < m; ++a)
          if ((s >> a) & 1U) next[a] |= bit(m);
        grown.push_back(std::move(next));
      }
    }
    level = std::move(grown);
  }
  return level;
}

std::vector<int> signature(const Poset& p) {
  std::vector<int> sig;
  const auto covers_list = p.cover_relations();
  for (int a = 0; a < p.size(); ++a) {
    int lc = 0, uc = 0;
    for (auto [x, y] : covers_list) {
      lc += y == a;
      uc += x == a;
    }
    sig.push_back(((std::popcount(p.below(a)) * 64 + std::popcount(p.above(a))) * 64 + lc) * 64 + uc);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

std::string_view suite_name(Suite s) { return kSuiteNames[static_cast<int>(s)]; }

std::optional<Suite> parse_suite(std::string_view name) {
  for (int i = 0; i < kSuiteCount; ++i)
    if (kSuiteNames[i] == name) return static_cast<Suite>(i);
  return std::nullopt;
}

SuiteMask parse_suites(std::string_view list) {
  if (list == "all") return kAllSuites;
  SuiteMask m = 0;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string_view name = list.substr(start, end - start);
    if (!name.empty()) {
      auto s = parse_suite(name);
      if (!s) throw SweepError(SweepError::Kind::BadSpec, "unknown suite '" + std::string(name) + "'");
      m |= suite_bit(*s);
    }
    start = end + 1;
  }
  return m;
}

std::string_view labeling_name(Labeling l) {
  switch (l) {
    case Labeling::Labeled: return "labeled";
    case Labeling::Natural: return "natural";
    case Labeling::Signature: return "signature";
  }
  return "?";
}

nlohmann::json spec_to_json(const SweepSpec& spec) {
  nlohmann::json suites = nlohmann::json::array();
  for (int i = 0; i < kSuiteCount; ++i)
    if ((spec.suites >> i) & 1U) suites.push_back(kSuiteNames[i]);
  return {{"n_min", spec.n_min},
          {"n_max", spec.n_max},
          {"k_min", spec.k_min},
          {"k_max", spec.k_max},
          {"fixed_positions", spec.fixed_positions},
          {"labeling", labeling_name(spec.labeling)},
          {"suites", suites},
          {"auto_closure", spec.auto_closure},
          {"exhaustive_limit", spec.exhaustive_limit},
          {"samples", spec.samples},
          {"seed", spec.seed},
          {"max_n", spec.max_n}};
}

nlohmann::json finding_to_json(const Finding& f) {
  nlohmann::json j = instance_to_json(f.instance);
  j["counts"] = {big(f.counts[Variant::Minus]), big(f.counts[Variant::Equal]), big(f.counts[Variant::Plus])};
  j["relation"] = relation_name(f.relation);
  j["witness"] = f.witness ? nlohmann::json{f.witness->r, f.witness->s} : nlohmann::json(nullptr);
  j["class"] = f.cls ? nlohmann::json(class_name(*f.cls)) : nlohmann::json(nullptr);
  auto opt = [](const std::optional<bool>& b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); };
  j["supercritical_iii"] = opt(f.supercritical_iii);
  j["critical_iii"] = opt(f.critical_iii);
  j["posetchar"] = opt(f.posetchar);
  j["dirs"] = {{"certified", f.dirs.certified},
               {"failures", f.dirs.failures},
               {"critical_regime", f.dirs.critical_regime}};
  nlohmann::json an = nlohmann::json::array();
  for (const Anomaly& a : f.anomalies) an.push_back({{"suite", suite_name(a.suite)}, {"detail", a.detail}});
  j["anomalies"] = an;
  return j;
}

Finding evaluate(const Poset& p, const ChainConfig& c, SuiteMask suites, bool auto_closure) {
  Finding f;
  f.instance = Instance{p, c, {}};
  const int n = p.size();
  AnomalyLog log;
  auto want = [&](Suite s) { return (suites & suite_bit(s)) != 0; };
  auto ran = [&](Suite s) { f.evaluated |= suite_bit(s); };

  const StanleyVerdict sv = stanley_verdict(p, c);
  f.counts = sv.counts;
  f.relation = sv.relation;
  const bool has_equal = f.counts[Variant::Equal] > 0;
  bool any_extension = false;
  for (Variant v : kVariants) any_extension = any_extension || f.counts[v] > 0;

  if (want(Suite::Stanley)) {
    ran(Suite::Stanley);
    if (!sv.inequality_holds) log.add(Suite::Stanley, "|N_=|^2 < |N_-| |N_+|");
  }
  f.witness = trivial_witness(p, c);
  if (want(Suite::Trivial)) {
    ran(Suite::Trivial);
    if (f.witness.has_value() == has_equal)
      log.add(Suite::Trivial, has_equal ? "witness " + pair_text(*f.witness) + " although |N_=| > 0"
                                        : "no witness although |N_=| = 0");
  }

  const bool regime = has_equal && critical_regime(p, c);
  f.dirs.critical_regime = regime;

  std::array<std::vector<LinearExtension>, 3> sets;
  if (suites & (suite_bit(Suite::Range) | suite_bit(Suite::Mixed) | suite_bit(Suite::MaxPair) | suite_bit(Suite::Closure)))
    for (Variant v : kVariants) sets[index_of(v)] = enumerate(p, c, v);

  std::optional<ClosureResult> cl;
  if (any_extension) cl = closure(p, c);

  if (has_equal) {
    const CharacterizationReport r = characterize(p, c, auto_closure);
    f.cls = r.cls;
    f.supercritical_iii = r.supercritical_iii;
    f.critical_iii = r.critical_iii;
    f.posetchar = r.posetchar;
    for (Suite s : {Suite::Identities, Suite::Characterization, Suite::KTwo})
      if (want(s)) ran(s);
    if (want(Suite::Posetchar) && r.closure_applied) ran(Suite::Posetchar);
    for (const AuditViolation& v : equivalence_audit(r).violations)
      if (f.evaluated & suite_bit(suite_of(v.topic))) log.add(suite_of(v.topic), v.what);
  }

  if (want(Suite::Range)) {
    ran(Suite::Range);
    // The lemma's setting: critical regime, a poset equal to its closure, and equality.
    const bool lemma_scope =
        regime && f.relation == StanleyRelation::Equality && cl && cl->added_relations.empty();
    check_range(p, c, sets, lemma_scope, log);
  }

  if (want(Suite::CritEquiv)) {
    ran(Suite::CritEquiv);
    for (int excess = 0; excess <= 2; ++excess)
      if (dimension_condition(p, c, excess) != inequality_condition(p, c, excess))
        log.add(Suite::CritEquiv, "dimension and inequality forms disagree at excess " + std::to_string(excess));
  }

  if (want(Suite::Mixed)) {
    ran(Suite::Mixed);
    for (SplittingPair pr : ell_splitting_pairs(c)) {
      const int excess = pair_excess(p, c, pr);
      for (Variant v : kVariants)
        for (const LinearExtension& s : sets[index_of(v)]) {
          const int got = mixed_elements(p, c, s, pr).size();
          if (got != excess)
            log.add(Suite::Mixed, "pair " + pair_text(pr) + " in N_" + std::string(variant_name(v)) + ": " +
                                      std::to_string(got) + " mixed elements, excess " + std::to_string(excess));
        }
    }
    if (regime)
      for (SplittingPair pr : splitting_pairs(c))
        for (const LinearExtension& s : sets[index_of(Variant::Equal)])
          if (mixed_elements(p, c, s, pr).empty())
            log.add(Suite::Mixed, "pair " + pair_text(pr) + ": an extension in N_= has no mixed element");
  }

  if (want(Suite::MaxPair) && regime) {
    ran(Suite::MaxPair);
    for (int j = 0; j <= c.k(); ++j)
      if (c.position(j, n) + 1 >= c.position(j + 1, n))
        log.add(Suite::MaxPair, "gap " + std::to_string(j) + " has no free slot in the critical regime");
    if (auto mp = maximal_splitting_pair(p, c)) {
      if (pair_criticality(p, c, mp->pair) != PairClass::SharpCritical)
        log.add(Suite::MaxPair, "maximal pair " + pair_text(mp->pair) + " is not sharp-critical");
      const Support outer = pair_support(c, mp->pair);
      for (SplittingPair pr : sharp_critical_pairs(p, c))
        if (!support_within(pair_support(c, pr), outer))
          log.add(Suite::MaxPair, "sharp-critical pair " + pair_text(pr) + " escapes the maximal collection");
      for (const LinearExtension& s : sets[index_of(Variant::Equal)])
        if (mixed_elements(p, c, s, mp->pair).size() != 1)
          log.add(Suite::MaxPair, "an extension in N_= has " + std::to_string(mixed_elements(p, c, s, mp->pair).size()) +
                                      " mixed elements for the maximal pair");
    }
  }

  if (want(Suite::Closure) && cl) {
    ran(Suite::Closure);
    for (auto [a, b] : p.relations())
      if (!cl->closed.less(a, b)) log.add(Suite::Closure, "closure drops a relation of the input");
    for (Variant v : kVariants)
      if (enumerate(cl->closed, c, v) != sets[index_of(v)])
        log.add(Suite::Closure, "N_" + std::string(variant_name(v)) + " changes under the closure");
    if (!closure(cl->closed, c).added_relations.empty()) log.add(Suite::Closure, "closure is not idempotent");
  }

  if (want(Suite::Split)) {
    ran(Suite::Split);
    for (SplittingPair pr : splitting_pairs(c)) {
      if (c.ell == pr.r + 1 || c.ell == pr.s) continue;
      const SplitReport rep = verify_split_reduction(p, c, pr);
      if (rep.rigid && !rep.product_identity)
        log.add(Suite::Split, "rigid pair " + pair_text(pr) + ": counts do not factor");
      if (!rep.claim_holds)
        log.add(Suite::Split, "pair " + pair_text(pr) + ": parent equality but a part is strict and the gap is tight");
    }
  }

  if (want(Suite::Volume) || want(Suite::MvPos)) {
    std::array<BigInt, 3> vol;
    for (Variant v : kVariants) {
      const CollectionDescriptor K = variant_collection(n, c, v);
      const MixedVolume mv = mixed_volume(p, c, K);
      vol[index_of(v)] = mv.numerator;
      if (want(Suite::Volume) && mv.numerator != f.counts[v])
        log.add(Suite::Volume, "mixed volume for N_" + std::string(variant_name(v)) + " differs from the count");
      if (want(Suite::MvPos) && (mv.numerator > 0) != mixed_volume_positive_by_dimension(p, c, K))
        log.add(Suite::MvPos, "positivity of the N_" + std::string(variant_name(v)) +
                                  " mixed volume disagrees with the dimension test");
    }
    if (want(Suite::Volume)) {
      ran(Suite::Volume);
      if (vol[1] * vol[1] < vol[0] * vol[2]) log.add(Suite::Volume, "Alexandrov-Fenchel fails on the mixed volumes");
    }
    if (want(Suite::MvPos)) ran(Suite::MvPos);
  }

  if (want(Suite::Dirs) && has_equal) {
    ran(Suite::Dirs);
    for (const CertifiedDirection& d : certified_directions(p, c)) {
      ++f.dirs.certified;
      if (is_extreme(p, c, d.direction)) continue;
      ++f.dirs.failures;
      log.add(Suite::Dirs, std::string("clause ") + clause_letter(d.clause) + " certifies " + direction_text(d.direction) +
                               ", which fails the rank test" + (regime ? "" : " (outside the critical regime)"));
    }
  }

  f.anomalies = log.take();
  return f;
}

void SweepSummary::add(const Finding& f) {
  ++instances;
  ++by_n[f.instance.n()];
  const bool has_equal = f.counts[Variant::Equal] > 0;
  with_equal += has_equal;
  equality += f.relation == StanleyRelation::Equality;
  sharp += f.sharp();
  anomalous += f.anomaly();
  if ((f.evaluated & suite_bit(Suite::KTwo)) && f.instance.config.k() <= 2 && f.relation == StanleyRelation::Equality)
    ++k2_equality;
  for (int i = 0; i < kSuiteCount; ++i)
    if ((f.evaluated >> i) & 1U) ++suites[i].instances;
  for (const Anomaly& a : f.anomalies) ++suites[static_cast<int>(a.suite)].anomalous;
  dirs_all.certified += f.dirs.certified;
  dirs_all.failures += f.dirs.failures;
  if (f.dirs.critical_regime) {
    ++regime_instances;
    regime_certified += f.dirs.certified;
    regime_failures += f.dirs.failures;
  }
}

nlohmann::json summary_to_json(const SweepSummary& s) {
  nlohmann::json by_n = nlohmann::json::object();
  for (auto [n, cnt] : s.by_n) by_n[std::to_string(n)] = cnt;
  nlohmann::json suites = nlohmann::json::object();
  for (int i = 0; i < kSuiteCount; ++i)
    suites[std::string(kSuiteNames[i])] = {{"instances", s.suites[i].instances}, {"anomalous", s.suites[i].anomalous}};
  return {{"summary", true},
          {"posets", s.posets},
          {"instances", s.instances},
          {"by_n", by_n},
          {"with_equal", s.with_equal},
          {"equality", s.equality},
          {"sharp", s.sharp},
          {"k2_equality", s.k2_equality},
          {"anomalous", s.anomalous},
          {"suites", suites},
          {"dirs",
           {{"certified", s.dirs_all.certified},
            {"failures", s.dirs_all.failures},
            {"regime_instances", s.regime_instances},
            {"regime_certified", s.regime_certified},
            {"regime_failures", s.regime_failures}}}};
}

void for_each_valid_config(const Poset& p, int k_min, int k_max, const std::function<void(const ChainConfig&)>& f) {
  const int n = p.size();
  if (k_max < 0 || k_max > n) k_max = n;
  std::vector<int> chain;
  std::function<void(int)> grow = [&](int last) {
    const int k = static_cast<int>(chain.size());
    if (k >= std::max(k_min, 1))
      for_each_position_vector(n, k, [&](const std::vector<int>& pos, int ell) { f(ChainConfig{chain, pos, ell}); });
    if (k == k_max) return;
    for (int e = 0; e < n; ++e) {
      if (last >= 0 && !p.less(last, e)) continue;
      chain.push_back(e);
      grow(e);
      chain.pop_back();
    }
  };
  grow(-1);
}

std::vector<Poset> enumerate_posets(int n, Labeling labeling) {
  const auto rows = natural_rows(n);
  std::vector<Poset> out;
  switch (labeling) {
    case Labeling::Natural:
      for (const auto& up : rows) out.push_back(Poset::from_closed_rows(up));
      break;
    case Labeling::Signature: {
      std::set<std::vector<int>> seen;
      for (const auto& up : rows) {
        Poset q = Poset::from_closed_rows(up);
        if (seen.insert(signature(q)).second) out.push_back(std::move(q));
      }
      break;
    }
    case Labeling::Labeled: {
      if (n > 6) throw SweepError(SweepError::Kind::BadSpec, "labeled enumeration is limited to n <= 6");
      std::set<std::vector<Mask>> all;
      std::vector<int> perm(n);
      for (const auto& up : rows) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<Mask> relabeled(n, 0);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              if ((up[a] >> b) & 1U) relabeled[perm[a]] |= bit(perm[b]);
          all.insert(std::move(relabeled));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      for (const auto& up : all) out.push_back(Poset::from_closed_rows(up));
      break;
    }
  }
  return out;
}

std::pair<Poset, ChainConfig> sample_instance(int n, int k_min, int k_max, std::mt19937_64& rng) {
  if (k_max < 0 || k_max > n) k_max = n;
  std::optional<std::pair<Poset, ChainConfig>> fallback;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    std::bernoulli_distribution edge(density);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (edge(rng)) rel.emplace_back(a, b);
    Poset p = Poset::build(n, rel);

    std::vector<std::vector<int>> chains;
    for (Mask s = 1; s < bit(n); ++s) {
      const int k = std::popcount(s);
      if (k < std::max(k_min, 1) || k > k_max) continue;
      std::vector<int> ids = ElementSet(s).to_vector();
      bool chain = true;
      for (std::size_t t = 0; t + 1 < ids.size() && chain; ++t) chain = p.less(ids[t], ids[t + 1]);
      if (chain) chains.push_back(std::move(ids));
    }
    if (chains.empty()) continue;
    const auto& chain = chains[std::uniform_int_distribution<std::size_t>(0, chains.size() - 1)(rng)];
    std::vector<std::pair<std::vector<int>, int>> placements;
    for_each_position_vector(n, static_cast<int>(chain.size()),
                             [&](const std::vector<int>& pos, int ell) { placements.emplace_back(pos, ell); });
    if (placements.empty()) continue;
    const auto& [pos, ell] = placements[std::uniform_int_distribution<std::size_t>(0, placements.size() - 1)(rng)];
    ChainConfig c{chain, pos, ell};
    if (count(p, c, Variant::Equal) > 0) return {p, c};
    if (!fallback) fallback.emplace(p, c);
  }
  if (!fallback) throw SweepError(SweepError::Kind::BadSpec, "no valid configuration found for the requested k range");
  return *fallback;
}

SweepSummary sweep(const SweepSpec& spec, const std::function<void(const Finding&)>& sink) {
  if (spec.n_min < 1 || spec.n_max < spec.n_min)
    throw SweepError(SweepError::Kind::BadSpec, "need 1 <= n_min <= n_max");
  if (spec.n_max > spec.max_n || spec.n_max > kMaxElements)
    throw SweepError(SweepError::Kind::CapExceeded,
                     "n_max " + std::to_string(spec.n_max) + " exceeds the cap " + std::to_string(spec.max_n));
  if (spec.samples < 0) throw SweepError(SweepError::Kind::BadSpec, "sample count must be nonnegative");
  const int jobs = spec.jobs > 0 ? spec.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  SweepSummary summary;
  auto keep = [&](const ChainConfig& c) {
    return spec.fixed_positions.empty() || c.positions == spec.fixed_positions;
  };
  const std::function<void(std::vector<Finding>&)> emit = [&](std::vector<Finding>& batch) {
    for (const Finding& f : batch) {
      summary.add(f);
      sink(f);
    }
  };

  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    if (n <= spec.exhaustive_limit) {
      const std::vector<Poset> posets = enumerate_posets(n, spec.labeling);
      summary.posets += static_cast<long long>(posets.size());
      run_ordered<std::vector<Finding>>(
          posets.size(), jobs,
          [&](std::size_t i) {
            std::vector<Finding> out;
            for_each_valid_config(posets[i], spec.k_min, spec.k_max, [&](const ChainConfig& c) {
              if (keep(c)) out.push_back(evaluate(posets[i], c, spec.suites, spec.auto_closure));
            });
            return out;
          },
          emit);
    } else {
      summary.posets += spec.samples;
      run_ordered<std::vector<Finding>>(
          static_cast<std::size_t>(spec.samples), jobs,
          [&](std::size_t i) {
            std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                              static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i),
                              static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
            std::mt19937_64 rng(seq);
            auto [p, c] = sample_instance(n, spec.k_min, spec.k_max, rng);
            std::vector<Finding> out;
            if (keep(c)) out.push_back(evaluate(p, c, spec.suites, spec.auto_closure));
            return out;
          },
          emit);
    }
  }
  return summary;
}

}  // namespace stanley
