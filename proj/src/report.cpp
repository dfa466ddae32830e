#include "stanley/report.hpp"

#include <map>

#include "stanley/extremal.hpp"
#include "stanley/geometry.hpp"
#include "stanley/io.hpp"
#include "stanley/range.hpp"
#include "stanley/transforms.hpp"

namespace stanley {

using json = nlohmann::json;

namespace {

json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(v);
  return v.str();
}

json names(const Instance& inst, ElementSet s) {
  json out = json::array();
  for (int id : s.to_vector()) out.push_back(inst.label(id));
  return out;
}

json pairs(const Instance& inst, const std::vector<std::pair<int, int>>& rel) {
  json out = json::array();
  for (auto [a, b] : rel) out.push_back({inst.label(a), inst.label(b)});
  return out;
}

json pair_json(SplittingPair pr) { return {pr.r, pr.s}; }

json word_json(const Instance& inst, const LinearExtension& s) {
  std::string w;
  for (int e : s.word()) {
    if (!w.empty()) w += ' ';
    w += inst.label(e);
  }
  return w;
}

json variant_counts_json(const VariantCounts& vc) {
  json out;
  for (Variant v : kVariants) out[std::string(variant_name(v))] = big(vc[v]);
  return out;
}

json cells_json(const DecompositionTable& t) {
  json out;
  const char* rel[] = {"inc", "cmp"};
  for (Variant v : kVariants) {
    json cells;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        cells[std::string(rel[a]) + "," + rel[b]] = big(t.at(v, static_cast<Rel>(a), static_cast<Rel>(b)));
    out[std::string(variant_name(v))] = cells;
  }
  return out;
}

json part_json(const Instance& parent, const SplitPart& part) {
  Instance sub{part.poset, part.config, {}};
  for (int id : part.origin) sub.labels.push_back(id < 0 ? "*" : parent.label(id));
  json out = instance_to_json(sub);
  out["counts"] = variant_counts_json(variant_counts(part.poset, part.config));
  return out;
}

std::vector<Direction> family(const Poset& p, const ChainConfig& c) {
  std::vector<Direction> out;
  const std::vector<int> coords = alpha(p, c).to_vector();
  for (int a : coords) {
    out.push_back(Direction::plus(a));
    out.push_back(Direction::minus(a));
  }
  for (int a : coords)
    for (int b : coords)
      if (a != b) out.push_back(Direction::euv(a, b));
  return out;
}

}  // namespace

json counts_json(const Instance& inst) {
  return {{"counts", variant_counts_json(variant_counts(inst.poset, inst.config))}};
}

json extensions_json(const Instance& inst, std::optional<Variant> only) {
  json out;
  for (Variant v : kVariants) {
    if (only && *only != v) continue;
    json words = json::array();
    for_each_extension(inst.poset, inst.config, v, [&](const LinearExtension& s) {
      words.push_back(word_json(inst, s));
      return true;
    });
    out[std::string(variant_name(v))] = words;
  }
  return out;
}

json classify_json(const Instance& inst) {
  const Poset& p = inst.poset;
  const ChainConfig& c = inst.config;
  json out;
  out["class"] = count(p, c, Variant::Equal) > 0 ? json(class_name(classify(p, c))) : json(nullptr);
  json sharp = json::array();
  for (SplittingPair pr : sharp_critical_pairs(p, c)) sharp.push_back(pair_json(pr));
  out["sharp_critical_pairs"] = sharp;
  auto mp = maximal_splitting_pair(p, c);
  out["maximal_pair"] = mp ? pair_json(mp->pair) : json(nullptr);
  return out;
}

json closure_json(const Instance& inst) {
  const ClosureResult cl = closure(inst.poset, inst.config);
  Instance closed{cl.closed, inst.config, inst.labels};
  return {{"added_covers", pairs(inst, cl.added_covers)},
          {"added_relations", pairs(inst, cl.added_relations)},
          {"closed", instance_to_json(closed)}};
}

json split_json(const Instance& inst, SplittingPair pr) {
  const SplitResult s = split(inst.poset, inst.config, pr);
  const SplitReport rep = verify_split_reduction(inst.poset, inst.config, pr);
  return {{"pair", pair_json(pr)},
          {"case", s.split_case},
          {"rigid", s.rigid},
          {"part1", part_json(inst, s.part1)},
          {"part2", part_json(inst, s.part2)},
          {"parent_counts", variant_counts_json(rep.parent)},
          {"product_identity", rep.product_identity},
          {"parent_equality", rep.parent_equality},
          {"parts_equality", rep.parts_equality},
          {"claim_holds", rep.claim_holds}};
}

json range_json(const Instance& inst) {
  json rows = json::array();
  for (const ElementRange& e : profile(inst.poset, inst.config)) {
    json row{{"element", inst.label(e.element)}, {"i_max", e.i_max}, {"i_min", e.i_min}};
    for (Variant v : kVariants) {
      const int vi = index_of(v);
      json b{{"l", e.bounds[vi].l}, {"u", e.bounds[vi].u}};
      b["m_min"] = e.m_min[vi] ? json(*e.m_min[vi]) : json(nullptr);
      b["m_max"] = e.m_max[vi] ? json(*e.m_max[vi]) : json(nullptr);
      row[std::string(variant_name(v))] = b;
    }
    rows.push_back(row);
  }
  return {{"elements", rows}};
}

json extreme_dirs_json(const Instance& inst) {
  const Poset& p = inst.poset;
  const ChainConfig& c = inst.config;
  std::map<Direction, std::vector<CertifiedDirection>> by_dir;
  if (count(p, c, Variant::Equal) > 0)
    for (const CertifiedDirection& d : certified_directions(p, c)) by_dir[d.direction].push_back(d);
  auto clauses = [&](const Direction& d) {
    json out = json::array();
    auto it = by_dir.find(d);
    if (it != by_dir.end())
      for (const CertifiedDirection& cd : it->second) {
        json entry{{"clause", std::string(1, clause_letter(cd.clause))}};
        if (cd.m >= 0) entry["m"] = cd.m;
        out.push_back(entry);
      }
    return out;
  };
  json extreme = json::array(), failing = json::array();
  for (const Direction& d : family(p, c)) {
    const bool ok = is_extreme(p, c, d);
    if (ok) extreme.push_back({{"direction", direction_text(d, &inst)}, {"clauses", clauses(d)}});
    else if (by_dir.contains(d))
      failing.push_back({{"direction", direction_text(d, &inst)}, {"clauses", clauses(d)}});
  }
  return {{"extreme", extreme},
          {"certified_not_extreme", failing},
          {"critical_regime", count(p, c, Variant::Equal) > 0 && critical_regime(p, c)}};
}

json analyze_json(const Instance& inst, bool auto_closure) {
  const Poset& p = inst.poset;
  const ChainConfig& c = inst.config;
  json out;
  out["instance"] = instance_to_json(inst);

  const StanleyVerdict sv = stanley_verdict(p, c);
  out["verdict"] = {{"counts", variant_counts_json(sv.counts)},
                    {"relation", relation_name(sv.relation)},
                    {"inequality_holds", sv.inequality_holds}};
  auto w = trivial_witness(p, c);
  out["trivial_witness"] = w ? pair_json(*w) : json(nullptr);

  // Without a distinguished element only the counts are defined.
  if (!c.has_ell()) return out;

  const bool has_equal = sv.counts[Variant::Equal] > 0;
  if (has_equal) {
    const CharacterizationReport r = characterize(p, c, auto_closure);
    out["class"] = class_name(r.cls);
    out["characterization"] = {{"closure_applied", r.closure_applied},
                               {"closure_added_covers", pairs(inst, r.closure_added)},
                               {"equality", r.equality},
                               {"balance", r.balance},
                               {"supercritical_iii", r.supercritical_iii},
                               {"critical_iii", r.critical_iii},
                               {"n1", r.n1 ? big(*r.n1) : json(nullptr)},
                               {"n2", r.n2 ? big(*r.n2) : json(nullptr)},
                               {"companion_incomparability", r.companion_incomparability},
                               {"posetchar", r.posetchar},
                               {"cells", cells_json(r.cells)}};
    json violations = json::array();
    for (const AuditViolation& v : equivalence_audit(r).violations)
      violations.push_back({{"topic", audit_topic_name(v.topic)}, {"what", v.what}});
    out["audit"] = violations;
  } else {
    out["class"] = nullptr;
    out["characterization"] = nullptr;
    out["audit"] = json::array();
  }

  json crit = classify_json(inst);
  crit["critical_regime"] = has_equal && critical_regime(p, c);
  if (auto mp = maximal_splitting_pair(p, c)) {
    crit["beta_max"] = names(inst, mp->beta_max);
    crit["remainder"] = names(inst, mp->remainder);
  }
  crit.erase("class");
  out["criticality"] = crit;

  const json dirs = extreme_dirs_json(inst);
  out["extreme_directions"] = dirs["extreme"];
  out["certified_not_extreme"] = dirs["certified_not_extreme"];

  // For each l-splitting pair, how many extensions of each set have a given number of mixed elements.
  json census = json::array();
  std::array<std::vector<LinearExtension>, 3> sets;
  for (Variant v : kVariants) sets[index_of(v)] = enumerate(p, c, v);
  for (SplittingPair pr : ell_splitting_pairs(c)) {
    json entry{{"pair", pair_json(pr)}, {"excess", pair_excess(p, c, pr)}};
    for (Variant v : kVariants) {
      std::map<int, long long> hist;
      for (const LinearExtension& s : sets[index_of(v)]) ++hist[mixed_elements(p, c, s, pr).size()];
      json h = json::object();
      for (auto [size, cnt] : hist) h[std::to_string(size)] = cnt;
      entry[std::string(variant_name(v))] = h;
    }
    census.push_back(entry);
  }
  out["mixed_elements"] = census;
  return out;
}

}  // namespace stanley
