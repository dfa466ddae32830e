#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stanley/extremal.hpp"
#include "stanley/geometry.hpp"
#include "stanley/io.hpp"
#include "stanley/report.hpp"
#include "stanley/sweep.hpp"
#include "stanley/transforms.hpp"

using json = nlohmann::json;
using namespace stanley;

namespace {

enum Exit { kOk = 0, kAnomaly = 1, kUsage = 2, kCap = 3, kFailure = 4 };

struct Globals {
  std::string format = "json";
  bool no_closure = false;
  int jobs = 0;
  std::uint64_t seed = 0;
  int max_n = 7;
};

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

// "path<TAB>value" lines; arrays of scalars collapse to comma lists.
void flatten(const json& v, const std::string& path, std::ostream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && !e.is_structured();
    if (flat) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : ",") + scalar_text(e);
      out << path << '\t' << joined << '\n';
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), out);
    return;
  }
  out << path << '\t' << scalar_text(v) << '\n';
}

void print(const Globals& g, const json& doc) {
  if (g.format == "tsv") flatten(doc, "", std::cout);
  else std::cout << doc.dump(2) << '\n';
}

Instance load(const Globals& g, const std::string& path) {
  Instance inst = load_instance(path);
  if (inst.n() > g.max_n)
    throw SweepError(SweepError::Kind::CapExceeded,
                     path + " has " + std::to_string(inst.n()) + " elements, above --max-n " + std::to_string(g.max_n));
  if (ConfigCheck ok = validate_config(inst.poset, inst.config); !ok)
    throw std::invalid_argument(path + ": " + ok.reason);
  return inst;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

std::string finding_row(const Finding& f) {
  const json j = finding_to_json(f);
  std::string rel;
  for (const auto& r : j["relations"]) rel += (rel.empty() ? "" : ",") + r[0].dump() + "<" + r[1].dump();
  std::string anomalies;
  for (const auto& a : j["anomalies"]) anomalies += (anomalies.empty() ? "" : ";") + a["suite"].get<std::string>();
  std::ostringstream out;
  auto list = [](const json& a) {
    std::string s;
    for (const auto& e : a) s += (s.empty() ? "" : ",") + e.dump();
    return s;
  };
  out << j["n"] << '\t' << (rel.empty() ? "-" : rel) << '\t' << list(j["chain"]) << '\t' << list(j["positions"]) << '\t'
      << j["ell"] << '\t' << list(j["counts"]) << '\t' << scalar_text(j["relation"]) << '\t' << scalar_text(j["class"])
      << '\t' << scalar_text(j["supercritical_iii"]) << '\t' << scalar_text(j["critical_iii"]) << '\t'
      << (anomalies.empty() ? "-" : anomalies);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear extensions with pinned chains: Stanley's inequality, its extremals, and the sweep harness"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--no-closure", g.no_closure, "Analyse the input poset as given instead of its closure");
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps (0: one per core)");
  app.add_option("--seed", g.seed, "Seed for sampled sweep sizes");
  app.add_option("--max-n", g.max_n, "Largest poset size accepted");

  std::string file;
  auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", file, "Instance file (JSON or edge list)")->required(); };

  auto* analyze = app.add_subcommand("analyze", "Full JSON report for one instance");
  add_file(analyze);

  SweepSpec spec;
  std::string checks = "all", labeling = "natural", positions, emit = "all", output;
  int n_max = -1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Enumerate instances and run the property suites");
  sweep_cmd->add_option("--n", n_max, "Shorthand for --n-min 1 --n-max N");
  sweep_cmd->add_option("--n-min", spec.n_min, "Smallest poset size");
  sweep_cmd->add_option("--n-max", spec.n_max, "Largest poset size");
  sweep_cmd->add_option("--k-min", spec.k_min, "Shortest chain");
  sweep_cmd->add_option("--k-max", spec.k_max, "Longest chain (-1: no limit)");
  sweep_cmd->add_option("--positions", positions, "Only this position vector, e.g. 2,4,6");
  sweep_cmd->add_option("--labeling", labeling, "Poset enumeration")
      ->check(CLI::IsMember({"natural", "labeled", "signature"}));
  sweep_cmd->add_option("--checks", checks, "Comma-separated suites or 'all'");
  sweep_cmd->add_option("--samples", spec.samples, "Instances drawn per sampled size");
  sweep_cmd->add_option("--exhaustive-limit", spec.exhaustive_limit, "Sizes above this are sampled");
  sweep_cmd->add_option("--emit", emit, "Findings to print")->check(CLI::IsMember({"all", "anomalies", "none"}));
  sweep_cmd->add_option("-o,--output", output, "Write findings here instead of stdout");

  auto* linext = app.add_subcommand("linext", "Linear extensions of the three sets");
  linext->require_subcommand(1);
  std::string variant;
  auto* list = linext->add_subcommand("list", "List the words of N_-, N_=, N_+");
  add_file(list);
  list->add_option("--variant", variant, "Only one set")->check(CLI::IsMember({"minus", "equal", "plus"}));
  auto* count_cmd = linext->add_subcommand("count", "Count N_-, N_=, N_+");
  add_file(count_cmd);

  auto* crit = app.add_subcommand("criticality", "Criticality of the polytope collection");
  crit->require_subcommand(1);
  auto* classify_cmd = crit->add_subcommand("classify", "Class, sharp-critical pairs and the maximal pair");
  add_file(classify_cmd);

  auto* transform = app.add_subcommand("transform", "Closure and splitting");
  transform->require_subcommand(1);
  auto* closure_cmd = transform->add_subcommand("closure", "Relations forced by every extension");
  add_file(closure_cmd);
  auto* split_cmd = transform->add_subcommand("split", "Split along a splitting pair");
  add_file(split_cmd);
  std::string pair_text;
  split_cmd->add_option("--pair", pair_text, "Splitting pair r,s")->required();

  auto* range = app.add_subcommand("range", "Placement ranges");
  range->require_subcommand(1);
  auto* profile_cmd = range->add_subcommand("profile", "Bounds and attained extremes per element");
  add_file(profile_cmd);

  auto* geometry = app.add_subcommand("geometry", "Order-polytope side");
  geometry->require_subcommand(1);
  auto* dirs_cmd = geometry->add_subcommand("extreme-dirs", "Extreme directions and their certifying clauses");
  add_file(dirs_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      print(g, analyze_json(load(g, file), !g.no_closure));
    } else if (list->parsed()) {
      const Instance inst = load(g, file);
      std::optional<Variant> only;
      for (Variant v : kVariants)
        if (variant == variant_name(v)) only = v;
      const json doc = extensions_json(inst, only);
      if (g.format == "tsv") {
        for (auto it = doc.begin(); it != doc.end(); ++it)
          for (const auto& w : it.value()) std::cout << it.key() << '\t' << w.get<std::string>() << '\n';
      } else {
        print(g, doc);
      }
    } else if (count_cmd->parsed()) {
      print(g, counts_json(load(g, file)));
    } else if (classify_cmd->parsed()) {
      print(g, classify_json(load(g, file)));
    } else if (closure_cmd->parsed()) {
      print(g, closure_json(load(g, file)));
    } else if (split_cmd->parsed()) {
      const std::vector<int> rs = int_list(pair_text);
      if (rs.size() != 2) throw std::invalid_argument("--pair expects r,s");
      print(g, split_json(load(g, file), SplittingPair{rs[0], rs[1]}));
    } else if (profile_cmd->parsed()) {
      const json doc = range_json(load(g, file));
      if (g.format == "tsv") {
        std::cout << "element\ti_max\ti_min";
        for (Variant v : kVariants)
          for (const char* f : {"l", "u", "m_min", "m_max"}) std::cout << '\t' << f << '_' << variant_name(v);
        std::cout << '\n';
        for (const auto& row : doc["elements"]) {
          std::cout << scalar_text(row["element"]) << '\t' << row["i_max"] << '\t' << row["i_min"];
          for (Variant v : kVariants)
            for (const char* f : {"l", "u", "m_min", "m_max"})
              std::cout << '\t' << scalar_text(row[std::string(variant_name(v))][f]);
          std::cout << '\n';
        }
      } else {
        print(g, doc);
      }
    } else if (dirs_cmd->parsed()) {
      const json doc = extreme_dirs_json(load(g, file));
      if (g.format == "tsv") {
        std::cout << "direction\tstatus\tclauses\n";
        for (const char* key : {"extreme", "certified_not_extreme"})
          for (const auto& d : doc[key]) {
            std::string cl;
            for (const auto& c : d["clauses"])
              cl += (cl.empty() ? "" : ",") + c["clause"].get<std::string>() + (c.contains("m") ? c["m"].dump() : "");
            std::cout << d["direction"].get<std::string>() << '\t' << key << '\t' << (cl.empty() ? "-" : cl) << '\n';
          }
      } else {
        print(g, doc);
      }
    } else if (sweep_cmd->parsed()) {
      if (n_max > 0) {
        spec.n_min = 1;
        spec.n_max = n_max;
      }
      spec.suites = parse_suites(checks);
      spec.labeling = labeling == "labeled" ? Labeling::Labeled
                      : labeling == "signature" ? Labeling::Signature
                                                : Labeling::Natural;
      spec.fixed_positions = int_list(positions);
      spec.jobs = g.jobs;
      spec.seed = g.seed;
      spec.max_n = g.max_n;
      spec.auto_closure = !g.no_closure;

      std::ofstream file_out;
      if (!output.empty()) {
        file_out.open(output);
        if (!file_out) throw std::runtime_error("cannot write " + output);
      }
      std::ostream& out = output.empty() ? std::cout : file_out;
      if (g.format == "tsv" && emit != "none")
        out << "n\trelations\tchain\tpositions\tell\tcounts\trelation\tclass\tsupercritical_iii\tcritical_iii\tanomalies\n";
      const SweepSummary summary = sweep(spec, [&](const Finding& f) {
        if (emit == "none" || (emit == "anomalies" && !f.anomaly())) return;
        if (g.format == "tsv") out << finding_row(f) << '\n';
        else out << finding_to_json(f).dump() << '\n';
      });
      json s = summary_to_json(summary);
      s["spec"] = spec_to_json(spec);
      if (g.format == "tsv") {
        out << "# summary\n";
        flatten(s, "", out);
      } else {
        out << s.dump() << '\n';
      }
      return summary.anomalous > 0 ? kAnomaly : kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const SweepError& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == SweepError::Kind::CapExceeded ? kCap : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
