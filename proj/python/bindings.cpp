#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stanley/io.hpp"
#include "stanley/report.hpp"
#include "stanley/sweep.hpp"

namespace py = pybind11;
using namespace stanley;

namespace {

// Every entry point takes instance text (JSON or the line format) and returns
// a JSON string; the Python side decodes it.
Instance load(const std::string& text) {
  Instance inst = parse_instance(text);
  if (ConfigCheck ok = validate_config(inst.poset, inst.config); !ok) throw std::invalid_argument(ok.reason);
  return inst;
}

std::optional<Variant> variant_of(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  for (Variant v : kVariants)
    if (*name == variant_name(v)) return v;
  throw std::invalid_argument("unknown variant " + *name + " (expected minus, equal or plus)");
}

std::string run_sweep(int n_min, int n_max, int k_min, int k_max, const std::string& checks, const std::string& labeling,
                      long long samples, std::uint64_t seed, int jobs, bool closure, bool anomalies_only) {
  SweepSpec spec;
  spec.n_min = n_min;
  spec.n_max = n_max;
  spec.k_min = k_min;
  spec.k_max = k_max;
  spec.suites = parse_suites(checks);
  if (labeling == "natural") spec.labeling = Labeling::Natural;
  else if (labeling == "labeled") spec.labeling = Labeling::Labeled;
  else if (labeling == "signature") spec.labeling = Labeling::Signature;
  else throw std::invalid_argument("unknown labeling " + labeling);
  spec.samples = samples;
  spec.seed = seed;
  spec.jobs = jobs;
  spec.auto_closure = closure;
  nlohmann::json findings = nlohmann::json::array();
  SweepSummary s;
  {
    py::gil_scoped_release release;
    s = sweep(spec, [&](const Finding& f) {
      if (!anomalies_only || f.anomaly()) findings.push_back(finding_to_json(f));
    });
  }
  nlohmann::json summary = summary_to_json(s);
  summary["spec"] = spec_to_json(spec);
  return nlohmann::json{{"findings", findings}, {"summary", summary}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear extensions with pinned chains: counts, equality classes and sweeps.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SweepError>(m, "SweepError", PyExc_RuntimeError);

  m.def("counts", [](const std::string& t) { return counts_json(load(t)).dump(); });
  m.def("extensions", [](const std::string& t, std::optional<std::string> v) {
    return extensions_json(load(t), variant_of(v)).dump();
  }, py::arg("text"), py::arg("variant") = py::none());
  m.def("classify", [](const std::string& t) { return classify_json(load(t)).dump(); });
  m.def("closure", [](const std::string& t) { return closure_json(load(t)).dump(); });
  m.def("split", [](const std::string& t, int r, int s) { return split_json(load(t), SplittingPair{r, s}).dump(); });
  m.def("range_profile", [](const std::string& t) { return range_json(load(t)).dump(); });
  m.def("extreme_dirs", [](const std::string& t) { return extreme_dirs_json(load(t)).dump(); });
  m.def("analyze", [](const std::string& t, bool closure) { return analyze_json(load(t), closure).dump(); },
        py::arg("text"), py::arg("closure") = true);
  m.def("evaluate", [](const std::string& t, const std::string& checks, bool closure) {
    const Instance inst = load(t);
    Finding f = evaluate(inst.poset, inst.config, parse_suites(checks), closure);
    f.instance.labels = inst.labels;
    return finding_to_json(f).dump();
  }, py::arg("text"), py::arg("checks") = "all", py::arg("closure") = true);
  m.def("sweep", &run_sweep, py::arg("n_min") = 1, py::arg("n_max") = 6, py::arg("k_min") = 1, py::arg("k_max") = -1,
        py::arg("checks") = "all", py::arg("labeling") = "natural", py::arg("samples") = 100000,
        py::arg("seed") = 0, py::arg("jobs") = 1, py::arg("closure") = true, py::arg("anomalies_only") = false);
}
