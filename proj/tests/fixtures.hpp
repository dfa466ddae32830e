#pragma once

#include <string>
#include <vector>

#include "stanley/io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(STANLEY_FIXTURE_DIR) + "/" + name; }

inline stanley::Instance crit() { return stanley::load_instance(path("example_crit.json")); }
inline stanley::Instance closure_example() { return stanley::load_instance(path("example_closure.json")); }

// Element id for a label, or -1.
inline int id(const stanley::Instance& inst, const std::string& label) {
  for (int e = 0; e < inst.n(); ++e)
    if (inst.label(e) == label) return e;
  return -1;
}

inline std::string word_text(const stanley::Instance& inst, const std::vector<int>& word) {
  std::string out;
  for (int e : word) {
    if (!out.empty()) out += ' ';
    out += inst.label(e);
  }
  return out;
}

}  // namespace fixtures
