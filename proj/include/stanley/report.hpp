#pragma once

#include <optional>

#include "json.hpp"
#include "stanley/criticality.hpp"
#include "stanley/linext.hpp"
#include "stanley/poset.hpp"

namespace stanley {

// JSON views of each operation, naming elements by their labels. These back
// the command-line tool and the Python module.

nlohmann::json counts_json(const Instance& inst);
// All three sets when `only` is empty.
nlohmann::json extensions_json(const Instance& inst, std::optional<Variant> only = std::nullopt);
// {"class", "sharp_critical_pairs", "maximal_pair"}; class is null when |N_=| = 0.
nlohmann::json classify_json(const Instance& inst);
nlohmann::json closure_json(const Instance& inst);
nlohmann::json split_json(const Instance& inst, SplittingPair pr);
nlohmann::json range_json(const Instance& inst);
// Every extreme direction of the +-e_j / e_uv family with the clauses certifying
// it, plus certified directions that fail the rank test.
nlohmann::json extreme_dirs_json(const Instance& inst);

// Counts, verdict, witness, class, characterization and audit, criticality,
// extreme directions, the maximal pair and the mixed-element census.
nlohmann::json analyze_json(const Instance& inst, bool auto_closure = true);

}  // namespace stanley
