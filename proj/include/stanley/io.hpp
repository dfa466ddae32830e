#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "stanley/poset.hpp"

namespace stanley {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// {"n": int, "relations": [[a,b],...], "chain": [...], "positions": [...], "ell": int}
// plus an optional "labels" array of display names.
Instance parse_instance_json(const std::string& text);

// One "a < b" per line (longer chains "a < b < c" allowed), '#' comments, and
// header lines "n:", "labels:", "chain:", "positions:", "ell:". Tokens are
// labels; bare integers are ids when no labels header names them.
Instance parse_instance_text(const std::string& text);

// Dispatches on the first non-blank character ('{' selects JSON).
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

// Relations are written as cover pairs; labels only when present.
nlohmann::json instance_to_json(const Instance& inst);

}  // namespace stanley
