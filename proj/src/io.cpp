#include "stanley/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace stanley {

namespace {

using nlohmann::json;

// Maps a byte offset to a 1-based (line, column).
std::pair<int, int> locate(const std::string& text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::vector<int> int_array(const json& doc, const char* key) {
  std::vector<int> out;
  if (!doc.contains(key)) return out;
  for (const auto& v : doc.at(key)) out.push_back(v.get<int>());
  return out;
}

Instance finish(int n, const std::vector<std::pair<int, int>>& rel, ChainConfig config,
                std::vector<std::string> labels) {
  Instance inst;
  inst.poset = Poset::build(n, rel);
  inst.config = std::move(config);
  inst.labels = std::move(labels);
  return inst;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) {
    // Allow comma separated lists in headers.
    std::string cur;
    for (char ch : tok) {
      if (ch == ',') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

Instance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    // Keep only the library's description, after its own "...: " location prefix.
    std::string what = e.what();
    if (auto cut = what.rfind(": "); cut != std::string::npos) what = what.substr(cut + 2);
    throw ParseError(line, column, what);
  }
  try {
    if (!doc.is_object()) throw ParseError(1, 1, "top-level value must be an object");
    if (!doc.contains("n")) throw ParseError(1, 1, "missing key \"n\"");
    int n = doc.at("n").get<int>();
    std::vector<std::pair<int, int>> rel;
    if (doc.contains("relations")) {
      for (const auto& pair : doc.at("relations")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError(1, 1, "each relation must be a pair [a,b]");
        rel.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      }
    }
    ChainConfig config;
    config.chain = int_array(doc, "chain");
    config.positions = int_array(doc, "positions");
    config.ell = doc.value("ell", 0);
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
      for (const auto& v : doc.at("labels")) labels.push_back(v.get<std::string>());
      if (static_cast<int>(labels.size()) != n) throw ParseError(1, 1, "labels must have exactly n entries");
    }
    return finish(n, rel, std::move(config), std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(1, 1, e.what());
  }
}

Instance parse_instance_text(const std::string& text) {
  struct Token {
    std::string name;
    int line;
    int column;
  };
  std::vector<std::string> labels;
  bool labels_declared = false;
  int declared_n = -1;
  std::vector<std::pair<Token, Token>> edges;
  std::vector<Token> mentions;  // relation-line tokens in order of appearance
  std::vector<Token> chain_tokens;
  std::vector<int> positions;
  int ell = 0;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    auto colon = line.find(':');
    if (colon != std::string::npos) {
      std::string key = trim(line.substr(0, colon));
      std::vector<std::string> values = split_ws(line.substr(colon + 1));
      int column = static_cast<int>(colon) + 2;
      try {
        if (key == "n") {
          if (values.size() != 1 || !is_integer(values[0])) throw ParseError(line_no, column, "n expects one integer");
          declared_n = std::stoi(values[0]);
        } else if (key == "labels") {
          if (labels_declared) throw ParseError(line_no, 1, "labels header given twice");
          labels = values;
          labels_declared = true;
        } else if (key == "chain") {
          for (const auto& v : values) chain_tokens.push_back({v, line_no, column});
        } else if (key == "positions") {
          for (const auto& v : values) {
            if (!is_integer(v)) throw ParseError(line_no, column, "positions expects integers");
            positions.push_back(std::stoi(v));
          }
        } else if (key == "ell") {
          if (values.size() != 1 || !is_integer(values[0])) throw ParseError(line_no, column, "ell expects one integer");
          ell = std::stoi(values[0]);
        } else {
          throw ParseError(line_no, 1, "unknown header '" + key + "'");
        }
      } catch (const std::out_of_range&) {
        throw ParseError(line_no, column, "integer out of range");
      }
      continue;
    }
    // Relation line: tok < tok < ...
    std::vector<Token> toks;
    std::string cur;
    int cur_col = 0;
    bool expect_elem = true;
    for (std::size_t pos = 0; pos <= line.size(); ++pos) {
      char ch = pos < line.size() ? line[pos] : ' ';
      if (ch == '<' || std::isspace(static_cast<unsigned char>(ch))) {
        if (!cur.empty()) {
          if (!expect_elem) throw ParseError(line_no, cur_col, "expected '<' before '" + cur + "'");
          toks.push_back({cur, line_no, cur_col});
          cur.clear();
          expect_elem = false;
        }
        if (ch == '<') {
          if (expect_elem) throw ParseError(line_no, static_cast<int>(pos) + 1, "unexpected '<'");
          expect_elem = true;
        }
      } else if (ch == '>') {
        throw ParseError(line_no, static_cast<int>(pos) + 1, "only '<' relations are accepted");
      } else {
        if (cur.empty()) cur_col = static_cast<int>(pos) + 1;
        cur.push_back(ch);
      }
    }
    if (expect_elem) throw ParseError(line_no, static_cast<int>(line.size()) + 1, "relation ends with '<'");
    for (std::size_t t = 1; t < toks.size(); ++t) edges.emplace_back(toks[t - 1], toks[t]);
    mentions.insert(mentions.end(), toks.begin(), toks.end());
  }

  // Names mode unless every token is a bare integer and no labels were declared.
  bool names_mode = labels_declared;
  for (const auto& t : mentions) names_mode = names_mode || !is_integer(t.name);
  for (const auto& t : chain_tokens) names_mode = names_mode || !is_integer(t.name);

  std::map<std::string, int> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!ids.emplace(labels[i], static_cast<int>(i)).second) throw ParseError(1, 1, "duplicate label '" + labels[i] + "'");
  }
  auto resolve = [&](const Token& tok) -> int {
    if (!names_mode) return std::stoi(tok.name);
    auto it = ids.find(tok.name);
    if (it != ids.end()) return it->second;
    if (labels_declared) throw ParseError(tok.line, tok.column, "unknown element '" + tok.name + "'");
    int id = static_cast<int>(labels.size());
    labels.push_back(tok.name);
    ids.emplace(tok.name, id);
    return id;
  };

  int max_id = -1;
  for (const auto& t : mentions) max_id = std::max(max_id, resolve(t));
  std::vector<std::pair<int, int>> rel;
  for (const auto& [a, b] : edges) {
    int ia = resolve(a);
    rel.emplace_back(ia, resolve(b));
  }
  ChainConfig config;
  for (const auto& t : chain_tokens) config.chain.push_back(resolve(t));
  config.positions = positions;
  config.ell = ell;

  int n = declared_n;
  if (n < 0) {
    n = std::max(static_cast<int>(labels.size()), max_id + 1);
    for (int x : config.chain) n = std::max(n, x + 1);
  }
  if (static_cast<int>(labels.size()) > n) throw ParseError(line_no, 1, "more named elements than n");
  if (names_mode) {
    for (int id = static_cast<int>(labels.size()); id < n; ++id) labels.push_back(std::to_string(id));
  }
  return finish(n, rel, std::move(config), std::move(labels));
}

Instance parse_instance(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_instance_json(text);
  return parse_instance_text(text);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

nlohmann::json instance_to_json(const Instance& inst) {
  json doc;
  doc["n"] = inst.n();
  json rel = json::array();
  for (auto [a, b] : inst.poset.cover_relations()) rel.push_back({a, b});
  doc["relations"] = rel;
  doc["chain"] = inst.config.chain;
  doc["positions"] = inst.config.positions;
  doc["ell"] = inst.config.ell;
  if (!inst.labels.empty()) doc["labels"] = inst.labels;
  return doc;
}

}  // namespace stanley
