#pragma once

// Brute-force reference implementations used only by tests. Everything here
// is deliberately naive: permutations are filtered one by one and relations
// live in plain boolean matrices, sharing no code with the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "stanley/poset.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix closure_matrix(int n, const std::vector<std::pair<int, int>>& rel) {
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [a, b] : rel) m[a][b] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (m[a][b] && m[b][c] && !m[a][c]) {
            m[a][c] = true;
            changed = true;
          }
  }
  return m;
}

inline Matrix matrix_of(const stanley::Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size(), false));
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) m[a][b] = p.less(a, b);
  return m;
}

// word[pos-1] = element. Visits every linear extension of m.
inline void for_each_word(const Matrix& m, const std::function<void(const std::vector<int>&)>& f) {
  const int n = static_cast<int>(m.size());
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 0);
  do {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      for (int t = s + 1; t < n && ok; ++t)
        if (m[word[t]][word[s]]) ok = false;
    if (ok) f(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

inline int pos_of(const std::vector<int>& word, int e) {
  return static_cast<int>(std::find(word.begin(), word.end(), e) - word.begin()) + 1;
}

// offset in {-1,0,1}; ell == 0 means no shifted element.
inline bool in_variant(const std::vector<int>& word, const stanley::ChainConfig& c, int offset) {
  for (int j = 1; j <= c.k(); ++j) {
    int want = c.positions[j - 1] + (j == c.ell ? offset : 0);
    if (pos_of(word, c.chain[j - 1]) != want) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> words(const Matrix& m, const stanley::ChainConfig& c, int offset) {
  std::vector<std::vector<int>> out;
  for_each_word(m, [&](const std::vector<int>& w) {
    if (in_variant(w, c, offset)) out.push_back(w);
  });
  return out;
}

inline long long count(const Matrix& m, const stanley::ChainConfig& c, int offset) {
  return static_cast<long long>(words(m, c, offset).size());
}

// Every labeled poset on n elements, as closed relation lists. Generated by
// brute force over all subsets of ordered pairs, keeping the transitive,
// antisymmetric ones (n <= 4 keeps this cheap).
inline std::vector<std::vector<std::pair<int, int>>> all_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<std::vector<std::pair<int, int>>> out;
  const unsigned long total = 1UL << pairs.size();
  for (unsigned long s = 0; s < total; ++s) {
    Matrix m(n, std::vector<bool>(n, false));
    std::vector<std::pair<int, int>> rel;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if ((s >> t) & 1UL) {
        m[pairs[t].first][pairs[t].second] = true;
        rel.push_back(pairs[t]);
      }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (m[a][b] && m[b][a]) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (m[a][b] && m[b][c] && !m[a][c]) ok = false;
      }
    if (ok) out.push_back(rel);
  }
  return out;
}

// Closure by brute force: intersect the orders of every word in the three sets.
inline Matrix closure_of(const Matrix& m, const stanley::ChainConfig& c) {
  const int n = static_cast<int>(m.size());
  Matrix out(n, std::vector<bool>(n, true));
  for (int a = 0; a < n; ++a) out[a][a] = false;
  for (int off = -1; off <= 1; ++off) {
    for (const auto& w : words(m, c, off))
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (pos_of(w, a) > pos_of(w, b)) out[a][b] = false;
  }
  return out;
}

// Naturally labeled posets (a<b only when a<b as ids), closed. Much cheaper
// than all_posets and still covers every isomorphism class.
inline void for_each_natural_poset(int n, const std::function<void(const stanley::Poset&)>& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const unsigned long total = 1UL << pairs.size();
  for (unsigned long s = 0; s < total; ++s) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if ((s >> t) & 1UL) rel.push_back(pairs[t]);
    Matrix m = closure_matrix(n, rel);
    bool closed = true;
    for (std::size_t t = 0; t < pairs.size() && closed; ++t)
      if (m[pairs[t].first][pairs[t].second] != static_cast<bool>((s >> t) & 1UL)) closed = false;
    if (closed) f(stanley::Poset::build(n, rel));
  }
}

// Every chain/positions/ell configuration satisfying the window condition,
// including the k = 0 case (ell = 0) when include_empty is set.
inline void for_each_config(const stanley::Poset& p, const std::function<void(const stanley::ChainConfig&)>& f,
                            int max_k = 64) {
  const int n = p.size();
  std::vector<int> chain;
  std::function<void(int)> grow_chain = [&](int last) {
    const int k = static_cast<int>(chain.size());
    if (k >= 1) {
      // positions: all increasing k-subsets of [1,n]
      std::vector<int> pos;
      std::function<void(int)> grow_pos = [&](int from) {
        if (static_cast<int>(pos.size()) == k) {
          for (int ell = 1; ell <= k; ++ell) {
            int lo = ell >= 2 ? pos[ell - 2] : 0;
            int hi = ell < k ? pos[ell] : n + 1;
            if (lo + 1 < pos[ell - 1] && pos[ell - 1] < hi - 1) f(stanley::ChainConfig{chain, pos, ell});
          }
          return;
        }
        for (int q = from; q <= n; ++q) {
          pos.push_back(q);
          grow_pos(q + 1);
          pos.pop_back();
        }
      };
      grow_pos(1);
    }
    if (k == max_k) return;
    for (int e = 0; e < n; ++e) {
      if (last >= 0 && !p.less(last, e)) continue;
      chain.push_back(e);
      grow_chain(e);
      chain.pop_back();
    }
  };
  grow_chain(-1);
}

}  // namespace oracle
