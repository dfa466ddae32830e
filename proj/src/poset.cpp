#include "stanley/poset.hpp"

#include <algorithm>

namespace stanley {

ElementSet ElementSet::of(std::initializer_list<int> ids) {
  ElementSet s;
  for (int id : ids) s.insert(id);
  return s;
}

std::vector<int> ElementSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Poset Poset::build(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 0 || n > kMaxElements) {
    throw PosetError(PosetError::Kind::TooLarge,
                     "poset size " + std::to_string(n) + " outside [0," + std::to_string(kMaxElements) + "]");
  }
  std::vector<Mask> up(n, 0);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw PosetError(PosetError::Kind::OutOfRange,
                       "relation (" + std::to_string(a) + "," + std::to_string(b) + ") references an id outside [0," +
                           std::to_string(n) + ")");
    }
    up[a] |= bit(b);
  }
  // Warshall over bitrows.
  for (int mid = 0; mid < n; ++mid) {
    for (int a = 0; a < n; ++a) {
      if ((up[a] >> mid) & 1U) up[a] |= up[mid];
    }
  }
  for (int a = 0; a < n; ++a) {
    if ((up[a] >> a) & 1U) {
      throw PosetError(PosetError::Kind::CycleDetected,
                       "relation has a directed cycle through element " + std::to_string(a));
    }
  }
  return from_closed_rows(std::move(up));
}

Poset Poset::from_closed_rows(std::vector<Mask> up) {
  Poset p;
  p.n_ = static_cast<int>(up.size());
  p.down_.assign(p.n_, 0);
  for (int a = 0; a < p.n_; ++a) {
    for (Mask m = up[a]; m != 0; m &= m - 1) p.down_[std::countr_zero(m)] |= bit(a);
  }
  p.up_ = std::move(up);
  return p;
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (Mask m = up_[a]; m != 0; m &= m - 1) out.emplace_back(a, std::countr_zero(m));
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (Mask m = up_[a]; m != 0; m &= m - 1) {
      int b = std::countr_zero(m);
      if ((up_[a] & down_[b]) == 0) out.emplace_back(a, b);
    }
  }
  return out;
}

int Poset::relation_count() const {
  int total = 0;
  for (Mask row : up_) total += std::popcount(row);
  return total;
}

ElementSet between(const Poset& p, Endpoint a, Endpoint b) {
  using K = Endpoint::Kind;
  if (a.kind == K::Top || b.kind == K::Bottom) return {};
  Mask lo = a.kind == K::Bottom ? low_bits(p.size()) : p.above(a.id);
  Mask hi = b.kind == K::Top ? low_bits(p.size()) : p.below(b.id);
  return ElementSet(lo & hi);
}

bool covers(const Poset& p, int a, int b) {
  return p.less(a, b) && between(p, Endpoint::element(a), Endpoint::element(b)).empty();
}

int ChainConfig::position(int j, int n) const {
  if (j <= 0) return 0;
  if (j > k()) return n + 1;
  return positions.at(j - 1);
}

Endpoint ChainConfig::point(int j) const {
  if (j <= 0) return Endpoint::bottom();
  if (j > k()) return Endpoint::top();
  return Endpoint::element(chain.at(j - 1));
}

ElementSet ChainConfig::chain_set() const {
  ElementSet s;
  for (int x : chain) s.insert(x);
  return s;
}

ConfigCheck validate_config(const Poset& p, const ChainConfig& c) {
  const int n = p.size();
  const int k = c.k();
  auto fail = [](std::string why) { return ConfigCheck{false, std::move(why)}; };

  if (static_cast<int>(c.positions.size()) != k) {
    return fail("chain has " + std::to_string(k) + " elements but " + std::to_string(c.positions.size()) +
                " positions were given");
  }
  Mask seen = 0;
  for (int x : c.chain) {
    if (x < 0 || x >= n) return fail("chain element " + std::to_string(x) + " is not an element id");
    if ((seen >> x) & 1U) return fail("chain element " + std::to_string(x) + " repeats");
    seen |= bit(x);
  }
  for (int j = 1; j < k; ++j) {
    if (!p.less(c.x(j), c.x(j + 1))) {
      return fail("chain is not increasing: x_" + std::to_string(j) + " < x_" + std::to_string(j + 1) + " fails");
    }
  }
  for (int j = 1; j <= k; ++j) {
    int i = c.position(j, n);
    if (i < 1 || i > n) return fail("position i_" + std::to_string(j) + "=" + std::to_string(i) + " outside [1,n]");
    if (j > 1 && c.position(j - 1, n) >= i) return fail("positions are not strictly increasing at i_" + std::to_string(j));
  }
  if (c.ell == 0) return {};
  if (c.ell < 1 || c.ell > k) return fail("ell=" + std::to_string(c.ell) + " outside [1,k]");
  const int lo = c.position(c.ell - 1, n);
  const int mid = c.position(c.ell, n);
  const int hi = c.position(c.ell + 1, n);
  if (!(lo + 1 < mid)) return fail("window violated: i_{ell-1}+1 < i_ell fails");
  if (!(mid < hi - 1)) return fail("window violated: i_ell < i_{ell+1}-1 fails");
  return {};
}

ElementSet alpha(const Poset& p, const ChainConfig& c) { return p.all() - c.chain_set(); }

std::string Instance::label(int id) const {
  if (id >= 0 && id < static_cast<int>(labels.size()) && !labels[id].empty()) return labels[id];
  return std::to_string(id);
}

}  // namespace stanley
