#pragma once

#include <array>
#include <optional>
#include <vector>

#include "stanley/linext.hpp"
#include "stanley/poset.hpp"

namespace stanley {

// Position of x_j under every extension in N_v: i_j, shifted by the variant
// offset when j == ell. Sentinels give 0 and n + 1.
int variant_position(const ChainConfig& c, int n, int j, Variant v);

// Largest j in 0..k with x_j < y and smallest j in 1..k+1 with y < x_j.
int i_max(const Poset& p, const ChainConfig& c, int y);
int i_min(const Poset& p, const ChainConfig& c, int y);

struct Bounds {
  int l = 0;
  int u = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// l = max over r <= i_max(y) of i_r + |{z : x_r < z <= y}|,
// u = min over s >= i_min(y) of i_s - |{z : y <= z < x_s}|, with variant positions.
// y must not be a chain element.
Bounds bounds(const Poset& p, const ChainConfig& c, int y, Variant v);

// Formula-side verdict: i lies in [l, u] and is not a chain slot of N_v.
// Necessary for some sigma in N_v to put y at i. It is also sufficient when y is
// comparable to both chain elements whose slots bracket i, and for the equal
// variant on a closed poset in equality, but not in general: with 0 < 1 and x_1 = 2
// pinned at 2, the formula lets 1 sit at slot 2 of N_- although N_- = {2 0 1}.
bool feasible(const Poset& p, const ChainConfig& c, int y, Variant v, int i);

struct ElementRange {
  int element = -1;
  int i_max = 0;
  int i_min = 0;
  std::array<Bounds, 3> bounds;
  // Attained extremes over N_v; empty when N_v is empty.
  std::array<std::optional<int>, 3> m_min, m_max;
};

// One entry per non-chain element, in id order. Extremes are found by enumeration.
std::vector<ElementRange> profile(const Poset& p, const ChainConfig& c);

}  // namespace stanley
