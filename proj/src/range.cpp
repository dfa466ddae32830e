#include "stanley/range.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stanley {

namespace {

void require_free(const ChainConfig& c, int y) {
  if (c.chain_set().contains(y)) throw std::invalid_argument("element " + std::to_string(y) + " is on the chain");
}

}  // namespace

int variant_position(const ChainConfig& c, int n, int j, Variant v) {
  return c.position(j, n) + (j == c.ell ? offset(v) : 0);
}

int i_max(const Poset& p, const ChainConfig& c, int y) {
  for (int j = c.k(); j >= 1; --j)
    if (p.less(c.x(j), y)) return j;
  return 0;
}

int i_min(const Poset& p, const ChainConfig& c, int y) {
  for (int j = 1; j <= c.k(); ++j)
    if (p.less(y, c.x(j))) return j;
  return c.k() + 1;
}

Bounds bounds(const Poset& p, const ChainConfig& c, int y, Variant v) {
  require_free(c, y);
  const int n = p.size();
  const Endpoint me = Endpoint::element(y);
  Bounds b{std::numeric_limits<int>::min(), std::numeric_limits<int>::max()};
  for (int r = 0; r <= i_max(p, c, y); ++r)
    b.l = std::max(b.l, variant_position(c, n, r, v) + between(p, c.point(r), me).size() + 1);
  for (int s = i_min(p, c, y); s <= c.k() + 1; ++s)
    b.u = std::min(b.u, variant_position(c, n, s, v) - between(p, me, c.point(s)).size() - 1);
  return b;
}

bool feasible(const Poset& p, const ChainConfig& c, int y, Variant v, int i) {
  const Bounds b = bounds(p, c, y, v);
  if (i < b.l || i > b.u) return false;
  for (int m = 1; m <= c.k(); ++m)
    if (variant_position(c, p.size(), m, v) == i) return false;
  return true;
}

std::vector<ElementRange> profile(const Poset& p, const ChainConfig& c) {
  const int n = p.size();
  const ElementSet chain = c.chain_set();
  std::vector<ElementRange> out;
  std::vector<int> slot(n, -1);
  for (int y = 0; y < n; ++y) {
    if (chain.contains(y)) continue;
    slot[y] = static_cast<int>(out.size());
    ElementRange e;
    e.element = y;
    e.i_max = i_max(p, c, y);
    e.i_min = i_min(p, c, y);
    for (Variant v : kVariants) e.bounds[index_of(v)] = bounds(p, c, y, v);
    out.push_back(e);
  }
  for (Variant v : kVariants) {
    const int vi = index_of(v);
    for_each_extension(p, c, v, [&](const LinearExtension& sigma) {
      for (int y = 0; y < n; ++y) {
        if (slot[y] < 0) continue;
        ElementRange& e = out[slot[y]];
        const int at = sigma.placement[y];
        if (!e.m_min[vi] || at < *e.m_min[vi]) e.m_min[vi] = at;
        if (!e.m_max[vi] || at > *e.m_max[vi]) e.m_max[vi] = at;
      }
      return true;
    });
  }
  return out;
}

}  // namespace stanley
