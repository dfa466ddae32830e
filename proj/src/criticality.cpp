#include "stanley/criticality.hpp"

#include <algorithm>

namespace stanley {

namespace {

void require_ell(const ChainConfig& c) {
  if (!c.has_ell()) throw std::invalid_argument("criticality needs a distinguished chain element");
}

bool in_pair_window(const ChainConfig& c, int j) { return c.has_ell() && (j == c.ell - 1 || j == c.ell); }

// Support indices in increasing order, framed by -1 and k+1.
std::vector<int> framed(const ChainConfig& c, Support s) {
  std::vector<int> js{-1};
  for (int j = 0; j <= c.k(); ++j)
    if ((s >> j) & 1U) js.push_back(j);
  js.push_back(c.k() + 1);
  return js;
}

}  // namespace

int CollectionDescriptor::size() const {
  int total = 0;
  for (int v : kappa) total += v;
  return total;
}

Support CollectionDescriptor::support() const {
  Support s = 0;
  for (std::size_t j = 0; j < kappa.size(); ++j)
    if (kappa[j] > 0) s |= Support{1} << j;
  return s;
}

int canonical_multiplicity(int n, const ChainConfig& c, int j) {
  return c.position(j + 1, n) - c.position(j, n) - 1 - (in_pair_window(c, j) ? 1 : 0);
}

CollectionDescriptor canonical_collection(int n, const ChainConfig& c) {
  CollectionDescriptor K;
  for (int j = 0; j <= c.k(); ++j) K.kappa.push_back(canonical_multiplicity(n, c, j));
  return K;
}

std::vector<Support> admissible_supports(int n, const ChainConfig& c) {
  if (c.k() > 30) throw std::invalid_argument("chain too long for support enumeration");
  Support positive = canonical_collection(n, c).support();
  std::vector<Support> out;
  for (Support s = 1; s < (Support{1} << (c.k() + 1)); ++s)
    if ((s & ~positive) == 0) out.push_back(s);
  return out;
}

ElementSet beta(const Poset& p, const ChainConfig& c, int i) {
  if (i < 0 || i > c.k()) return {};
  ElementSet a = alpha(p, c);
  Mask drop = 0;
  if (i >= 1) drop |= p.below(c.x(i));
  if (i + 1 <= c.k()) drop |= p.above(c.x(i + 1));
  return a - ElementSet(drop);
}

ElementSet beta_of(const Poset& p, const ChainConfig& c, Support s) {
  ElementSet out;
  for (int j = 0; j <= c.k(); ++j)
    if ((s >> j) & 1U) out = out | beta(p, c, j);
  return out;
}

int support_dim(const Poset& p, const ChainConfig& c, Support s) {
  if (s == 0) throw CriticalityError(CriticalityError::Kind::EmptyCollection, "empty collection");
  ElementSet a = alpha(p, c);
  std::vector<int> js = framed(c, s);
  int dim = p.size() - c.k();
  for (std::size_t q = 0; q + 1 < js.size(); ++q) {
    dim -= (between(p, c.point(js[q] + 1), c.point(js[q + 1])) & a).size();
  }
  return dim;
}

int collection_dim(const Poset& p, const ChainConfig& c, const CollectionDescriptor& K) {
  return support_dim(p, c, K.support());
}

bool dimension_condition(const Poset& p, const ChainConfig& c, int excess) {
  require_ell(c);
  const int n = p.size();
  CollectionDescriptor full = canonical_collection(n, c);
  for (Support s : admissible_supports(n, c)) {
    int size = 0;
    for (int j = 0; j <= c.k(); ++j)
      if ((s >> j) & 1U) size += full.kappa[j];
    if (support_dim(p, c, s) < size + excess) return false;
  }
  return true;
}

bool inequality_condition(const Poset& p, const ChainConfig& c, int excess) {
  require_ell(c);
  const int n = p.size();
  for (Support s : admissible_supports(n, c)) {
    std::vector<int> js = framed(c, s);
    int lhs = 0;
    int rhs = -excess;
    for (std::size_t q = 1; q + 1 < js.size(); ++q) rhs += in_pair_window(c, js[q]) ? 1 : 0;
    for (std::size_t q = 0; q + 1 < js.size(); ++q) {
      const int lo = js[q] + 1, hi = js[q + 1];
      if (lo >= hi) continue;
      lhs += between(p, c.point(lo), c.point(hi)).size();
      rhs += c.position(hi, n) - c.position(lo, n) - 1;
    }
    if (lhs > rhs) return false;
  }
  return true;
}

bool slack_bound(const Poset& p, const ChainConfig& c, int slack) {
  const int n = p.size();
  for (SplittingPair pr : splitting_pairs(c))
    if (between(p, c.point(pr.r + 1), c.point(pr.s)).size() > c.position(pr.s, n) - c.position(pr.r + 1, n) - slack)
      return false;
  return true;
}

bool critical_regime(const Poset& p, const ChainConfig& c) { return dimension_condition(p, c, 1) && slack_bound(p, c, 2); }

std::string_view class_name(CriticalityClass c) {
  switch (c) {
    case CriticalityClass::Supercritical:
      return "supercritical";
    case CriticalityClass::CriticalNotSuper:
      return "critical";
    case CriticalityClass::SubcriticalOnly:
      return "subcritical";
    case CriticalityClass::NotSubcritical:
      return "not-subcritical";
  }
  return "?";
}

CriticalityClass criticality_class(const Poset& p, const ChainConfig& c) {
  if (inequality_condition(p, c, 2)) return CriticalityClass::Supercritical;
  if (inequality_condition(p, c, 1)) return CriticalityClass::CriticalNotSuper;
  if (inequality_condition(p, c, 0)) return CriticalityClass::SubcriticalOnly;
  return CriticalityClass::NotSubcritical;
}

CriticalityClass classify(const Poset& p, const ChainConfig& c) {
  require_ell(c);
  if (count(p, c, Variant::Equal) == 0)
    throw CriticalityError(CriticalityError::Kind::Undefined, "no extension places x_ell at i_ell");
  return criticality_class(p, c);
}

std::vector<SplittingPair> splitting_pairs(const ChainConfig& c) {
  const int k = c.k();
  std::vector<SplittingPair> out;
  for (int r = -1; r <= k; ++r)
    for (int s = r + 2; s <= k + 1; ++s)
      if (!(r + 1 == 0 && s == k + 1)) out.push_back({r, s});
  return out;
}

bool is_ell_splitting(const ChainConfig& c, SplittingPair pr) {
  return c.has_ell() && pr.r + 1 >= 0 && pr.r + 1 < pr.s && pr.s <= c.k() + 1 && !(pr.r + 1 == 0 && pr.s == c.k() + 1) &&
         pr.r + 1 < c.ell && c.ell < pr.s;
}

std::vector<SplittingPair> ell_splitting_pairs(const ChainConfig& c) {
  std::vector<SplittingPair> out;
  for (SplittingPair pr : splitting_pairs(c))
    if (is_ell_splitting(c, pr)) out.push_back(pr);
  return out;
}

Support pair_support(const ChainConfig& c, SplittingPair pr) {
  Support s = 0;
  for (int j = 0; j <= c.k(); ++j)
    if (j <= pr.r || j >= pr.s) s |= Support{1} << j;
  return s;
}

int pair_excess(const Poset& p, const ChainConfig& c, SplittingPair pr) {
  const int n = p.size();
  Support s = pair_support(c, pr);
  int size = 0;
  for (int j = 0; j <= c.k(); ++j)
    if ((s >> j) & 1U) size += canonical_multiplicity(n, c, j);
  return support_dim(p, c, s) - size;
}

std::string_view pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::Supercritical:
      return "supercritical";
    case PairClass::SharpCritical:
      return "sharp-critical";
    case PairClass::Other:
      return "other";
  }
  return "?";
}

PairClass pair_criticality(const Poset& p, const ChainConfig& c, SplittingPair pr) {
  if (!is_ell_splitting(c, pr))
    throw CriticalityError(CriticalityError::Kind::NotEllSplitting,
                           "(" + std::to_string(pr.r) + "," + std::to_string(pr.s) + ") is not ell-splitting");
  const int e = pair_excess(p, c, pr);
  if (e >= 2) return PairClass::Supercritical;
  if (e == 1) return PairClass::SharpCritical;
  return PairClass::Other;
}

std::vector<SplittingPair> sharp_critical_pairs(const Poset& p, const ChainConfig& c) {
  std::vector<SplittingPair> out;
  for (SplittingPair pr : ell_splitting_pairs(c))
    if (pair_criticality(p, c, pr) == PairClass::SharpCritical) out.push_back(pr);
  return out;
}

std::optional<MaximalPair> maximal_splitting_pair(const Poset& p, const ChainConfig& c) {
  std::vector<SplittingPair> sharp = sharp_critical_pairs(p, c);
  if (sharp.empty()) return std::nullopt;
  MaximalPair m;
  m.pair = sharp.front();
  for (SplittingPair pr : sharp) {
    m.pair.r = std::max(m.pair.r, pr.r);
    m.pair.s = std::min(m.pair.s, pr.s);
  }
  Support s = 0;
  for (int j = 0; j <= c.k(); ++j)
    if (j <= m.pair.r || j >= m.pair.s) s |= Support{1} << j;
  m.beta_max = beta_of(p, c, s);
  m.remainder = between(p, c.point(m.pair.r + 1), c.point(m.pair.s)) & alpha(p, c);
  return m;
}

ElementSet mixed_elements(const Poset& p, const ChainConfig& c, const LinearExtension& sigma, SplittingPair pr) {
  const int n = p.size();
  const int lo = std::max(c.position(pr.r + 1, n), 1);
  const int hi = std::min(c.position(pr.s, n), n);
  // Candidates lie outside the chain, so they never occupy a slot held by x_{r+1}..x_s.
  ElementSet out;
  for (int y : (beta(p, c, pr.r) | beta(p, c, pr.s)).to_vector()) {
    const int q = sigma.placement[y];
    if (q >= lo && q <= hi) out.insert(y);
  }
  return out;
}

}  // namespace stanley
