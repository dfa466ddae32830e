#include "stanley/transforms.hpp"

#include <algorithm>

namespace stanley {

namespace {

bool any_extension(const Poset& p, const ChainConfig& c) {
  for (Variant v : kVariants)
    if (count(p, c, v) > 0) return true;
  return false;
}

std::string pair_text(SplittingPair pr) { return "(" + std::to_string(pr.r) + "," + std::to_string(pr.s) + ")"; }

bool is_splitting(const ChainConfig& c, SplittingPair pr) {
  return pr.r + 1 >= 0 && pr.r + 1 < pr.s && pr.s <= c.k() + 1 && !(pr.r + 1 == 0 && pr.s == c.k() + 1);
}

// Induced order on `members` (listed in the new id order), plus extra pairs in new ids.
Poset induced(const Poset& p, const std::vector<int>& members, std::vector<std::pair<int, int>> extra, int size) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b)
      if (p.less(members[a], members[b])) extra.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Poset::build(size, extra);
}

}  // namespace

ClosureResult closure(const Poset& p, const ChainConfig& c) {
  if (!any_extension(p, c))
    throw TransformError(TransformError::Kind::NoExtensions, "N_- u N_= u N_+ is empty, so the closure is undefined");
  const int n = p.size();
  std::vector<std::pair<int, int>> rel = p.relations();
  const std::size_t original = rel.size();
  std::vector<std::pair<int, int>> base = rel;
  for (int w = 0; w < n; ++w)
    for (int z = 0; z < n; ++z) {
      if (w == z || p.comparable(w, z)) continue;
      std::vector<std::pair<int, int>> trial = base;
      trial.emplace_back(z, w);
      if (!any_extension(Poset::build(n, trial), c)) rel.emplace_back(w, z);
    }
  ClosureResult out;
  out.closed = Poset::build(n, rel);
  out.added_relations.assign(rel.begin() + static_cast<std::ptrdiff_t>(original), rel.end());
  std::sort(out.added_relations.begin(), out.added_relations.end());
  for (auto [a, b] : out.closed.cover_relations())
    if (!p.less(a, b)) out.added_covers.emplace_back(a, b);
  return out;
}

SplitResult split(const Poset& p, const ChainConfig& c, SplittingPair pr) {
  if (!is_splitting(c, pr)) throw TransformError(TransformError::Kind::NotSplitting, pair_text(pr) + " is not splitting");
  if (c.has_ell() && (c.ell == pr.r + 1 || c.ell == pr.s))
    throw TransformError(TransformError::Kind::EllOnBoundary, "x_ell is an endpoint of " + pair_text(pr));
  const int n = p.size();
  const int k = c.k();

  std::vector<bool> inside(n, false);
  for (int z = 0; z < n; ++z) {
    bool above = pr.r + 1 == 0 || c.x(pr.r + 1) == z || p.less(c.x(pr.r + 1), z);
    bool below = pr.s == k + 1 || c.x(pr.s) == z || p.less(z, c.x(pr.s));
    inside[z] = above && below;
  }
  for (int z = 0; z < n; ++z) {
    if (inside[z]) continue;
    bool low = false, high = false;
    for (int w = 0; w < n; ++w) {
      if (!inside[w]) continue;
      low = low || p.less(w, z);
      high = high || p.less(z, w);
    }
    if (low && high)
      throw TransformError(TransformError::Kind::Sandwich,
                           "element " + std::to_string(z) + " sits between two members of the interval");
  }

  const int first = std::max(pr.r + 1, 1);
  const int last = std::min(pr.s, k);
  const int lo = pr.r + 1 >= 1 ? c.position(pr.r + 1, n) : 1;
  const int hi = pr.s <= k ? c.position(pr.s, n) : n;

  SplitResult out;
  out.split_case = c.has_ell() && pr.r + 1 < c.ell && c.ell < pr.s ? 1 : 2;

  std::vector<int> local(n, -1);
  std::vector<int> m1, m2;
  for (int z = 0; z < n; ++z) {
    if (inside[z]) {
      local[z] = static_cast<int>(m1.size());
      m1.push_back(z);
    } else {
      local[z] = static_cast<int>(m2.size());
      m2.push_back(z);
    }
  }
  out.rigid = static_cast<int>(m1.size()) == hi - lo + 1;

  SplitPart& a = out.part1;
  a.origin = m1;
  a.poset = induced(p, m1, {}, static_cast<int>(m1.size()));
  for (int j = first; j <= last; ++j) {
    a.config.chain.push_back(local[c.x(j)]);
    a.config.positions.push_back(c.position(j, n) - lo + 1);
  }
  if (out.split_case == 1) a.config.ell = c.ell - first + 1;

  SplitPart& b = out.part2;
  b.origin = m2;
  b.origin.push_back(-1);
  out.compressed = static_cast<int>(m2.size());
  std::vector<std::pair<int, int>> extra;
  for (std::size_t t = 0; t < m2.size(); ++t) {
    const int z = m2[t];
    bool up = false, down = false;
    for (int w : m1) {
      up = up || p.less(w, z);
      down = down || p.less(z, w);
    }
    if (up) extra.emplace_back(out.compressed, static_cast<int>(t));
    if (down) extra.emplace_back(static_cast<int>(t), out.compressed);
  }
  b.poset = induced(p, m2, extra, static_cast<int>(m2.size()) + 1);
  for (int j = 1; j <= pr.r && j <= k; ++j) {
    b.config.chain.push_back(local[c.x(j)]);
    b.config.positions.push_back(c.position(j, n));
  }
  b.config.chain.push_back(out.compressed);
  b.config.positions.push_back(lo);
  for (int j = pr.s + 1; j <= k; ++j) {
    b.config.chain.push_back(local[c.x(j)]);
    b.config.positions.push_back(c.position(j, n) - (hi - lo));
  }
  if (out.split_case == 2 && c.has_ell()) {
    b.config.ell = c.ell <= pr.r ? c.ell : std::max(pr.r, 0) + 1 + (c.ell - pr.s);
  }
  return out;
}

VariantCounts variant_counts(const Poset& p, const ChainConfig& c) {
  VariantCounts out;
  for (Variant v : kVariants) out.n[index_of(v)] = count(p, c, v);
  return out;
}

SplitReport verify_split_reduction(const Poset& p, const ChainConfig& c, SplittingPair pr) {
  SplitResult s = split(p, c, pr);
  SplitReport rep;
  rep.pair = pr;
  rep.split_case = s.split_case;
  rep.rigid = s.rigid;
  rep.parent = variant_counts(p, c);
  rep.part1 = variant_counts(s.part1.poset, s.part1.config);
  rep.part2 = variant_counts(s.part2.poset, s.part2.config);
  rep.parent_equality = rep.parent.equality() && rep.parent[Variant::Equal] > 0;
  rep.parts_equality = rep.part1.equality() && rep.part2.equality();
  rep.product_identity = true;
  for (Variant v : kVariants) rep.product_identity = rep.product_identity && rep.parent[v] == rep.part1[v] * rep.part2[v];
  const int n = p.size();
  const int gap = between(p, c.point(pr.r + 1), c.point(pr.s)).size();
  const bool loose = gap <= c.position(pr.s, n) - c.position(pr.r + 1, n) - 2;
  rep.claim_holds = !rep.parent_equality || rep.parts_equality || loose;
  return rep;
}

std::optional<SplittingPair> subcritical_split_pair(const Poset& p, const ChainConfig& c) {
  const int n = p.size();
  CollectionDescriptor full = canonical_collection(n, c);
  for (Support s : admissible_supports(n, c)) {
    int size = 0;
    for (int j = 0; j <= c.k(); ++j)
      if ((s >> j) & 1U) size += full.kappa[j];
    if (support_dim(p, c, s) != size) continue;
    std::vector<int> js{-1};
    for (int j = 0; j <= c.k(); ++j)
      if ((s >> j) & 1U) js.push_back(j);
    js.push_back(c.k() + 1);
    for (std::size_t q = 0; q + 1 < js.size(); ++q) {
      SplittingPair pr{js[q], js[q + 1]};
      if (pr.r + 1 >= pr.s || !is_splitting(c, pr)) continue;
      if (c.ell == pr.r + 1 || c.ell == pr.s) continue;
      const int gap = between(p, c.point(pr.r + 1), c.point(pr.s)).size();
      if (gap == c.position(pr.s, n) - c.position(pr.r + 1, n) - 1) return pr;
    }
  }
  return std::nullopt;
}

}  // namespace stanley
