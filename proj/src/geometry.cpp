#include "stanley/geometry.hpp"

#include <algorithm>

namespace stanley {

namespace {

ElementSet at_most(const Poset& p, int y) { return ElementSet(p.below(y) | bit(y)); }
ElementSet at_least(const Poset& p, int y) { return ElementSet(p.above(y) | bit(y)); }

void require_coordinate(const ChainConfig& c, int n, int id) {
  if (id < 0 || id >= n || c.chain_set().contains(id))
    throw GeometryError(GeometryError::Kind::UnsupportedDirection, "direction index " + std::to_string(id) + " is not a non-chain element");
}

BigInt factorial(int m) {
  BigInt f = 1;
  for (int t = 2; t <= m; ++t) f *= t;
  return f;
}

}  // namespace

std::string direction_text(const Direction& d, const Instance* names) {
  auto name = [&](int id) { return names ? names->label(id) : std::to_string(id); };
  switch (d.kind) {
    case Direction::Kind::PlusE: return "+e(" + name(d.j) + ")";
    case Direction::Kind::MinusE: return "-e(" + name(d.j) + ")";
    case Direction::Kind::Euv: return "e(" + name(d.u) + "," + name(d.v) + ")";
  }
  return "?";
}

FaceSpan face_span(const Poset& p, const ChainConfig& c, int i, const Direction& d) {
  const int n = p.size();
  const ElementSet a = alpha(p, c);
  const ElementSet b = beta(p, c, i);
  FaceSpan f;
  switch (d.kind) {
    case Direction::Kind::MinusE:
      require_coordinate(c, n, d.j);
      f.coords = b.contains(d.j) ? b - at_most(p, d.j) : b;
      return f;
    case Direction::Kind::PlusE:
      require_coordinate(c, n, d.j);
      f.coords = b.contains(d.j) ? b - at_least(p, d.j) : b;
      return f;
    case Direction::Kind::Euv: break;
  }
  require_coordinate(c, n, d.u);
  require_coordinate(c, n, d.v);
  if (d.u == d.v) throw GeometryError(GeometryError::Kind::UnsupportedDirection, "e_uv needs u != v");
  const bool in_u = b.contains(d.u), in_v = b.contains(d.v);
  if (!in_u && !in_v) {
    f.coords = b;
  } else if (in_u && !in_v) {
    f.coords = b - at_least(p, d.u);
  } else if (!in_u && in_v) {
    f.coords = b - at_most(p, d.v);
  } else if (p.less(d.u, d.v)) {
    // t_u = t_v forces the whole interval to one common value.
    f.tie = at_least(p, d.u) & at_most(p, d.v) & a;
    f.coords = b - f.tie;
  } else {
    f.coords = b - (at_least(p, d.u) | at_most(p, d.v));
  }
  return f;
}

int summed_rank(const std::vector<FaceSpan>& faces) {
  ElementSet all;
  for (const FaceSpan& f : faces) all = all | f.coords;
  bool extra = false;
  for (const FaceSpan& f : faces) extra = extra || (f.has_ouv() && !f.tie.subset_of(all));
  return all.size() + (extra ? 1 : 0);
}

bool is_extreme(const Poset& p, const ChainConfig& c, const Direction& d) {
  const int n = p.size();
  const CollectionDescriptor full = canonical_collection(n, c);
  std::vector<FaceSpan> per(c.k() + 1);
  for (int i = 0; i <= c.k(); ++i) per[i] = face_span(p, c, i, d);
  for (Support s : admissible_supports(n, c)) {
    std::vector<FaceSpan> faces;
    int size = 0;
    for (int i = 0; i <= c.k(); ++i)
      if ((s >> i) & 1U) {
        faces.push_back(per[i]);
        size += full.kappa[i];
      }
    if (summed_rank(faces) < size) return false;
  }
  return true;
}

char clause_letter(DirClause c) { return static_cast<char>('a' + static_cast<int>(c)); }

std::vector<CertifiedDirection> certified_directions(const Poset& p, const ChainConfig& c) {
  if (!c.has_ell()) throw std::invalid_argument("certified directions need a distinguished chain element");
  const int n = p.size();
  const int k = c.k();
  const int l = c.ell;
  const ElementSet chain = c.chain_set();
  auto pos = [&](int j) { return c.position(j, n); };
  auto above_x = [&](int m, int y) { return m == 0 || p.less(c.x(m), y); };
  auto below_x = [&](int m, int y) { return m == k + 1 || p.less(y, c.x(m)); };
  const std::optional<MaximalPair> maxp = maximal_splitting_pair(p, c);

  std::vector<CertifiedDirection> out;
  auto add = [&](Direction d, DirClause cl, int m) { out.push_back({d, cl, m}); };
  // Non-chain element at a slot, or -1.
  auto free_at = [&](const LinearExtension& s, int slot) {
    if (slot < 1 || slot > n) return -1;
    const int y = s.at(slot);
    return chain.contains(y) ? -1 : y;
  };

  for_each_extension(p, c, Variant::Equal, [&](const LinearExtension& s) {
    for (int m = 0; m <= l; ++m) {
      const int y = free_at(s, pos(m) + 1);
      if (y >= 0 && above_x(m, y)) add(Direction::minus(y), DirClause::A, m);
    }
    for (int m = l; m <= k + 1; ++m) {
      const int y = free_at(s, pos(m) - 1);
      if (y >= 0 && below_x(m, y)) add(Direction::plus(y), DirClause::B, m);
    }
    for (int t = 1; t < n; ++t) {
      const int u = free_at(s, t), v = free_at(s, t + 1);
      if (u >= 0 && v >= 0 && p.less(u, v)) add(Direction::euv(u, v), DirClause::C, -1);
    }
    {
      const int u = free_at(s, pos(l) - 1), v = free_at(s, pos(l) + 1);
      if (u >= 0 && v >= 0 && p.less(u, v)) add(Direction::euv(u, v), DirClause::D, -1);
    }
    if (maxp) {
      for (int m = maxp->pair.r + 1; m <= l - 1; ++m) {
        const int y = free_at(s, pos(m) + 2);
        if (y >= 0 && above_x(m, y)) add(Direction::minus(y), DirClause::E, m);
      }
      for (int m = l + 1; m <= maxp->pair.s; ++m) {
        const int y = free_at(s, pos(m) - 2);
        if (y >= 0 && below_x(m, y)) add(Direction::plus(y), DirClause::F, m);
      }
    }
    return true;
  });
  if (maxp) {
    for_each_extension(p, c, Variant::Plus, [&](const LinearExtension& s) {
      const int y = free_at(s, pos(l - 1) + 2);
      if (y >= 0 && above_x(l - 1, y)) add(Direction::minus(y), DirClause::G, l - 1);
      return true;
    });
    for_each_extension(p, c, Variant::Minus, [&](const LinearExtension& s) {
      const int y = free_at(s, pos(l + 1) - 2);
      if (y >= 0 && below_x(l + 1, y)) add(Direction::plus(y), DirClause::H, l + 1);
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](const CertifiedDirection& a, const CertifiedDirection& b) {
    return std::tie(a.clause, a.m, a.direction) < std::tie(b.clause, b.m, b.direction);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CollectionDescriptor variant_collection(int n, const ChainConfig& c, Variant v) {
  if (!c.has_ell()) throw std::invalid_argument("variant collections need a distinguished chain element");
  CollectionDescriptor out;
  const int k = c.k();
  auto at = [&](int j) { return c.position(j, n) + (j == c.ell ? offset(v) : 0); };
  for (int j = 0; j <= k; ++j) out.kappa.push_back(at(j + 1) - at(j) - 1);
  return out;
}

MixedVolume mixed_volume(const Poset& p, const ChainConfig& c, const CollectionDescriptor& kappa) {
  const int n = p.size();
  const int k = c.k();
  if (static_cast<int>(kappa.kappa.size()) != k + 1 ||
      std::any_of(kappa.kappa.begin(), kappa.kappa.end(), [](int x) { return x < 0; }) || kappa.size() != n - k)
    throw GeometryError(GeometryError::Kind::BadTotal, "multiplicities must be k + 1 nonnegative numbers summing to n - k");
  Pins pins(n, 0);
  int at = 0;
  for (int m = 1; m <= k; ++m) {
    at += kappa.kappa[m - 1] + 1;
    pins[c.x(m)] = at;
  }
  return {count_with_pins(p, pins), factorial(n - k)};
}

bool mixed_volume_positive_by_dimension(const Poset& p, const ChainConfig& c, const CollectionDescriptor& kappa) {
  const int k = c.k();
  const Support full = kappa.support();
  for (Support s = full; s != 0; s = (s - 1) & full) {
    int size = 0;
    for (int j = 0; j <= k; ++j)
      if ((s >> j) & 1U) size += kappa.kappa[j];
    if (support_dim(p, c, s) < size) return false;
  }
  return true;
}

int facet_count(const Poset& p, ElementSet s) {
  int count = 0;
  const Mask m = s.bits();
  for (int y : s.to_vector()) {
    if ((p.below(y) & m) == 0) ++count;
    if ((p.above(y) & m) == 0) ++count;
    for (int z : ElementSet(p.above(y) & m).to_vector())
      if ((p.above(y) & p.below(z) & m) == 0) ++count;
  }
  return count;
}

}  // namespace stanley
