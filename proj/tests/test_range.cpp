#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "stanley/range.hpp"
#include "stanley/transforms.hpp"

using namespace stanley;

TEST_CASE("bounds of an isolated element span the whole line") {
  Poset p = Poset::build(5, {{0, 1}});
  ChainConfig c{{0, 1}, {1, 4}, 2};
  REQUIRE(validate_config(p, c));
  for (Variant v : kVariants) CHECK(bounds(p, c, 3, v) == Bounds{1, 5});
  CHECK(i_max(p, c, 3) == 0);
  CHECK(i_min(p, c, 3) == 3);
  CHECK_THROWS_AS(bounds(p, c, 0, Variant::Equal), std::invalid_argument);
}

TEST_CASE("an element alone below x_1 ends right before it") {
  Poset p = Poset::build(5, {{0, 1}, {1, 2}});
  ChainConfig c{{1, 2}, {3, 5}, 1};
  REQUIRE(validate_config(p, c));
  CHECK(bounds(p, c, 0, Variant::Equal).u == 2);
}

TEST_CASE("seven-element example: u_=(y1) = 3 and it is attained") {
  Instance inst = fixtures::crit();
  const int y1 = fixtures::id(inst, "y1");
  CHECK(bounds(inst.poset, inst.config, y1, Variant::Equal).u == 3);
  for (const ElementRange& e : profile(inst.poset, inst.config))
    if (e.element == y1) CHECK(e.m_max[index_of(Variant::Equal)] == 3);
}

TEST_CASE("closure example: y2 can sit at position 3 in N_=") {
  Instance inst = fixtures::closure_example();
  CHECK(feasible(inst.poset, inst.config, fixtures::id(inst, "y2"), Variant::Equal, 3));
  CHECK_FALSE(feasible(inst.poset, inst.config, fixtures::id(inst, "y2"), Variant::Equal, 4));
}

TEST_CASE("shifted variants: the formula over-approximates on a three-element poset") {
  // 0 < 1, x_1 = 2 pinned at 2. N_- is {2 0 1}, yet the formula admits element 1 at slot 2.
  Poset p = Poset::build(3, {{0, 1}});
  ChainConfig c{{2}, {2}, 1};
  REQUIRE(validate_config(p, c));
  CHECK(closure(p, c).added_relations.empty());
  const VariantCounts vc = variant_counts(p, c);
  CHECK((vc[Variant::Minus] == 1 && vc[Variant::Equal] == 1 && vc[Variant::Plus] == 1));
  CHECK(bounds(p, c, 1, Variant::Minus) == Bounds{2, 3});
  CHECK(feasible(p, c, 1, Variant::Minus, 2));
  CHECK(enumerate(p, c, Variant::Minus).front().placement[1] == 3);
}

namespace {

// y is comparable to the chain elements whose slots bracket i under v (sentinels count).
bool bracketed(const Poset& p, const ChainConfig& c, int y, Variant v, int i) {
  const int n = p.size();
  int m = 0;
  while (m < c.k() && variant_position(c, n, m + 1, v) < i) ++m;
  return (m == 0 || p.less(c.x(m), y)) && (m == c.k() || p.less(y, c.x(m + 1)));
}

}  // namespace

TEST_CASE("feasibility against enumeration and the bound chains, n <= 6") {
  long long checked = 0, scoped = 0, closed_equal = 0, empty_sets = 0;
  for (int n = 2; n <= 6; ++n) {
    oracle::for_each_natural_poset(n, [&](const Poset& p) {
      const oracle::Matrix m = oracle::matrix_of(p);
      oracle::for_each_config(p, [&](const ChainConfig& c) {
        const std::vector<ElementRange> prof = profile(p, c);
        const VariantCounts vc = variant_counts(p, c);
        const bool extremal = vc[Variant::Equal] > 0 && vc.equality() && closure(p, c).added_relations.empty();
        for (Variant v : kVariants) {
          const int vi = index_of(v);
          // attained[y][i]: some word of N_v puts y at i
          std::vector<std::vector<bool>> attained(n, std::vector<bool>(n + 2, false));
          bool any = false;
          if (n <= 5) {
            for (const auto& w : oracle::words(m, c, offset(v))) {
              any = true;
              for (int pos = 1; pos <= n; ++pos) attained[w[pos - 1]][pos] = true;
            }
          } else {
            for (const auto& s : enumerate(p, c, v)) {
              any = true;
              for (int y = 0; y < n; ++y) attained[y][s.placement[y]] = true;
            }
          }
          empty_sets += !any;
          for (const ElementRange& e : prof) {
            const Bounds b = e.bounds[vi];
            for (int i = 1; i <= n; ++i) {
              const bool f = feasible(p, c, e.element, v, i);
              if (attained[e.element][i]) CHECK(f);
              if (any && bracketed(p, c, e.element, v, i)) {
                ++scoped;
                CHECK(f == attained[e.element][i]);
              }
              if (extremal && v == Variant::Equal) {
                ++closed_equal;
                CHECK(f == attained[e.element][i]);
              }
              ++checked;
            }
            CHECK(e.m_min[vi].has_value() == any);
            if (any) {
              CHECK(b.l <= *e.m_min[vi]);
              CHECK(*e.m_max[vi] <= b.u);
            }
          }
        }
        for (const ElementRange& e : prof) {
          const Bounds mi = e.bounds[0], eq = e.bounds[1], pl = e.bounds[2];
          CHECK(eq.l - 1 <= mi.l);
          CHECK(mi.l <= eq.l);
          CHECK(eq.l <= pl.l);
          CHECK(pl.l <= eq.l + 1);
          CHECK(eq.u - 1 <= mi.u);
          CHECK(mi.u <= eq.u);
          CHECK(eq.u <= pl.u);
          CHECK(pl.u <= eq.u + 1);
          if (e.i_max < c.ell) CHECK((mi.l == eq.l && eq.l == pl.l));
          if (e.i_min > c.ell) CHECK((mi.u == eq.u && eq.u == pl.u));
        }
      });
    });
  }
  CHECK(checked > 100000);
  CHECK(scoped > 100000);
  CHECK(closed_equal > 10000);
  CHECK(empty_sets > 0);
}
