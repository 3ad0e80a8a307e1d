#include "oracles.hpp"

#include "permsimple/cayley.hpp"
#include "permsimple/classify.hpp"
#include "permsimple/error.hpp"
#include "permsimple/notation.hpp"
#include "permsimple/polygon.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace permsimple;

namespace {

PolygonalType poly(std::vector<int> v, int n) { return polygon_of_cycle(v, n); }

std::vector<int> rotate_max(std::vector<int> v)
{
  std::rotate(v.begin(), std::max_element(v.begin(), v.end()), v.end());
  return v;
}

// Moves by scanning every side directly.
std::set<std::vector<int>> oracle_moves(const std::vector<int> &v)
{
  std::set<std::vector<int>> out;
  const std::size_t s = v.size();
  if (s < 4)
    return out;
  for (std::size_t t = 0; t < s; ++t) {
    const int a = v[t], b = v[(t + 1) % s];
    bool clear = true;
    for (int x : v)
      if (x > std::min(a, b) && x < std::max(a, b))
        clear = false;
    if (!clear)
      continue;
    std::vector<int> rest;
    for (int x : v)
      if (x != b)
        rest.push_back(x);
    out.insert(rotate_max(rest));
  }
  return out;
}

// Every cycle on a subset of [n] with at least `min_len` points, from its max.
void for_each_cycle(int n, std::size_t min_len, const std::function<void(const std::vector<int> &)> &visit)
{
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> pts;
    for (int v = 1; v <= n; ++v)
      if (mask & (1 << (v - 1)))
        pts.push_back(v);
    if (pts.size() < min_len)
      continue;
    const int mx = pts.back();
    pts.pop_back();
    do {
      std::vector<int> c{mx};
      c.insert(c.end(), pts.begin(), pts.end());
      visit(c);
    } while (std::next_permutation(pts.begin(), pts.end()));
  }
}

std::set<std::set<int>> partition_by(const LabeledGraph &g, const std::function<std::string(const Permutation &)> &key)
{
  std::map<std::string, std::set<int>> groups;
  for (int v = 0; v < g.vertex_count(); ++v)
    groups[key(g.vertex(v))].insert(v);
  std::set<std::set<int>> out;
  for (auto &[k, s] : groups)
    out.insert(s);
  return out;
}

std::set<std::set<int>> bfs_partition(const LabeledGraph &g)
{
  std::set<std::set<int>> out;
  for (const auto &c : components(g))
    out.emplace(c.begin(), c.end());
  return out;
}

std::string describe(const GComponentId &id)
{
  return std::visit(
    [](const auto &k) {
      using K = std::decay_t<decltype(k)>;
      std::string s;
      if constexpr (std::is_same_v<K, IdentityComponent>)
        s = "id";
      else if constexpr (std::is_same_v<K, Cji>)
        s = "C" + std::to_string(k.j) + "," + std::to_string(k.i);
      else if constexpr (std::is_same_v<K, CJI>) {
        s = "CJI";
        for (auto [j, i] : k.transpositions)
          s += ":" + std::to_string(j) + "," + std::to_string(i);
      } else if constexpr (std::is_same_v<K, ThreeCycleSingleton>) {
        s = "T";
        for (const auto &f : k.factors)
          s += ":" + std::to_string(f.k) + std::to_string(f.j) + std::to_string(f.i) + (f.sign > 0 ? "+" : "-");
      } else {
        s = "P" + std::to_string(k.p) + "^" + std::to_string(k.q);
        for (int x : k.word)
          s += " " + std::to_string(x);
      }
      return s;
    },
    id);
}

} // namespace

TEST(Polygon, OfCycle)
{
  EXPECT_EQ(poly({6, 1, 4, 2, 5}, 6).vertices, (std::vector<int>{6, 1, 4, 2, 5}));
  EXPECT_EQ(poly({1, 4, 2, 5, 6}, 6).vertices, (std::vector<int>{6, 1, 4, 2, 5}));
  EXPECT_EQ(poly({3, 2, 1}, 3).vertices, (std::vector<int>{3, 2, 1}));
  EXPECT_THROW(poly({2, 1}, 3), Error);
  EXPECT_THROW(poly({3, 3, 1}, 3), Error);
  EXPECT_THROW(poly({7, 1, 2}, 3), Error);
}

TEST(Polygon, OfPermutation)
{
  EXPECT_EQ(polygon_of(Permutation::identity(3)).kind, PolygonalType::Kind::identity);
  EXPECT_EQ(polygon_of(Permutation({2, 1, 3})).kind, PolygonalType::Kind::transposition);
  EXPECT_EQ(polygon_of(parse_cycles("(6 1 4 2 5)", 6)).vertices, (std::vector<int>{6, 1, 4, 2, 5}));
  EXPECT_THROW(polygon_of(parse_cycles("(2 1)(4 3)", 4)), Error);
}

TEST(Polygon, ReducibleToTriangles)
{
  const auto p = poly({6, 1, 4, 2, 5}, 6);
  EXPECT_FALSE(reduce_once(p).empty());
  std::set<std::vector<int>> triangles;
  std::function<void(const PolygonalType &)> walk = [&](const PolygonalType &q) {
    if (q.size() == 3) {
      triangles.insert(q.vertices);
      return;
    }
    for (const auto &r : reduce_once(q))
      walk(r);
  };
  walk(p);
  EXPECT_EQ(triangles, (std::set<std::vector<int>>{{5, 1, 4}, {6, 1, 4}, {6, 1, 5}}));
  EXPECT_TRUE(std::holds_alternative<TriangleClass>(irreducible_type(p)));
}

TEST(Polygon, IrreduciblePentagon)
{
  const auto p = poly({6, 3, 1, 5, 2}, 6);
  EXPECT_TRUE(reduce_once(p).empty());
  const auto t = irreducible_type(p);
  ASSERT_TRUE(std::holds_alternative<IrreducibleType>(t));
  EXPECT_EQ(std::get<IrreducibleType>(t).polygon, p);
}

TEST(Polygon, Hexagon)
{
  const auto p = poly({7, 3, 6, 1, 5, 2}, 8);
  const auto t = irreducible_type(p);
  ASSERT_TRUE(std::holds_alternative<IrreducibleType>(t));
  const auto iv = neighboring_intervals(std::get<IrreducibleType>(t));
  int nonempty = 0;
  for (const auto &[a, ni] : iv)
    nonempty += !ni.minus.empty() + !ni.plus.empty();
  EXPECT_EQ(nonempty, 3);
  EXPECT_EQ(iv.at(3).plus, (Interval{4, 4}));
  EXPECT_EQ(iv.at(5).minus, (Interval{4, 4}));
  EXPECT_EQ(iv.at(7).plus, (Interval{8, 8}));
}

TEST(Polygon, IsolatedPentagonIntervals)
{
  const IrreducibleType t{poly({5, 2, 4, 1, 3}, 5)};
  for (const auto &[a, ni] : neighboring_intervals(t)) {
    EXPECT_TRUE(ni.minus.empty()) << a;
    EXPECT_TRUE(ni.plus.empty()) << a;
  }
  const IrreducibleType wide{poly({5, 2, 4, 1, 3}, 9)};
  EXPECT_EQ(neighboring_intervals(wide).at(5).plus, (Interval{6, 9}));
}

TEST(Polygon, MovesMatchOracleUpTo7)
{
  for_each_cycle(7, 4, [](const std::vector<int> &c) {
    std::set<std::vector<int>> got;
    for (const auto &q : reduce_once(poly(c, 7)))
      got.insert(q.vertices);
    ASSERT_EQ(got, oracle_moves(c));
  });
}

TEST(Polygon, NoIrreducibleQuadrilateral)
{
  for_each_cycle(8, 4, [](const std::vector<int> &c) {
    if (c.size() == 4) {
      ASSERT_FALSE(reduce_once(poly(c, 8)).empty());
    }
  });
}

TEST(Polygon, ConfluenceUpTo8)
{
  for_each_cycle(8, 5, [](const std::vector<int> &c) {
    ASSERT_TRUE(reduction_terminals(poly(c, 8)).confluent());
  });
}

TEST(Polygon, BlockStructureUpTo8)
{
  for_each_cycle(8, 5, [](const std::vector<int> &c) {
    const auto p = poly(c, 8);
    const auto r = irreducible_type(p);
    if (const auto *t = std::get_if<IrreducibleType>(&r)) {
      ASSERT_TRUE(matches_block_structure(p, *t)) << format_cycles(CycleDecomposition{8, {c}, false});
    }
  });
}

// A block may straddle the two neighboring intervals of its vertex.
TEST(Polygon, WholeBlockReadingCounterexample)
{
  const auto p = poly({7, 4, 6, 2, 1, 3, 5}, 7);
  const auto r = irreducible_type(p);
  ASSERT_TRUE(std::holds_alternative<IrreducibleType>(r));
  const auto &t = std::get<IrreducibleType>(r);
  EXPECT_EQ(t.polygon.vertices, (std::vector<int>{7, 4, 6, 2, 5}));
  const auto iv = neighboring_intervals(t);
  EXPECT_EQ(iv.at(2).minus, (Interval{1, 1}));
  EXPECT_EQ(iv.at(2).plus, (Interval{3, 3}));
  EXPECT_TRUE(matches_block_structure(p, t, BlockReading::per_element));
  EXPECT_FALSE(matches_block_structure(p, t, BlockReading::whole_block));
}

TEST(Components, CExamples)
{
  EXPECT_TRUE(cs_component_of(Permutation::identity(4)).is_identity_component());
  EXPECT_TRUE(cs_component_of(parse_cycles("(6 1 4 2 5)", 6)).is_identity_component());
  EXPECT_EQ(cs_component_of(parse_cycles("(5 2 4 1 3)", 5)).irreducible, (std::vector<int>{5, 2, 4, 1, 3}));
  EXPECT_THROW(cs_component_of(parse_cycles("(2 1)(4 3)", 4)), Error);
}

TEST(Components, GExamples)
{
  EXPECT_EQ(gs_component_of(parse_cycles("(5 3 1 4 2)", 5)), GComponentId(PrimePowerSingleton{5, 1, {4, 5, 1, 2, 3}}));
  for_each_permutation(5, [](const Permutation &p) {
    const auto t = cycle_type(p);
    if (t == std::vector<int>{5}) {
      const auto id = gs_component_of(p);
      const auto *s = std::get_if<PrimePowerSingleton>(&id);
      ASSERT_TRUE(s);
      ASSERT_EQ(s->p, 5);
      ASSERT_EQ(s->q, 1);
    }
  });
  EXPECT_EQ(gs_component_of(Permutation::adjacent_transposition(4, 2)), GComponentId(IdentityComponent{}));
  EXPECT_EQ(gs_component_of(parse_cycles("(4 1)", 4)), GComponentId(Cji{4, 1}));
  EXPECT_EQ(gs_component_of(parse_cycles("(3 1)", 4)), GComponentId(IdentityComponent{}));
  EXPECT_THROW(gs_component_of(parse_cycles("(4 3 2 1)", 4)), Error);
}

TEST(Components, PartitionsMatchBfsUpTo7)
{
  for (int n = 1; n <= 7; ++n) {
    const auto c = build_gamma(n, SimpleClass::c);
    EXPECT_EQ(partition_by(c,
                           [](const Permutation &p) {
                             std::string s;
                             for (int x : cs_component_of(p).irreducible)
                               s += std::to_string(x) + " ";
                             return s;
                           }),
              bfs_partition(c))
      << "c, n=" << n;
    const auto g = build_gamma(n, SimpleClass::g);
    EXPECT_EQ(partition_by(g, [](const Permutation &p) { return describe(gs_component_of(p)); }), bfs_partition(g))
      << "g, n=" << n;
  }
}

TEST(Components, GapConditions)
{
  for (int n = 1; n <= 7; ++n) {
    const auto g = build_gamma(n, SimpleClass::g);
    for (const auto &p : g.vertices()) {
      const auto id = gs_component_of(p);
      if (const auto *c = std::get_if<Cji>(&id)) {
        ASSERT_GE(c->j, c->i + 3);
      }
      if (const auto *c = std::get_if<CJI>(&id)) {
        ASSERT_GE(c->transpositions.size(), 2u);
        for (auto [j, i] : c->transpositions)
          ASSERT_GE(j, i + 2);
      }
      if (const auto *t = std::get_if<ThreeCycleSingleton>(&id); t && t->factors.size() == 1) {
        const auto &f = t->factors[0];
        ASSERT_TRUE(f.k - 2 >= f.j && f.j >= f.i + 2);
      }
      if (const auto *s = std::get_if<PrimePowerSingleton>(&id)) {
        ASSERT_TRUE(s->p >= 5 && is_prime(s->p));
      }
    }
  }
}

TEST(GeneratorProduct, Cases)
{
  const auto run = [](const char *cycles, int n, int i) {
    return generator_product_case(cycle_decomposition(parse_cycles(cycles, n), false), i);
  };
  EXPECT_EQ(run("()", 4, 2), GeneratorProductCase::both_fixed);
  EXPECT_EQ(run("(5 2 4)", 5, 2), GeneratorProductCase::insert_after_i);
  EXPECT_EQ(run("(5 3 4)", 5, 2), GeneratorProductCase::insert_i);
  EXPECT_EQ(run("(5 2 3)", 5, 2), GeneratorProductCase::remove);
  EXPECT_EQ(run("(5 2 4 3)", 5, 2), GeneratorProductCase::split);
  EXPECT_EQ(run("(4 2)(5 3)", 5, 2), GeneratorProductCase::merge);

  const auto insert = multiply_by_generator(cycle_decomposition(parse_cycles("(5 2 4)", 5), false), 2);
  EXPECT_EQ(format_cycles(insert), "(5 2 3 4)");
  const auto merged = multiply_by_generator(cycle_decomposition(parse_cycles("(4 2)(5 3)", 5), false), 2);
  EXPECT_EQ(merged.cycles.size(), 1u);
  const auto fresh = multiply_by_generator(cycle_decomposition(Permutation::identity(4), false), 2);
  EXPECT_EQ(format_cycles(fresh), "(3 2)");
}

TEST(GeneratorProduct, AgreesWithDirectProductUpTo7)
{
  for (int n = 2; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation &p) {
      const oracle::Word w{p.word().begin(), p.word().end()};
      for (int i = 1; i < n; ++i)
        for (bool fixed : {false, true}) {
          const auto got = multiply_by_generator(cycle_decomposition(p, fixed), i);
          const auto r = to_permutation(got);
          ASSERT_EQ(oracle::Word(r.word().begin(), r.word().end()), oracle::compose(w, oracle::tau(n, i)));
          ASSERT_EQ(got.includes_fixed_points, fixed);
        }
    });
}
