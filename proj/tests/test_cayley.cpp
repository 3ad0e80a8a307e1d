#include "oracles.hpp"

#include "permsimple/cayley.hpp"
#include "permsimple/classify.hpp"
#include "permsimple/coxeter.hpp"
#include "permsimple/error.hpp"
#include "permsimple/notation.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace permsimple;

namespace {

oracle::Word W(const Permutation &p) { return {p.word().begin(), p.word().end()}; }

std::set<std::set<int>> as_partition(const std::vector<std::vector<int>> &comps)
{
  std::set<std::set<int>> out;
  for (const auto &c : comps)
    out.emplace(c.begin(), c.end());
  return out;
}

std::set<std::set<int>> oracle_partition(const LabeledGraph &g)
{
  std::vector<oracle::Word> words;
  for (const auto &v : g.vertices())
    words.push_back(W(v));
  const auto labels = oracle::component_labels(words);
  std::map<int, std::set<int>> by_label;
  for (std::size_t v = 0; v < labels.size(); ++v)
    by_label[labels[v]].insert(static_cast<int>(v));
  std::set<std::set<int>> out;
  for (auto &[l, s] : by_label)
    out.insert(s);
  return out;
}

} // namespace

TEST(Gamma, VertexCounts)
{
  EXPECT_EQ(build_gamma(6, SimpleClass::b).vertex_count(), 89);
  EXPECT_EQ(build_gamma(4, SimpleClass::c).vertex_count(), 21);
  const auto one = build_gamma(1, [](const Permutation &) { return true; });
  EXPECT_EQ(one.vertex_count(), 1);
  EXPECT_EQ(one.edge_count(), 0);
}

TEST(Gamma, DirectGenerationMatchesFiltering)
{
  for (int n = 1; n <= 7; ++n) {
    const auto b = build_gamma(n, [](const Permutation &p) { return is_b_simple(p); });
    const auto c = build_gamma(n, [](const Permutation &p) { return is_c_simple(p); });
    EXPECT_EQ(build_gamma(n, SimpleClass::b).vertices(), b.vertices());
    EXPECT_EQ(build_gamma(n, SimpleClass::c).vertices(), c.vertices());
    EXPECT_EQ(build_gamma(n, SimpleClass::b).edges(), b.edges());
  }
}

TEST(Gamma, EdgesAreExactlyInducedGeneratorEdges)
{
  for (int n = 2; n <= 6; ++n)
    for (auto cls : all_classes) {
      const auto g = build_gamma(n, cls);
      std::set<std::pair<int, int>> seen;
      for (const auto &e : g.edges()) {
        ASSERT_LT(e.a, e.b);
        ASSERT_EQ(g.vertex(e.b), g.vertex(e.a).times_adjacent(e.generator));
        ASSERT_EQ(g.vertex(e.a), g.vertex(e.b).times_adjacent(e.generator));
        ASSERT_TRUE(seen.insert({e.a, e.b}).second);
        ASSERT_TRUE(g.has_edge(e.a, e.b));
        ASSERT_TRUE(g.has_edge(e.b, e.a));
      }
      int expected = 0;
      for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 1; i < n; ++i)
          if (auto u = g.index_of(g.vertex(v).times_adjacent(i)); u && *u > v)
            ++expected;
      ASSERT_EQ(g.edge_count(), expected);
    }
}

TEST(Gamma, BoundExceeded)
{
  EXPECT_THROW(build_gamma(10, SimpleClass::s), Error);
}

TEST(Components, CS5)
{
  const auto g = build_gamma(5, SimpleClass::c);
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  std::set<Permutation> singletons;
  for (const auto &c : comps)
    if (c.size() == 1)
      singletons.insert(g.vertex(c[0]));
  EXPECT_EQ(singletons, (std::set<Permutation>{parse_cycles("(5 2 4 1 3)", 5), parse_cycles("(5 3 1 4 2)", 5)}));
}

TEST(Components, Connectivity)
{
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(components(build_gamma(n, SimpleClass::b)).size(), 1u) << n;
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(components(build_gamma(n, SimpleClass::c)).size() == 1, n <= 4) << n;
    EXPECT_EQ(components(build_gamma(n, SimpleClass::g)).size() == 1, n <= 3) << n;
  }
}

TEST(Components, MatchUnionFindOracle)
{
  for (int n = 1; n <= 6; ++n)
    for (auto cls : all_classes) {
      const auto g = build_gamma(n, cls);
      EXPECT_EQ(as_partition(components(g)), oracle_partition(g)) << n << class_letter(cls);
    }
}

TEST(Geodesic, Examples)
{
  const auto d31 = evaluate_word(parse_coxeter_word("D(3,1)", 4));
  const auto path = geodesic_to_identity(d31);
  ASSERT_EQ(path.size(), 4u);
  EXPECT_EQ(path.front(), Permutation::identity(4));
  EXPECT_EQ(path.back(), d31);
  EXPECT_EQ(geodesic_to_identity(Permutation::identity(3)).size(), 1u);
  EXPECT_THROW(geodesic_to_identity(Permutation({4, 1, 6, 2, 5, 3})), Error);
}

TEST(Geodesic, AllBSimpleUpTo7)
{
  for (int n = 1; n <= 7; ++n)
    for (const auto &p : generate_b_simple(n)) {
      const auto path = geodesic_to_identity(p);
      ASSERT_EQ(static_cast<int>(path.size()), coxeter_length(p) + 1);
      for (std::size_t s = 0; s < path.size(); ++s) {
        ASSERT_TRUE(is_b_simple(path[s]));
        if (s > 0) {
          ASSERT_EQ(coxeter_length(path[s]), coxeter_length(path[s - 1]) + 1);
        }
        if (s > 0) {
          int differ = 0;
          for (int i = 1; i <= n; ++i)
            differ += path[s](i) != path[s - 1](i);
          ASSERT_EQ(differ, 2);
        }
      }
    }
}

TEST(Dot, EmptyGraph)
{
  const auto g = build_gamma(2, [](const Permutation &) { return false; });
  const auto dot = export_dot(g);
  EXPECT_EQ(g.vertex_count(), 0);
  EXPECT_EQ(dot.rfind("graph ", 0), 0u);
  EXPECT_EQ(dot.back(), '\n');
  EXPECT_NE(dot.find('}'), std::string::npos);
}

TEST(Dot, StableAndComplete)
{
  const auto g = build_gamma(4, SimpleClass::b);
  const auto first = export_dot(g, {.components = false, .decorate = true, .name = "b4"});
  const auto again = export_dot(build_gamma(4, SimpleClass::b), {.components = false, .decorate = true, .name = "b4"});
  EXPECT_EQ(first, again);
  int nodes = 0;
  for (std::size_t pos = 0; (pos = first.find("[label=\"", pos)) != std::string::npos; ++pos)
    ++nodes;
  EXPECT_EQ(nodes, g.vertex_count() + g.edge_count());
  EXPECT_EQ(g.vertex_count(), 13);
}

TEST(Dot, Clusters)
{
  const auto dot = export_dot(build_gamma(5, SimpleClass::c), {.components = true});
  int clusters = 0;
  for (std::size_t pos = 0; (pos = dot.find("subgraph cluster_", pos)) != std::string::npos; ++pos)
    ++clusters;
  EXPECT_EQ(clusters, 3);
}
