#include "permsimple/cayley.hpp"
#include "permsimple/classify.hpp"
#include "permsimple/planarity.hpp"

#include <gtest/gtest.h>

using namespace permsimple;

namespace {

LabeledGraph subset(int n, std::vector<std::vector<int>> words)
{
  std::vector<Permutation> vs;
  for (auto &w : words)
    vs.emplace_back(std::move(w));
  return LabeledGraph(n, std::move(vs));
}

} // namespace

TEST(Planarity, SingleVertex)
{
  const auto g = subset(3, {{1, 2, 3}});
  const auto r = is_planar(g);
  EXPECT_TRUE(r.planar);
  ASSERT_TRUE(r.embedding);
  EXPECT_TRUE(verify_embedding(g, *r.embedding));
  EXPECT_FALSE(k33_witness(g));
}

TEST(Planarity, HexagonAndPath)
{
  const auto g = build_gamma(3, [](const Permutation &) { return true; });
  const auto r = is_planar(g);
  ASSERT_TRUE(r.planar);
  EXPECT_EQ(count_faces(g, *r.embedding), 2);
  EXPECT_FALSE(k33_witness(g));
}

// Induced Cayley graphs are bipartite, so a path stands in for the triangle.
TEST(Planarity, PathHasNoK33)
{
  const auto g = subset(3, {{1, 2, 3}, {2, 1, 3}, {2, 3, 1}});
  EXPECT_FALSE(k33_witness(g));
  EXPECT_TRUE(is_planar(g).planar);
}

TEST(Planarity, BSimpleUpTo6Planar)
{
  for (int n = 1; n <= 6; ++n) {
    const auto g = build_gamma(n, SimpleClass::b);
    const auto r = is_planar(g);
    ASSERT_TRUE(r.planar) << n;
    ASSERT_TRUE(r.embedding);
    EXPECT_TRUE(verify_embedding(g, *r.embedding));
    if (n >= 2) {
      EXPECT_EQ(g.vertex_count() - g.edge_count() + count_faces(g, *r.embedding), 2);
    }
  }
  EXPECT_FALSE(k33_witness(build_gamma(4, SimpleClass::b)));
}

TEST(Planarity, BSimple6Figures)
{
  const auto g = build_gamma(6, SimpleClass::b);
  const auto r = is_planar(g);
  EXPECT_EQ(g.vertex_count(), 89);
  EXPECT_EQ(g.edge_count(), 145);
  EXPECT_EQ(count_faces(g, *r.embedding), 58);
}

TEST(Planarity, BSimple7NonPlanar)
{
  const auto g = build_gamma(7, SimpleClass::b);
  const auto r = is_planar(g);
  ASSERT_FALSE(r.planar);
  ASSERT_TRUE(r.obstruction);
  EXPECT_TRUE(verify_kuratowski(g, *r.obstruction));
  const auto k = k33_witness(g);
  ASSERT_TRUE(k);
  EXPECT_EQ(k->kind, KuratowskiSubdivision::Kind::k33);
  EXPECT_EQ(k->branch_vertices.size(), 6u);
  EXPECT_EQ(k->paths.size(), 9u);
  EXPECT_TRUE(verify_kuratowski(g, *k));
}

TEST(Planarity, TamperedCertificatesRejected)
{
  const auto g = build_gamma(7, SimpleClass::b);
  auto k = *k33_witness(g);
  auto broken = k;
  broken.paths[0].erase(broken.paths[0].begin() + static_cast<long>(broken.paths[0].size() / 2));
  if (broken.paths[0].size() >= 2 && broken.paths[0] != k.paths[0]) {
    EXPECT_FALSE(verify_kuratowski(g, broken));
  }
  auto swapped = k;
  std::swap(swapped.side_a, swapped.side_b);
  swapped.paths.pop_back();
  EXPECT_FALSE(verify_kuratowski(g, swapped));

  const auto p = build_gamma(5, SimpleClass::b);
  auto rot = *is_planar(p).embedding;
  for (auto &r : rot)
    if (r.size() >= 3) {
      std::swap(r[0], r[1]);
      break;
    }
  EXPECT_FALSE(verify_embedding(p, rot));
}
