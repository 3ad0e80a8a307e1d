#include "permsimple/planarity.hpp"

#include "permsimple/error.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace permsimple {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

EdgeList clean_obstruction(int vertex_count, EdgeList edges);

struct RawResult {
  bool planar = false;
  RotationSystem rotation;
  EdgeList obstruction_edges;
};

RawResult run_boyer_myrvold(int vertex_count, const EdgeList &edges)
{
  BoostGraph bg(static_cast<std::size_t>(vertex_count));
  for (const auto &[u, v] : edges)
    boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int k = 0;
  boost::graph_traits<BoostGraph>::edge_iterator it, end;
  for (boost::tie(it, end) = boost::edges(bg); it != end; ++it)
    boost::put(edge_index, *it, k++);

  std::vector<std::vector<BoostEdge>> embedding(static_cast<std::size_t>(vertex_count));
  std::vector<BoostEdge> kuratowski;
  RawResult out;
  out.planar = boost::boyer_myrvold_planarity_test(
    boost::boyer_myrvold_params::graph = bg,
    boost::boyer_myrvold_params::embedding =
      boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
    boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (out.planar) {
    out.rotation.resize(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v)
      for (const auto &e : embedding[static_cast<std::size_t>(v)]) {
        const auto s = static_cast<int>(boost::source(e, bg));
        const auto t = static_cast<int>(boost::target(e, bg));
        out.rotation[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
      }
  } else {
    for (const auto &e : kuratowski)
      out.obstruction_edges.emplace_back(static_cast<int>(boost::source(e, bg)),
                                         static_cast<int>(boost::target(e, bg)));
    out.obstruction_edges = clean_obstruction(vertex_count, std::move(out.obstruction_edges));
  }
  return out;
}

EdgeList edge_list(const LabeledGraph &g)
{
  EdgeList out;
  out.reserve(g.edges().size());
  for (const auto &e : g.edges())
    out.emplace_back(e.a, e.b);
  return out;
}

std::map<int, int> degrees(const EdgeList &edges)
{
  std::map<int, int> deg;
  for (const auto &[u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void prune_leaves(EdgeList &edges)
{
  for (bool changed = true; changed;) {
    const auto deg = degrees(edges);
    const auto before = edges.size();
    std::erase_if(edges, [&](const auto &e) { return deg.at(e.first) == 1 || deg.at(e.second) == 1; });
    changed = edges.size() != before;
  }
}

bool has_kuratowski_shape(const EdgeList &edges)
{
  std::map<int, int> hist;
  for (const auto &[v, d] : degrees(edges))
    ++hist[d];
  const auto count = [&](int d) { return hist.count(d) ? hist.at(d) : 0; };
  const int others = static_cast<int>(degrees(edges).size()) - count(2) - count(3) - count(4);
  return others == 0 && ((count(4) == 5 && count(3) == 0) || (count(3) == 6 && count(4) == 0));
}

/// The obstruction reported by the library can carry stray edges. Leaves
/// are pruned; if the shape is still wrong, edges are dropped one at a time
/// while the rest stays non-planar, which ends at a minimal non-planar
/// subgraph.
EdgeList clean_obstruction(int vertex_count, EdgeList edges)
{
  prune_leaves(edges);
  if (has_kuratowski_shape(edges))
    return edges;
  for (std::size_t i = 0; i < edges.size();) {
    EdgeList without = edges;
    without.erase(without.begin() + static_cast<long>(i));
    if (!run_boyer_myrvold(vertex_count, without).planar)
      edges = std::move(without);
    else
      ++i;
  }
  prune_leaves(edges);
  return edges;
}

/// Splits a Kuratowski edge set into branch vertices and paths.
KuratowskiSubdivision decompose(const EdgeList &edges)
{
  std::map<int, std::vector<int>> adj;
  for (const auto &[u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  KuratowskiSubdivision s;
  for (const auto &[v, nbs] : adj) {
    if (nbs.size() >= 3)
      s.branch_vertices.push_back(v);
    else
      ensure(nbs.size() == 2, "Kuratowski subgraph has no leaves");
  }
  const std::set<int> branch(s.branch_vertices.begin(), s.branch_vertices.end());
  for (int u : s.branch_vertices)
    for (int first : adj[u]) {
      std::vector<int> path{u};
      int prev = u;
      int cur = first;
      while (!branch.count(cur)) {
        path.push_back(cur);
        const auto &nbs = adj[cur];
        const int next = nbs[0] == prev ? nbs[1] : nbs[0];
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      if (u < cur)
        s.paths.push_back(std::move(path));
    }

  if (s.branch_vertices.size() == 5) {
    s.kind = KuratowskiSubdivision::Kind::k5;
  } else {
    ensure(s.branch_vertices.size() == 6, "Kuratowski subgraph has 5 or 6 branch vertices");
    s.kind = KuratowskiSubdivision::Kind::k33;
    const int anchor = s.branch_vertices.front();
    for (const auto &p : s.paths) {
      if (p.front() == anchor)
        s.side_b.push_back(p.back());
      else if (p.back() == anchor)
        s.side_b.push_back(p.front());
    }
    std::sort(s.side_b.begin(), s.side_b.end());
    for (int v : s.branch_vertices)
      if (!std::binary_search(s.side_b.begin(), s.side_b.end(), v))
        s.side_a.push_back(v);
  }
  std::sort(s.paths.begin(), s.paths.end());
  return s;
}

} // namespace

int count_faces(const LabeledGraph &g, const RotationSystem &rotation)
{
  std::map<std::pair<int, int>, bool> used;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : rotation[static_cast<std::size_t>(v)])
      used[{v, w}] = false;
  int faces = 0;
  for (auto &[dart, seen] : used) {
    if (seen)
      continue;
    ++faces;
    auto d = dart;
    while (!used[d]) {
      used[d] = true;
      const auto &around = rotation[static_cast<std::size_t>(d.second)];
      const auto pos = std::find(around.begin(), around.end(), d.first) - around.begin();
      const int next = around[static_cast<std::size_t>((pos + 1) % static_cast<long>(around.size()))];
      d = {d.second, next};
    }
  }
  return faces;
}

bool verify_embedding(const LabeledGraph &g, const RotationSystem &rotation)
{
  if (static_cast<int>(rotation.size()) != g.vertex_count())
    return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> around = rotation[static_cast<std::size_t>(v)];
    std::vector<int> expected;
    for (const auto &nb : g.neighbors(v))
      expected.push_back(nb.vertex);
    std::sort(around.begin(), around.end());
    std::sort(expected.begin(), expected.end());
    if (around != expected)
      return false;
  }
  int nontrivial = 0;
  int isolated = 0;
  for (const auto &c : components(g)) {
    if (c.size() == 1 && g.neighbors(c.front()).empty())
      ++isolated;
    else
      ++nontrivial;
  }
  const int euler = g.vertex_count() - g.edge_count() + count_faces(g, rotation);
  return euler == 2 * nontrivial + isolated;
}

bool verify_kuratowski(const LabeledGraph &g, const KuratowskiSubdivision &s)
{
  const std::set<int> branch(s.branch_vertices.begin(), s.branch_vertices.end());
  if (branch.size() != s.branch_vertices.size())
    return false;
  std::set<int> interior;
  std::set<std::pair<int, int>> joined;
  for (const auto &p : s.paths) {
    if (p.size() < 2 || !branch.count(p.front()) || !branch.count(p.back()) || p.front() == p.back())
      return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_edge(p[i], p[i + 1]))
        return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (branch.count(p[i]) || !interior.insert(p[i]).second)
        return false;
    if (!joined.insert(std::minmax(p.front(), p.back())).second)
      return false;
  }
  if (s.kind == KuratowskiSubdivision::Kind::k5)
    return branch.size() == 5 && joined.size() == 10;

  if (branch.size() != 6 || s.side_a.size() != 3 || s.side_b.size() != 3 || joined.size() != 9)
    return false;
  for (int a : s.side_a)
    for (int b : s.side_b)
      if (!joined.count(std::minmax(a, b)))
        return false;
  return true;
}

PlanarityResult is_planar(const LabeledGraph &g)
{
  const auto raw = run_boyer_myrvold(g.vertex_count(), edge_list(g));
  PlanarityResult result;
  result.planar = raw.planar;
  if (raw.planar) {
    ensure(verify_embedding(g, raw.rotation), "planar embedding satisfies Euler's formula");
    result.embedding = raw.rotation;
  } else {
    auto s = decompose(raw.obstruction_edges);
    ensure(verify_kuratowski(g, s), "Kuratowski certificate re-walks in the graph");
    result.obstruction = std::move(s);
  }
  return result;
}

std::optional<KuratowskiSubdivision> k33_witness(const LabeledGraph &g, int budget)
{
  // Depth-first over edge deletions: a K5 obstruction is broken by removing
  // one of its edges, and the remaining graph may still carry a K3,3.
  std::set<EdgeList> visited;
  std::vector<EdgeList> stack{edge_list(g)};
  while (!stack.empty() && budget-- > 0) {
    EdgeList edges = std::move(stack.back());
    stack.pop_back();
    const auto raw = run_boyer_myrvold(g.vertex_count(), edges);
    if (raw.planar)
      continue;
    auto s = decompose(raw.obstruction_edges);
    if (s.kind == KuratowskiSubdivision::Kind::k33) {
      ensure(verify_kuratowski(g, s), "K3,3 witness re-walks in the graph");
      return s;
    }
    for (auto it = raw.obstruction_edges.rbegin(); it != raw.obstruction_edges.rend(); ++it) {
      const auto key = std::minmax(it->first, it->second);
      EdgeList smaller;
      for (const auto &e : edges)
        if (std::minmax(e.first, e.second) != key)
          smaller.push_back(e);
      if (visited.insert(smaller).second)
        stack.push_back(std::move(smaller));
    }
  }
  return std::nullopt;
}

} // namespace permsimple
