#include "permsimple/cayley.hpp"

#include "permsimple/coxeter.hpp"
#include "permsimple/error.hpp"
#include "permsimple/notation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace permsimple {

LabeledGraph::LabeledGraph(int n, std::vector<Permutation> vertices) : n_(n), vertices_(std::move(vertices))
{
  if (n > 16)
    throw Error(Errc::bound_exceeded, "graph keys support degree <= 16");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  index_.reserve(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].degree() != n)
      throw Error(Errc::degree_mismatch, "vertex of degree " + std::to_string(vertices_[v].degree()));
    index_.emplace(vertices_[v].key(), static_cast<int>(v));
  }
  adjacency_.resize(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (int i = 1; i < n; ++i) {
      const auto w = index_of(vertices_[v].times_adjacent(i));
      if (!w)
        continue;
      // b = a*t_i  <=>  a = b*t_i, so every edge is seen from both ends.
      ensure(vertices_[static_cast<std::size_t>(*w)].times_adjacent(i) == vertices_[v], "edge symmetry");
      adjacency_[v].push_back({*w, i});
      if (static_cast<int>(v) < *w)
        edges_.push_back({static_cast<int>(v), *w, i});
    }
  }
}

std::optional<int> LabeledGraph::index_of(const Permutation &p) const
{
  if (p.degree() != n_)
    return std::nullopt;
  const auto it = index_.find(p.key());
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

bool LabeledGraph::has_edge(int u, int v) const
{
  for (const auto &nb : neighbors(u))
    if (nb.vertex == v)
      return true;
  return false;
}

namespace {

void check_bound(int n, int bound)
{
  if (n < 1)
    throw Error(Errc::domain_error, "degree must be positive");
  if (n > bound)
    throw Error(Errc::bound_exceeded, "graph degree " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
}

void square_free_words(int n, int min_j, std::vector<Run> &runs, std::vector<Permutation> &out)
{
  out.push_back(evaluate_word(CoxeterWord{n, runs}));
  for (int j = min_j; j <= n - 1; ++j)
    for (int k = j; k <= n - 1; ++k) {
      runs.push_back(Run{k, j});
      square_free_words(n, k + 1, runs, out);
      runs.pop_back();
    }
}

} // namespace

std::vector<Permutation> generate_b_simple(int n)
{
  std::vector<Permutation> out;
  std::vector<Run> runs;
  square_free_words(n, 1, runs, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> generate_c_simple(int n)
{
  std::vector<Permutation> out{Permutation::identity(n)};
  // Each subset of size >= 2 (as a bitmask) carries (size-1)! cycles,
  // written from the subset's maximum.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> points;
    for (int v = 1; v <= n; ++v)
      if (mask & (1u << (v - 1)))
        points.push_back(v);
    if (points.size() < 2)
      continue;
    const int top = points.back();
    std::vector<int> rest(points.begin(), points.end() - 1);
    do {
      std::vector<int> cycle{top};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      out.push_back(Permutation::from_cycles(n, {cycle}));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph build_gamma(int n, const PermPredicate &predicate, int bound)
{
  check_bound(n, bound);
  std::vector<Permutation> vertices;
  for_each_permutation(n, [&](const Permutation &p) {
    if (predicate(p))
      vertices.push_back(p);
  });
  return LabeledGraph(n, std::move(vertices));
}

LabeledGraph build_gamma(int n, SimpleClass cls, int bound)
{
  check_bound(n, bound);
  switch (cls) {
  case SimpleClass::b: return LabeledGraph(n, generate_b_simple(n));
  case SimpleClass::c: return LabeledGraph(n, generate_c_simple(n));
  default: return build_gamma(n, [cls](const Permutation &p) { return in_class(cls, p); }, bound);
  }
}

std::vector<std::vector<int>> components(const LabeledGraph &g)
{
  const int count = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(count), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < count; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{start};
    label[static_cast<std::size_t>(start)] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (const auto &nb : g.neighbors(v))
        if (label[static_cast<std::size_t>(nb.vertex)] < 0) {
          label[static_cast<std::size_t>(nb.vertex)] = id;
          queue.push_back(nb.vertex);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<Permutation> geodesic_to_identity(const Permutation &p)
{
  if (!is_b_simple(p))
    throw Error(Errc::not_b_simple, format_one_line(p));
  std::vector<Permutation> path{Permutation::identity(p.degree())};
  for (int i : coxeter_normal_form(p).letters()) {
    path.push_back(path.back().times_adjacent(i));
    ensure(is_b_simple(path.back()), "geodesic prefixes stay b-simple");
  }
  ensure(path.back() == p, "geodesic ends at the target");
  ensure(static_cast<int>(path.size()) - 1 == coxeter_length(p), "geodesic length equals Coxeter length");
  return path;
}

std::string export_dot(const LabeledGraph &g, const DotOptions &options)
{
  std::string out = "graph \"" + options.name + "\" {\n";
  out += "  node [shape=box, fontsize=10];\n";
  auto node_line = [&](int v) {
    const auto &p = g.vertex(v);
    std::string line = "  v" + std::to_string(v) + " [label=\"" + format_one_line(p) + "\"";
    if (options.decorate) {
      const auto prof = classify(p);
      std::string marks;
      for (auto c : {SimpleClass::c, SimpleClass::g, SimpleClass::s, SimpleClass::t})
        if (prof.has(c))
          marks += class_letter(c);
      line += ", xlabel=\"" + marks + "\"";
      if (prof.c_simple)
        line += ", peripheries=2";
      if (prof.g_simple)
        line += ", style=filled, fillcolor=lightgray";
    }
    return line + "];\n";
  };
  if (options.components) {
    const auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      out += "  subgraph cluster_" + std::to_string(c) + " {\n";
      for (int v : comps[c])
        out += "  " + node_line(v);
      out += "  }\n";
    }
  } else {
    for (int v = 0; v < g.vertex_count(); ++v)
      out += node_line(v);
  }
  for (const auto &e : g.edges())
    out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) + " [label=\"" + std::to_string(e.generator) + "\"];\n";
  out += "}\n";
  return out;
}

} // namespace permsimple
