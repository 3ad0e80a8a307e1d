#ifndef PERMSIMPLE_CAYLEY_HPP
#define PERMSIMPLE_CAYLEY_HPP

#include "permsimple/classify.hpp"
#include "permsimple/permutation.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace permsimple {

inline constexpr int default_graph_bound = 9;

using PermPredicate = std::function<bool(const Permutation &)>;

struct LabeledEdge {
  int a = 0; ///< vertex index, a < b
  int b = 0;
  int generator = 0; ///< vertices[b] == vertices[a] * t_generator

  friend bool operator==(const LabeledEdge &, const LabeledEdge &) = default;
};

/// Induced subgraph of the Cayley graph of the symmetric group with respect
/// to the adjacent transpositions. Vertices are kept in lexicographic
/// one-line order; the graph is immutable once built.
class LabeledGraph {
public:
  struct Neighbor {
    int vertex;
    int generator;
  };

  /// Sorts and deduplicates `vertices`, then adds every edge a -- a*t_i
  /// with both ends present.
  LabeledGraph(int n, std::vector<Permutation> vertices);

  int degree_n() const noexcept { return n_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Permutation> &vertices() const noexcept { return vertices_; }
  const Permutation &vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<LabeledEdge> &edges() const noexcept { return edges_; }
  const std::vector<Neighbor> &neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

  std::optional<int> index_of(const Permutation &p) const;
  bool has_edge(int u, int v) const;

private:
  int n_;
  std::vector<Permutation> vertices_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Vertex set {p : predicate(p)} by filtering the whole group.
LabeledGraph build_gamma(int n, const PermPredicate &predicate, int bound = default_graph_bound);

/// Vertex set of a simple class. b- and c-simple permutations are generated
/// directly (square-free D-words, single cycles); the others are filtered.
LabeledGraph build_gamma(int n, SimpleClass cls, int bound = default_graph_bound);

std::vector<Permutation> generate_b_simple(int n);
std::vector<Permutation> generate_c_simple(int n);

/// Connected components, each sorted, ordered by their smallest vertex.
std::vector<std::vector<int>> components(const LabeledGraph &g);

/// Id -- t_{k1} -- t_{k1} t_{k1-1} -- ... -- p along the prefixes of the
/// Coxeter normal form. Throws NotBSimple.
std::vector<Permutation> geodesic_to_identity(const Permutation &p);

struct DotOptions {
  bool components = false;
  bool decorate = false; ///< annotate vertices with their c/g/s/t membership
  std::string name = "gamma";
};

std::string export_dot(const LabeledGraph &g, const DotOptions &options = {});

} // namespace permsimple

#endif
