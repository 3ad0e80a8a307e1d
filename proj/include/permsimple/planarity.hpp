#ifndef PERMSIMPLE_PLANARITY_HPP
#define PERMSIMPLE_PLANARITY_HPP

#include "permsimple/cayley.hpp"

#include <optional>
#include <vector>

namespace permsimple {

/// Clockwise neighbor order around each vertex.
using RotationSystem = std::vector<std::vector<int>>;

/// A subdivision of K5 or K3,3 inside a graph: branch vertices plus one
/// path (vertex sequence, branch vertices at both ends) per edge of the
/// underlying Kuratowski graph.
struct KuratowskiSubdivision {
  enum class Kind { k5, k33 };

  Kind kind = Kind::k33;
  std::vector<int> branch_vertices;
  /// For K3,3 the two sides; empty for K5.
  std::vector<int> side_a;
  std::vector<int> side_b;
  std::vector<std::vector<int>> paths;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> embedding;
  std::optional<KuratowskiSubdivision> obstruction;
};

/// Boyer-Myrvold test. Both outcomes are certified before returning:
/// embeddings by face tracing against Euler's formula, obstructions by
/// re-walking every path in the graph. A failed check raises
/// InvariantViolation.
PlanarityResult is_planar(const LabeledGraph &g);

/// Faces of the rotation system counted by tracing darts.
int count_faces(const LabeledGraph &g, const RotationSystem &rotation);

/// V - E + F == 2 * (components with an edge) + isolated vertices.
bool verify_embedding(const LabeledGraph &g, const RotationSystem &rotation);

/// Paths use graph edges, are internally disjoint, avoid other branch
/// vertices and join exactly the pairs required by K5 or K3,3.
bool verify_kuratowski(const LabeledGraph &g, const KuratowskiSubdivision &s);

/// A K3,3 subdivision, searching past K5 obstructions by deleting their
/// edges one at a time (bounded by `budget` planarity tests).
std::optional<KuratowskiSubdivision> k33_witness(const LabeledGraph &g, int budget = 500);

} // namespace permsimple

#endif
