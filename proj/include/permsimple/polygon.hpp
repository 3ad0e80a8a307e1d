#ifndef PERMSIMPLE_POLYGON_HPP
#define PERMSIMPLE_POLYGON_HPP

#include "permsimple/permutation.hpp"

#include <compare>
#include <map>
#include <span>
#include <variant>
#include <vector>

namespace permsimple {

/// The oriented polygon of a cycle: its points in cyclic order, written
/// from the maximum. Cycles of length 1 and 2 carry a tag instead.
struct PolygonalType {
  enum class Kind { identity, transposition, polygon };

  Kind kind = Kind::polygon;
  int n = 0;
  std::vector<int> vertices;

  std::size_t size() const noexcept { return vertices.size(); }

  friend bool operator==(const PolygonalType &, const PolygonalType &) = default;
  friend auto operator<=>(const PolygonalType &, const PolygonalType &) = default;
};

/// Rotates `cycle` to start at its maximum. Throws TooShort below three
/// points and DomainError for repeated or out-of-range points.
PolygonalType polygon_of_cycle(std::span<const int> cycle, int n);

/// Tagged polygon of a c-simple permutation. Throws NotCSimple.
PolygonalType polygon_of(const Permutation &p);

/// All polygons reached by one move: drop vertex j from a side i -> j when
/// no other vertex lies strictly between i and j. Requires size >= 4;
/// smaller polygons have no moves.
std::vector<PolygonalType> reduce_once(const PolygonalType &poly);

struct TriangleClass {
  friend bool operator==(TriangleClass, TriangleClass) = default;
};

struct IrreducibleType {
  PolygonalType polygon;

  friend bool operator==(const IrreducibleType &, const IrreducibleType &) = default;
};

using ReductionResult = std::variant<TriangleClass, IrreducibleType>;

/// Every end point of a maximal reduction sequence.
struct ReductionTerminals {
  bool triangle = false;
  std::vector<PolygonalType> irreducible; ///< sorted, distinct, size >= 4

  /// All sequences end in triangles, or all end in one irreducible type.
  bool confluent() const noexcept { return irreducible.empty() || (!triangle && irreducible.size() == 1); }
};

/// Explores all reduction sequences. Memoized per thread.
ReductionTerminals reduction_terminals(const PolygonalType &poly);

/// TriangleClass if any sequence reaches a triangle, otherwise the unique
/// irreducible type. Non-confluent input raises InvariantViolation.
ReductionResult irreducible_type(const PolygonalType &poly);

struct Interval {
  int lo = 1;
  int hi = 0;

  bool empty() const noexcept { return lo > hi; }
  bool contains(int v) const noexcept { return lo <= v && v <= hi; }

  friend bool operator==(Interval, Interval) = default;
};

struct NeighboringIntervals {
  Interval minus;
  Interval plus;
};

/// I-(a) and I+(a) for every vertex a of `t`, keyed by vertex.
std::map<int, NeighboringIntervals> neighboring_intervals(const IrreducibleType &t);

/// How a block between consecutive vertices of an irreducible type must
/// sit relative to the neighboring intervals of the vertex before it.
enum class BlockReading {
  per_element, ///< every point in I-(a) or I+(a)
  whole_block, ///< the whole block inside one of I-(a), I+(a)
};

/// A polygon reducible to `t`, read from t's maximum, splits into the
/// vertices of t interleaved with blocks. Each block sits in the
/// neighboring intervals of the vertex before it (per `reading`), points
/// placed in a shared interval I+(a_p) == I-(a_q) by blocks p and q are
/// separated, and inserting a single block into t still reduces to t.
bool matches_block_structure(const PolygonalType &poly, const IrreducibleType &t,
                             BlockReading reading = BlockReading::per_element);

/// Component key in the c-simple graph: empty for the component of the
/// identity, otherwise the irreducible type's vertices.
struct CComponentId {
  std::vector<int> irreducible;

  bool is_identity_component() const noexcept { return irreducible.empty(); }

  friend bool operator==(const CComponentId &, const CComponentId &) = default;
  friend auto operator<=>(const CComponentId &, const CComponentId &) = default;
};

/// Throws NotCSimple.
CComponentId cs_component_of(const Permutation &p);

struct IdentityComponent {
  friend bool operator==(const IdentityComponent &, const IdentityComponent &) = default;
  friend auto operator<=>(const IdentityComponent &, const IdentityComponent &) = default;
};

/// The transposition (j, i), j >= i + 3, with its products by disjoint
/// adjacent transpositions and its attached 3-cycles.
struct Cji {
  int j = 0;
  int i = 0;

  friend bool operator==(const Cji &, const Cji &) = default;
  friend auto operator<=>(const Cji &, const Cji &) = default;
};

/// At least two disjoint transpositions (j, i) with j >= i + 2, times
/// disjoint adjacent transpositions.
struct CJI {
  std::vector<std::pair<int, int>> transpositions; ///< (j, i), sorted

  friend bool operator==(const CJI &, const CJI &) = default;
  friend auto operator<=>(const CJI &, const CJI &) = default;
};

/// An isolated product of 3-cycles. Each factor is (k, j, i) with
/// k > j > i; sign +1 for the cycle (k j i), -1 for (k i j).
struct ThreeCycleSingleton {
  struct Factor {
    int k = 0;
    int j = 0;
    int i = 0;
    int sign = 1;

    friend bool operator==(const Factor &, const Factor &) = default;
    friend auto operator<=>(const Factor &, const Factor &) = default;
  };
  std::vector<Factor> factors;

  friend bool operator==(const ThreeCycleSingleton &, const ThreeCycleSingleton &) = default;
  friend auto operator<=>(const ThreeCycleSingleton &, const ThreeCycleSingleton &) = default;
};

/// q disjoint p-cycles, p >= 5 prime.
struct PrimePowerSingleton {
  int p = 0;
  int q = 0;
  std::vector<int> word; ///< one-line word of the permutation

  friend bool operator==(const PrimePowerSingleton &, const PrimePowerSingleton &) = default;
  friend auto operator<=>(const PrimePowerSingleton &, const PrimePowerSingleton &) = default;
};

using GComponentId = std::variant<IdentityComponent, Cji, CJI, ThreeCycleSingleton, PrimePowerSingleton>;

/// Throws NotGSimple.
GComponentId gs_component_of(const Permutation &p);

/// Which clause of the cycle-times-generator computation applies.
enum class GeneratorProductCase {
  both_fixed,     ///< a new transposition (i+1, i)
  insert_after_i, ///< i+1 was fixed
  insert_i,       ///< i was fixed
  remove,         ///< i, i+1 adjacent in one cycle
  split,          ///< i, i+1 non-adjacent in one cycle
  merge,          ///< i, i+1 in different cycles
};

GeneratorProductCase generator_product_case(const CycleDecomposition &c, int i);

/// c * t_i computed on the cycle lists; the result is checked against the
/// one-line product.
CycleDecomposition multiply_by_generator(const CycleDecomposition &c, int i);

} // namespace permsimple

#endif
