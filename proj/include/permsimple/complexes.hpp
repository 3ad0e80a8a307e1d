#ifndef PERMSIMPLE_COMPLEXES_HPP
#define PERMSIMPLE_COMPLEXES_HPP

#include "permsimple/permutation.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace permsimple {

inline constexpr int default_complex_bound = 6;

struct Cell {
  int dim = 0;
  std::vector<int> vertices;                 ///< sorted indices into CellComplex::points
  std::vector<std::pair<int, int>> boundary; ///< (cell id, incidence number)
};

/// A regular cell complex with integral incidences. Cells are sorted by
/// dimension and the i-th 0-cell is points[i].
struct CellComplex {
  int n = 0;
  std::vector<Permutation> points;
  std::vector<Cell> cells;

  int dimension() const noexcept;
  /// Number of cells in each dimension 0..dimension().
  std::vector<std::int64_t> f_vector() const;
  std::vector<int> cells_of_dim(int d) const;
};

/// Every boundary of a boundary vanishes over the integers.
bool boundary_squared_is_zero(const CellComplex &c);

/// Checks ∂² = 0, the 0-cell layout, and that each cell's vertex set is
/// the union of the vertex sets of its boundary cells. Raises
/// InvariantViolation.
void validate(const CellComplex &c);

/// Faces of the permutahedron, one per ordered set partition (B1|...|Bk) of
/// [n]; a word lies on the face when its first |B1| entries form B1, the
/// next |B2| form B2, and so on. Throws BoundExceeded.
CellComplex permutahedron_complex(int n, int bound = default_complex_bound);

/// Cells whose vertices all satisfy `keep`, renumbered, incidences kept.
CellComplex induced_subcomplex(const CellComplex &c, const std::function<bool(const Permutation &)> &keep);

struct Poset {
  int n = 0;
  std::vector<Permutation> elements;      ///< all of the symmetric group, lexicographic
  std::vector<std::pair<int, int>> covers; ///< (a, b): a is covered by b
};

/// beta = alpha * (i j) with length(beta) = length(alpha) + 1.
Poset bruhat_covers(int n, int bound = default_complex_bound);
/// beta = alpha * t_i with length(beta) = length(alpha) + 1.
Poset weak_covers(int n, int bound = default_complex_bound);

enum class Order { bruhat, weak };

/// Simplices are the chains of the order restricted to `elements`, which
/// must share one degree.
CellComplex order_complex(const std::vector<Permutation> &elements, Order order,
                          int bound = default_complex_bound);

std::int64_t euler_characteristic(const CellComplex &c);

struct HomologyGroup {
  int dim = 0;
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion; ///< invariant factors > 1

  bool trivial() const noexcept { return rank == 0 && torsion.empty(); }
};

/// Integral reduced homology in dimensions 0..dimension() (dimension -1
/// for the empty complex), by Smith normal form. Throws Overflow if an
/// intermediate entry leaves the 64-bit range.
std::vector<HomologyGroup> reduced_homology(const CellComplex &c);

/// Diagonal of the Smith normal form of an integer matrix (nonzero
/// entries, each dividing the next). Throws Overflow.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m);

enum class CollapseOutcome { collapsed, inconclusive };

/// Removes free pairs (face with a single coface, that coface) of cells
/// outside `target` until only `target` remains. `target` lists cell ids of
/// `c` and must be a subcomplex.
CollapseOutcome collapse_onto(const CellComplex &c, const std::vector<int> &target, int budget = 32);

struct FiltrationStage {
  int j = 0;
  std::vector<Permutation> vertices; ///< degree n+1, sorted
  CellComplex complex;
};

/// Stages F_{n+1} c F_n c ... c F_1 of the braid-simple part of the
/// permutahedron of degree n+1. F_j keeps the braid-simple words whose
/// normal form does not end in a run D(n, j') with j' < j; F_{n+1} is
/// P(bS_n) and F_1 is P(bS_{n+1}).
struct Filtration {
  int n = 0;
  std::vector<FiltrationStage> stages;   ///< stages[0] = F_{n+1}, back() = F_1
  std::vector<CollapseOutcome> collapses; ///< collapses[t]: stages[t+1] onto stages[t]
};

/// Throws BoundExceeded when n + 1 exceeds `bound`.
Filtration bs_filtration(int n, int bound = default_complex_bound, int collapse_budget = 32);

} // namespace permsimple

#endif
