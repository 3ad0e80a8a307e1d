#ifndef PERMSIMPLE_COXETER_HPP
#define PERMSIMPLE_COXETER_HPP

#include "permsimple/permutation.hpp"

#include <vector>

namespace permsimple {

/// The descending run D(k, j) = t_k t_{k-1} ... t_j, 1 <= j <= k.
struct Run {
  int k = 0;
  int j = 0;

  int length() const noexcept { return k - j + 1; }

  friend bool operator==(const Run &, const Run &) = default;
};

/// A product of descending runs with strictly increasing maxima. The
/// normal form of every permutation has this shape.
struct CoxeterWord {
  int n = 0;
  std::vector<Run> runs;

  /// Total number of generators.
  int length() const noexcept;

  /// Generator indices left to right, e.g. D(3,1)D(4,4) -> 3 2 1 4.
  std::vector<int> letters() const;

  friend bool operator==(const CoxeterWord &, const CoxeterWord &) = default;
};

/// Length-lexicographically smallest reduced word, peeled one maximum at a
/// time: p = s * D(n-1, j) with j = p^{-1}(n) and s fixing n.
CoxeterWord coxeter_normal_form(const Permutation &p);

/// Product of the runs. Throws RunOutOfRange when a run leaves 1..n-1 and
/// NotStandardForm when maxima do not increase.
Permutation evaluate_word(const CoxeterWord &w);

/// Product of an arbitrary sequence of generator indices.
Permutation evaluate_letters(int n, const std::vector<int> &letters);

/// Every generator appears at most once in the normal form.
bool is_square_free(const CoxeterWord &w);

} // namespace permsimple

#endif
