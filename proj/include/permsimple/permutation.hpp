#ifndef PERMSIMPLE_PERMUTATION_HPP
#define PERMSIMPLE_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace permsimple {

/// A permutation of {1..n} stored as its one-line word [p(1), ..., p(n)].
///
/// Values are immutable once constructed; all operations are pure.
class Permutation {
public:
  /// Validates that `word` is a bijection of {1..n}; throws Error otherwise.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// The adjacent transposition (i, i+1) in degree n, 1 <= i < n.
  static Permutation adjacent_transposition(int n, int i);

  /// Builds a permutation from disjoint cycles (each a list of points).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles);

  int degree() const noexcept { return static_cast<int>(word_.size()); }

  /// p(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> word() const noexcept { return word_; }

  bool is_identity() const noexcept;

  /// p * (i, i+1): swaps the entries at positions i and i+1 of the word.
  Permutation times_adjacent(int i) const;

  /// Packs the word into 4-bit nibbles; valid for n <= 16.
  std::uint64_t key() const noexcept;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a, const Permutation &b)
  {
    if (a.word_.size() != b.word_.size())
      return a.word_.size() <=> b.word_.size();
    return a.word_ <=> b.word_;
  }

private:
  struct unchecked_tag { };
  Permutation(std::vector<int> word, unchecked_tag) : word_(std::move(word)) { }

  std::vector<int> word_;

  friend Permutation compose(const Permutation &, const Permutation &);
  friend Permutation inverse(const Permutation &);
};

/// (a o b)(i) = a(b(i)). Throws on degree mismatch.
Permutation compose(const Permutation &a, const Permutation &b);
Permutation inverse(const Permutation &a);

/// Number of inversions, i.e. the Coxeter length.
int coxeter_length(const Permutation &p);

/// Standard representation: each cycle starts at its maximum, cycles are
/// ordered by increasing maxima.
struct CycleDecomposition {
  int n = 0;
  std::vector<std::vector<int>> cycles;
  bool includes_fixed_points = false;

  friend bool operator==(const CycleDecomposition &, const CycleDecomposition &) = default;
};

CycleDecomposition cycle_decomposition(const Permutation &p, bool include_fixed);

/// Re-normalizes an arbitrary list of disjoint cycles to standard form.
CycleDecomposition normalize_cycles(int n, std::vector<std::vector<int>> cycles,
                                    bool include_fixed);

Permutation to_permutation(const CycleDecomposition &c);

/// Flattening of the standard representation, fixed points included.
std::vector<int> standard_sequence(const Permutation &p);

/// Cycle lengths >= 2, sorted ascending.
std::vector<int> cycle_type(const Permutation &p);

/// Streams every permutation of degree n in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation &)> &visit);

/// Same, restricted to permutations with p(1) == first.
void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(const Permutation &)> &visit);

} // namespace permsimple

template<>
struct std::hash<permsimple::Permutation> {
  std::size_t operator()(const permsimple::Permutation &p) const noexcept
  {
    return std::hash<std::uint64_t>{}(p.key() ^ (static_cast<std::uint64_t>(p.degree()) << 60));
  }
};

#endif
