#ifndef PERMSIMPLE_CLASSIFY_HPP
#define PERMSIMPLE_CLASSIFY_HPP

#include "permsimple/permutation.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace permsimple {

/// The five simple classes.
enum class SimpleClass { s, c, g, b, t };

inline constexpr SimpleClass all_classes[] = {SimpleClass::s, SimpleClass::c, SimpleClass::g,
                                              SimpleClass::b, SimpleClass::t};

char class_letter(SimpleClass c) noexcept;
std::optional<SimpleClass> parse_class(std::string_view text);

struct GWitness {
  int prime = 0;
  int multiplicity = 0;

  friend bool operator==(const GWitness &, const GWitness &) = default;
};

struct SimplicityProfile {
  bool s_simple = false;
  bool c_simple = false;
  bool g_simple = false;
  bool b_simple = false;
  bool t_simple = false;
  std::optional<GWitness> g_witness;

  bool in_b_and_c = false;
  bool in_b_and_g = false;
  bool in_b_and_s = false;
  bool in_b_and_t = false;

  bool has(SimpleClass c) const noexcept;
};

/// No segment of size 2..n-1 is mapped onto a segment.
bool is_s_simple(const Permutation &p);
/// At most one cycle of length >= 2.
bool is_c_simple(const Permutation &p);
/// Identity, or k cycles of one prime length p plus fixed points.
bool is_g_simple(const Permutation &p);
std::optional<GWitness> g_witness(const Permutation &p);

/// Every orbit is an integer interval.
bool is_connected_perm(const Permutation &p);

/// `cycle` must start at its maximum; strictly decreasing then strictly
/// increasing. Throws NotStandardForm otherwise.
bool is_unimodal_cycle(std::span<const int> cycle);

/// Connected and every cycle unimodal. Cross-checked against
/// is_b_simple_by_word; a disagreement raises InvariantViolation.
bool is_b_simple(const Permutation &p);
/// Each generator occurs at most once in the Coxeter normal form.
bool is_b_simple_by_word(const Permutation &p);
/// Connected and unimodal, without the cross-check.
bool is_b_simple_by_cycles(const Permutation &p);

/// No non-root node of T(p) has two children.
bool is_t_simple(const Permutation &p);

/// Some value-consecutive triple i, i+1, i+2 (either direction) sits at
/// cyclically consecutive positions of the cycle.
bool has_three_consecutive(std::span<const int> cycle);

// Intersections. Each evaluates the conjunction of the base predicates and,
// independently, the structural characterization; disagreement raises
// InvariantViolation.
bool in_b_and_c(const Permutation &p);
bool in_b_and_g(const Permutation &p);
bool in_b_and_s(const Permutation &p);
bool in_b_and_t(const Permutation &p);

// The characterizations alone.
bool b_and_c_by_word(const Permutation &p);
bool b_and_g_by_word(const Permutation &p);
bool b_and_s_by_cycle(const Permutation &p);
bool b_and_t_by_tree(const Permutation &p);

bool in_class(SimpleClass c, const Permutation &p);
SimplicityProfile classify(const Permutation &p);

bool is_prime(long long n) noexcept;

/// A member of all five classes, present exactly when n <= 2 or n is a
/// prime >= 5: the cycle (p, p-2, ..., 3, 1, 2, 4, ..., p-1).
std::optional<Permutation> quintuple_witness(int n);

} // namespace permsimple

#endif
