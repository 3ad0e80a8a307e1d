#include "permsimple/classify.hpp"

#include "permsimple/coxeter.hpp"
#include "permsimple/error.hpp"
#include "permsimple/notation.hpp"
#include "permsimple/tree.hpp"

#include <algorithm>

namespace permsimple {

char class_letter(SimpleClass c) noexcept
{
  switch (c) {
  case SimpleClass::s: return 's';
  case SimpleClass::c: return 'c';
  case SimpleClass::g: return 'g';
  case SimpleClass::b: return 'b';
  case SimpleClass::t: return 't';
  }
  return '?';
}

std::optional<SimpleClass> parse_class(std::string_view text)
{
  for (auto c : all_classes)
    if (text.size() == 1 && text[0] == class_letter(c))
      return c;
  return std::nullopt;
}

bool SimplicityProfile::has(SimpleClass c) const noexcept
{
  switch (c) {
  case SimpleClass::s: return s_simple;
  case SimpleClass::c: return c_simple;
  case SimpleClass::g: return g_simple;
  case SimpleClass::b: return b_simple;
  case SimpleClass::t: return t_simple;
  }
  return false;
}

bool is_prime(long long n) noexcept
{
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool is_s_simple(const Permutation &p)
{
  const auto w = p.word();
  const std::size_t n = w.size();
  for (std::size_t a = 0; a < n; ++a) {
    int lo = w[a];
    int hi = w[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      lo = std::min(lo, w[b]);
      hi = std::max(hi, w[b]);
      const std::size_t size = b - a + 1;
      if (size == n)
        break;
      if (static_cast<std::size_t>(hi - lo) == size - 1)
        return false;
    }
  }
  return true;
}

bool is_c_simple(const Permutation &p)
{
  return cycle_type(p).size() <= 1;
}

std::optional<GWitness> g_witness(const Permutation &p)
{
  const auto lengths = cycle_type(p);
  if (lengths.empty())
    return std::nullopt;
  if (lengths.front() != lengths.back() || !is_prime(lengths.front()))
    return std::nullopt;
  return GWitness{lengths.front(), static_cast<int>(lengths.size())};
}

bool is_g_simple(const Permutation &p)
{
  return p.is_identity() || g_witness(p).has_value();
}

bool is_connected_perm(const Permutation &p)
{
  for (const auto &c : cycle_decomposition(p, false).cycles) {
    const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
    if (*hi - *lo + 1 != static_cast<int>(c.size()))
      return false;
  }
  return true;
}

bool is_unimodal_cycle(std::span<const int> cycle)
{
  if (cycle.empty())
    throw Error(Errc::empty_input, "empty cycle");
  if (*std::max_element(cycle.begin(), cycle.end()) != cycle.front())
    throw Error(Errc::not_standard_form, "cycle must start at its maximum");
  std::size_t i = 1;
  while (i < cycle.size() && cycle[i] < cycle[i - 1])
    ++i;
  while (i < cycle.size() && cycle[i] > cycle[i - 1])
    ++i;
  return i == cycle.size();
}

bool is_b_simple_by_cycles(const Permutation &p)
{
  if (!is_connected_perm(p))
    return false;
  for (const auto &c : cycle_decomposition(p, false).cycles)
    if (!is_unimodal_cycle(c))
      return false;
  return true;
}

bool is_b_simple_by_word(const Permutation &p)
{
  return is_square_free(coxeter_normal_form(p));
}

bool is_b_simple(const Permutation &p)
{
  const bool by_cycles = is_b_simple_by_cycles(p);
  ensure(by_cycles == is_b_simple_by_word(p),
         "b-simple: connected+unimodal disagrees with square-free normal form for " + format_one_line(p));
  return by_cycles;
}

bool is_t_simple(const Permutation &p)
{
  const auto tree = build_tree(p);
  for (int m = 1; m <= tree.size(); ++m)
    if (m != tree.root() && tree.node(m).child_count() > 1)
      return false;
  return true;
}

bool has_three_consecutive(std::span<const int> cycle)
{
  const std::size_t s = cycle.size();
  if (s < 3)
    return false;
  for (std::size_t i = 0; i < s; ++i) {
    const int x = cycle[i];
    const int y = cycle[(i + 1) % s];
    const int z = cycle[(i + 2) % s];
    if ((y == x + 1 && z == x + 2) || (y == x - 1 && z == x - 2))
      return true;
  }
  return false;
}

bool b_and_c_by_word(const Permutation &p)
{
  if (p.is_identity())
    return true;
  const auto w = coxeter_normal_form(p);
  for (std::size_t i = 0; i + 1 < w.runs.size(); ++i)
    if (w.runs[i].k + 1 != w.runs[i + 1].j)
      return false;
  return true;
}

bool b_and_g_by_word(const Permutation &p)
{
  if (p.is_identity())
    return true;
  const auto w = coxeter_normal_form(p);
  // Split the runs into blocks of chained runs (k_i + 1 == j_{i+1}); blocks
  // are separated by jumps k_i + 1 < j_{i+1}. Each block is one cycle of
  // length k_last - j_first + 2.
  int block_prime = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.runs.size(); ++i) {
    const bool last = i + 1 == w.runs.size();
    if (!last) {
      const int next_j = w.runs[i + 1].j;
      if (next_j <= w.runs[i].k)
        return false; // a repeated generator
      if (next_j == w.runs[i].k + 1)
        continue;
    }
    const int length = w.runs[i].k - w.runs[start].j + 2;
    if (!is_prime(length))
      return false;
    if (block_prime != 0 && block_prime != length)
      return false;
    block_prime = length;
    start = i + 1;
  }
  return true;
}

bool b_and_s_by_cycle(const Permutation &p)
{
  const int n = p.degree();
  if (n <= 2)
    return true; // no proper segments, and every permutation is b-simple
  const auto cycles = cycle_decomposition(p, false).cycles;
  if (cycles.size() != 1 || static_cast<int>(cycles.front().size()) != n)
    return false;
  return is_unimodal_cycle(cycles.front()) && !has_three_consecutive(cycles.front());
}

bool b_and_t_by_tree(const Permutation &p)
{
  const auto tree = build_tree(p);
  const int root = tree.root();
  std::optional<int> bend;
  for (int m = 1; m <= tree.size(); ++m) {
    if (m == root)
      continue;
    const auto &v = tree.node(m);
    if (v.child_count() > 1)
      return false;
    if (v.child_count() == 0)
      continue;
    const Side child_side = v.left ? Side::left : Side::right;
    if (child_side != *v.side) {
      if (bend)
        return false; // a second right angle
      bend = m;
    }
  }
  if (!bend)
    return true;
  const auto right = tree.branch(Side::right);
  if (!std::binary_search(right.begin(), right.end(), *bend))
    return false;
  const auto left = tree.branch(Side::left);
  return left.empty() || left.back() < *bend;
}

namespace {

bool checked(bool definition, bool characterization, const char *what, const Permutation &p)
{
  ensure(definition == characterization,
         std::string(what) + ": base predicates disagree with the characterization for " + format_one_line(p));
  return definition;
}

} // namespace

bool in_b_and_c(const Permutation &p)
{
  return checked(is_b_simple(p) && is_c_simple(p), b_and_c_by_word(p), "b∩c", p);
}

bool in_b_and_g(const Permutation &p)
{
  return checked(is_b_simple(p) && is_g_simple(p), b_and_g_by_word(p), "b∩g", p);
}

bool in_b_and_s(const Permutation &p)
{
  return checked(is_b_simple(p) && is_s_simple(p), b_and_s_by_cycle(p), "b∩s", p);
}

bool in_b_and_t(const Permutation &p)
{
  return checked(is_b_simple(p) && is_t_simple(p), b_and_t_by_tree(p), "b∩t", p);
}

bool in_class(SimpleClass c, const Permutation &p)
{
  switch (c) {
  case SimpleClass::s: return is_s_simple(p);
  case SimpleClass::c: return is_c_simple(p);
  case SimpleClass::g: return is_g_simple(p);
  case SimpleClass::b: return is_b_simple(p);
  case SimpleClass::t: return is_t_simple(p);
  }
  return false;
}

SimplicityProfile classify(const Permutation &p)
{
  SimplicityProfile prof;
  prof.s_simple = is_s_simple(p);
  prof.c_simple = is_c_simple(p);
  prof.g_simple = is_g_simple(p);
  prof.b_simple = is_b_simple(p);
  prof.t_simple = is_t_simple(p);
  prof.g_witness = g_witness(p);
  prof.in_b_and_c = in_b_and_c(p);
  prof.in_b_and_g = in_b_and_g(p);
  prof.in_b_and_s = in_b_and_s(p);
  prof.in_b_and_t = in_b_and_t(p);
  return prof;
}

std::optional<Permutation> quintuple_witness(int n)
{
  if (n < 1)
    throw Error(Errc::domain_error, "degree must be positive");
  std::optional<Permutation> w;
  if (n == 1) {
    w = Permutation::identity(1);
  } else if (n == 2) {
    w = Permutation({2, 1});
  } else if (n >= 5 && is_prime(n)) {
    std::vector<int> cycle;
    for (int v = n; v >= 1; v -= 2)
      cycle.push_back(v);
    for (int v = 2; v < n; v += 2)
      cycle.push_back(v);
    w = Permutation::from_cycles(n, {cycle});
  }
  if (w) {
    const auto prof = classify(*w);
    ensure(prof.s_simple && prof.c_simple && prof.g_simple && prof.b_simple && prof.t_simple,
           "quintuple witness must lie in all five classes");
  }
  return w;
}

} // namespace permsimple
