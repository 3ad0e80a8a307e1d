#include "permsimple/permutation.hpp"

#include "permsimple/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace permsimple {

const char *errc_name(Errc code) noexcept
{
  switch (code) {
  case Errc::empty_input: return "EmptyInput";
  case Errc::parse_error: return "ParseError";
  case Errc::not_a_bijection: return "NotABijection";
  case Errc::degree_mismatch: return "DegreeMismatch";
  case Errc::run_out_of_range: return "RunOutOfRange";
  case Errc::not_standard_form: return "NotStandardForm";
  case Errc::domain_error: return "DomainError";
  case Errc::bound_exceeded: return "BoundExceeded";
  case Errc::not_b_simple: return "NotBSimple";
  case Errc::not_c_simple: return "NotCSimple";
  case Errc::not_g_simple: return "NotGSimple";
  case Errc::too_short: return "TooShort";
  case Errc::overflow: return "Overflow";
  case Errc::invariant_violation: return "InvariantViolation";
  }
  return "Unknown";
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
  if (word_.empty())
    throw Error(Errc::empty_input, "permutation of degree 0");
  const int n = degree();
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n)
      throw Error(Errc::not_a_bijection, "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw Error(Errc::not_a_bijection, "duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n)
{
  if (n < 1)
    throw Error(Errc::empty_input, "degree must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w), unchecked_tag{});
}

Permutation Permutation::adjacent_transposition(int n, int i)
{
  if (i < 1 || i >= n)
    throw Error(Errc::run_out_of_range, "generator index " + std::to_string(i) + " in degree " + std::to_string(n));
  return identity(n).times_adjacent(i);
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>> &cycles)
{
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto &c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k];
      const int to = c[(k + 1) % c.size()];
      if (from < 1 || from > n)
        throw Error(Errc::not_a_bijection, "cycle point " + std::to_string(from) + " outside 1.." + std::to_string(n));
      if (w[static_cast<std::size_t>(from - 1)] != 0)
        throw Error(Errc::not_a_bijection, "point " + std::to_string(from) + " appears twice");
      w[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  for (int i = 1; i <= n; ++i)
    if (w[static_cast<std::size_t>(i - 1)] == 0)
      w[static_cast<std::size_t>(i - 1)] = i;
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i + 1))
      return false;
  return true;
}

Permutation Permutation::times_adjacent(int i) const
{
  if (i < 1 || i >= degree())
    throw Error(Errc::run_out_of_range, "generator index " + std::to_string(i) + " in degree " + std::to_string(degree()));
  auto w = word_;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return Permutation(std::move(w), unchecked_tag{});
}

std::uint64_t Permutation::key() const noexcept
{
  std::uint64_t k = 0;
  for (int v : word_)
    k = (k << 4) | static_cast<std::uint64_t>(v - 1);
  return k;
}

Permutation compose(const Permutation &a, const Permutation &b)
{
  if (a.degree() != b.degree())
    throw Error(Errc::degree_mismatch, std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  std::vector<int> w(a.word_.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = a(b.word_[i]);
  return Permutation(std::move(w), Permutation::unchecked_tag{});
}

Permutation inverse(const Permutation &a)
{
  std::vector<int> w(a.word_.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[static_cast<std::size_t>(a.word_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(w), Permutation::unchecked_tag{});
}

int coxeter_length(const Permutation &p)
{
  const auto w = p.word();
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j])
        ++inv;
  return inv;
}

CycleDecomposition normalize_cycles(int n, std::vector<std::vector<int>> cycles, bool include_fixed)
{
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> out;
  for (auto &c : cycles) {
    if (c.empty())
      continue;
    for (int v : c)
      seen[static_cast<std::size_t>(v)] = true;
    if (c.size() == 1 && !include_fixed)
      continue;
    std::rotate(c.begin(), std::max_element(c.begin(), c.end()), c.end());
    out.push_back(std::move(c));
  }
  if (include_fixed)
    for (int v = 1; v <= n; ++v)
      if (!seen[static_cast<std::size_t>(v)])
        out.push_back({v});
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.front() < y.front(); });
  return CycleDecomposition{n, std::move(out), include_fixed};
}

CycleDecomposition cycle_decomposition(const Permutation &p, bool include_fixed)
{
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  // Visiting starts from the largest unseen point yields max-first cycles in
  // decreasing order of maxima; reversed at the end.
  for (int start = n; start >= 1; --start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    std::vector<int> c;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    if (c.size() > 1 || include_fixed)
      cycles.push_back(std::move(c));
  }
  std::reverse(cycles.begin(), cycles.end());
  return CycleDecomposition{n, std::move(cycles), include_fixed};
}

Permutation to_permutation(const CycleDecomposition &c)
{
  return Permutation::from_cycles(c.n, c.cycles);
}

std::vector<int> standard_sequence(const Permutation &p)
{
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(p.degree()));
  for (const auto &c : cycle_decomposition(p, true).cycles)
    seq.insert(seq.end(), c.begin(), c.end());
  return seq;
}

std::vector<int> cycle_type(const Permutation &p)
{
  std::vector<int> lengths;
  for (const auto &c : cycle_decomposition(p, false).cycles)
    lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

void for_each_permutation(int n, const std::function<void(const Permutation &)> &visit)
{
  auto p = Permutation::identity(n);
  std::vector<int> w(p.word().begin(), p.word().end());
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(const Permutation &)> &visit)
{
  std::vector<int> w;
  w.push_back(first);
  for (int v = 1; v <= n; ++v)
    if (v != first)
      w.push_back(v);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin() + 1, w.end()));
}

} // namespace permsimple
