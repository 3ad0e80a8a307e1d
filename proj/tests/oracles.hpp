#ifndef PERMSIMPLE_TESTS_ORACLES_HPP
#define PERMSIMPLE_TESTS_ORACLES_HPP

// Brute-force reference implementations on plain vectors. Nothing here
// calls into the library, so they serve as independent routes.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<Word> all_words(int n)
{
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do
    out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int at(const Word &w, int i) { return w[static_cast<std::size_t>(i - 1)]; }

// (a o b)(i) = a(b(i))
inline Word compose(const Word &a, const Word &b)
{
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = at(a, b[i]);
  return r;
}

inline Word identity(int n)
{
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline Word tau(int n, int i)
{
  Word w = identity(n);
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return w;
}

inline Word evaluate(int n, const std::vector<int> &letters)
{
  Word w = identity(n);
  for (int l : letters)
    w = compose(w, tau(n, l));
  return w;
}

inline int inversions(const Word &w)
{
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      c += w[i] > w[j];
  return c;
}

inline std::vector<std::vector<int>> orbits(const Word &w)
{
  std::vector<bool> seen(w.size() + 1, false);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= static_cast<int>(w.size()); ++s) {
    if (seen[static_cast<std::size_t>(s)])
      continue;
    std::vector<int> orbit;
    for (int x = s; !seen[static_cast<std::size_t>(x)]; x = at(w, x)) {
      seen[static_cast<std::size_t>(x)] = true;
      orbit.push_back(x);
    }
    out.push_back(orbit);
  }
  return out;
}

inline long long order(const Word &w)
{
  long long o = 1;
  for (const auto &orbit : orbits(w))
    o = std::lcm(o, static_cast<long long>(orbit.size()));
  return o;
}

inline bool prime(long long p)
{
  if (p < 2)
    return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

// Definition: no segment of size 2..n-1 has a segment as image.
inline bool s_simple(const Word &w)
{
  const int n = static_cast<int>(w.size());
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi) {
      if (hi - lo + 1 == n)
        continue;
      int mn = n + 1, mx = 0;
      for (int i = lo; i <= hi; ++i) {
        mn = std::min(mn, at(w, i));
        mx = std::max(mx, at(w, i));
      }
      if (mx - mn == hi - lo)
        return false;
    }
  return true;
}

inline bool c_simple(const Word &w)
{
  int nontrivial = 0;
  for (const auto &o : orbits(w))
    nontrivial += o.size() >= 2;
  return nontrivial <= 1;
}

// The cyclic group generated by w is simple: order 1 or prime.
inline bool g_simple(const Word &w)
{
  const long long o = order(w);
  return o == 1 || prime(o);
}

// Images of every product of distinct generators, in every order.
inline std::set<Word> b_simple_set(int n)
{
  std::set<Word> out;
  const int gens = n - 1;
  for (int mask = 0; mask < (1 << std::max(gens, 0)); ++mask) {
    std::vector<int> letters;
    for (int g = 0; g < gens; ++g)
      if (mask & (1 << g))
        letters.push_back(g + 1);
    do
      out.insert(evaluate(n, letters));
    while (std::next_permutation(letters.begin(), letters.end()));
  }
  return out;
}

// Standard sequence: cycles from their maxima, ordered by maxima.
inline std::vector<int> standard_sequence(const Word &w)
{
  std::vector<std::vector<int>> cycles;
  for (auto o : orbits(w)) {
    auto mx = std::max_element(o.begin(), o.end());
    std::rotate(o.begin(), mx, o.end());
    cycles.push_back(o);
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto &a, const auto &b) { return a[0] < b[0]; });
  std::vector<int> seq;
  for (const auto &c : cycles)
    seq.insert(seq.end(), c.begin(), c.end());
  return seq;
}

// Children counts of the min-split tree, keyed by mark; root marked -1 parent.
inline void tree_degrees(const std::vector<int> &seq, std::size_t lo, std::size_t hi, bool has_parent,
                         std::map<int, int> &degree)
{
  if (lo >= hi)
    return;
  std::size_t m = lo;
  for (std::size_t i = lo; i < hi; ++i)
    if (seq[i] < seq[m])
      m = i;
  degree[seq[m]] = (has_parent ? 1 : 0) + (m > lo ? 1 : 0) + (m + 1 < hi ? 1 : 0);
  tree_degrees(seq, lo, m, true, degree);
  tree_degrees(seq, m + 1, hi, true, degree);
}

inline bool t_simple(const Word &w)
{
  const auto seq = standard_sequence(w);
  std::map<int, int> degree;
  tree_degrees(seq, 0, seq.size(), false, degree);
  for (const auto &[mark, d] : degree)
    if (d > 2)
      return false;
  return true;
}

// Connected components of the induced Cayley graph by union-find.
inline std::vector<int> component_labels(const std::vector<Word> &vertices)
{
  std::map<Word, int> index;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    index[vertices[v]] = static_cast<int>(v);
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t i = 0; i + 1 < vertices[v].size(); ++i) {
      Word u = vertices[v];
      std::swap(u[i], u[i + 1]);
      auto it = index.find(u);
      if (it != index.end())
        parent[static_cast<std::size_t>(find(static_cast<int>(v)))] = find(it->second);
    }
  }
  std::vector<int> labels(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    labels[v] = find(static_cast<int>(v));
  return labels;
}

inline Word random_word(int n, std::mt19937 &rng)
{
  Word w = identity(n);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

} // namespace oracle

#endif
