#include "permsimple/coxeter.hpp"

#include "permsimple/error.hpp"

#include <algorithm>
#include <string>

namespace permsimple {

int CoxeterWord::length() const noexcept
{
  int total = 0;
  for (const auto &r : runs)
    total += r.length();
  return total;
}

std::vector<int> CoxeterWord::letters() const
{
  std::vector<int> out;
  for (const auto &r : runs)
    for (int i = r.k; i >= r.j; --i)
      out.push_back(i);
  return out;
}

CoxeterWord coxeter_normal_form(const Permutation &p)
{
  const int n = p.degree();
  std::vector<int> w(p.word().begin(), p.word().end());
  std::vector<Run> reversed;
  // Right-multiplying by D(m-1, j)^{-1} moves the entry m from position j
  // to position m, shifting positions j+1..m one step left.
  for (int m = n; m >= 2; --m) {
    const auto pos = std::find(w.begin(), w.begin() + m, m);
    const int j = static_cast<int>(pos - w.begin()) + 1;
    if (j == m)
      continue;
    std::rotate(pos, pos + 1, w.begin() + m);
    reversed.push_back(Run{m - 1, j});
  }
  std::reverse(reversed.begin(), reversed.end());
  return CoxeterWord{n, std::move(reversed)};
}

Permutation evaluate_letters(int n, const std::vector<int> &letters)
{
  auto p = Permutation::identity(n);
  for (int i : letters)
    p = p.times_adjacent(i);
  return p;
}

Permutation evaluate_word(const CoxeterWord &w)
{
  int previous = 0;
  for (const auto &r : w.runs) {
    if (r.j < 1 || r.j > r.k || r.k >= w.n)
      throw Error(Errc::run_out_of_range,
                  "D(" + std::to_string(r.k) + "," + std::to_string(r.j) + ") in degree " + std::to_string(w.n));
    if (r.k <= previous)
      throw Error(Errc::not_standard_form, "run maxima must strictly increase");
    previous = r.k;
  }
  return evaluate_letters(w.n, w.letters());
}

bool is_square_free(const CoxeterWord &w)
{
  std::vector<bool> used(static_cast<std::size_t>(std::max(w.n, 1)), false);
  for (int i : w.letters()) {
    if (used[static_cast<std::size_t>(i)])
      return false;
    used[static_cast<std::size_t>(i)] = true;
  }
  return true;
}

} // namespace permsimple
