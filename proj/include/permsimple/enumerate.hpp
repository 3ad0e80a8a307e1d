#ifndef PERMSIMPLE_ENUMERATE_HPP
#define PERMSIMPLE_ENUMERATE_HPP

#include "permsimple/classify.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <vector>

namespace permsimple {

using BigInt = boost::multiprecision::cpp_int;

/// sigma(n, i): number of b-simple permutations of degree n and length i.
class SigmaTriangle {
public:
  /// Rows 1..n_max by the three-term recurrence; every entry is then
  /// recomputed by the long recurrence and a mismatch raises
  /// InvariantViolation.
  explicit SigmaTriangle(int n_max);

  int rows() const noexcept { return static_cast<int>(rows_.size()) - 1; }

  /// Zero outside 0 <= i <= n-1.
  const BigInt &at(int n, int i) const;
  const std::vector<BigInt> &row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
  BigInt row_sum(int n) const;

  /// sigma(n,i) = sigma(n-1,i) + sigma(n-1,i-1) + sigma(n-2,i-2) + ... + sigma(n-i,0)
  BigInt long_recurrence(int n, int i) const;

private:
  std::vector<std::vector<BigInt>> rows_; // rows_[0] is the degree-0 row {1}
};

SigmaTriangle sigma_triangle(int n_max);

/// F(m) with F(0)=0, F(1)=1.
BigInt fibonacci(int m);
BigInt factorial(int n);

BigInt count_b(int n);
/// Permutations that are products of k disjoint cycles of length l.
BigInt count_equal_cycle_products(int n, int k, int l);
BigInt count_c(int n);
BigInt count_g(int n);
BigInt count_t(int n);

/// Closed form for the class, absent for s (no formula exists).
std::optional<BigInt> count_formula(SimpleClass c, int n);

inline constexpr int default_census_bound = 9;

struct CensusReport {
  int n = 0;
  std::array<long long, 5> counts{}; ///< indexed in all_classes order: s c g b t
  long long total = 0;

  long long b_and_c = 0;
  long long b_and_g = 0;
  long long b_and_s = 0;
  long long b_and_t = 0;
  long long all_five = 0;

  long long count(SimpleClass c) const noexcept { return counts[static_cast<std::size_t>(c)]; }
  double ratio(SimpleClass c) const noexcept { return static_cast<double>(count(c)) / static_cast<double>(total); }
};

/// Exhaustive pass over the symmetric group, partitioned by p(1) across
/// `jobs` worker threads. Counts for b, c, g, t are checked against the
/// closed forms. Throws BoundExceeded when n > bound.
CensusReport census(int n, int bound = default_census_bound, int jobs = 1);

struct AsymptoticCheck {
  double census_ratio = 0;
  /// (1 - 4/n + 2/(n(n-1))) / e^2; undefined for n = 1.
  std::optional<double> asymptote;

  std::optional<double> relative_gap() const;
};

AsymptoticCheck s_asymptotic_check(int n, int bound = default_census_bound, int jobs = 1);
AsymptoticCheck s_asymptotic_check(const CensusReport &report);

} // namespace permsimple

#endif
