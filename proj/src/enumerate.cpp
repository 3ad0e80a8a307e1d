#include "permsimple/enumerate.hpp"

#include "permsimple/error.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace permsimple {

SigmaTriangle::SigmaTriangle(int n_max)
{
  if (n_max < 1)
    throw Error(Errc::domain_error, "triangle needs at least one row");
  rows_.push_back({BigInt(1)});
  rows_.push_back({BigInt(1)});
  for (int n = 2; n <= n_max; ++n) {
    std::vector<BigInt> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      r[static_cast<std::size_t>(i)] = 2 * at(n - 1, i - 1) + at(n - 1, i) - at(n - 2, i - 1);
    rows_.push_back(std::move(r));
  }
  for (int n = 2; n <= n_max; ++n)
    for (int i = 0; i < n; ++i)
      ensure(long_recurrence(n, i) == at(n, i),
             "sigma recurrences disagree at (" + std::to_string(n) + "," + std::to_string(i) + ")");
}

const BigInt &SigmaTriangle::at(int n, int i) const
{
  static const BigInt zero(0);
  if (n < 0 || n >= static_cast<int>(rows_.size()) || i < 0 || i >= static_cast<int>(rows_[static_cast<std::size_t>(n)].size()))
    return zero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

BigInt SigmaTriangle::row_sum(int n) const
{
  BigInt s = 0;
  for (const auto &v : row(n))
    s += v;
  return s;
}

BigInt SigmaTriangle::long_recurrence(int n, int i) const
{
  BigInt s = at(n - 1, i);
  for (int t = 1; t <= i; ++t)
    s += at(n - t, i - t);
  return s;
}

SigmaTriangle sigma_triangle(int n_max)
{
  return SigmaTriangle(n_max);
}

BigInt fibonacci(int m)
{
  BigInt a = 0, b = 1;
  for (int i = 0; i < m; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

BigInt factorial(int n)
{
  BigInt f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

BigInt count_b(int n)
{
  if (n < 1)
    throw Error(Errc::domain_error, "degree must be positive");
  return fibonacci(2 * n - 1);
}

BigInt count_equal_cycle_products(int n, int k, int l)
{
  if (k < 1 || l < 1 || static_cast<long long>(k) * l > n)
    throw Error(Errc::domain_error, "need k, l >= 1 and k*l <= n");
  BigInt denom = factorial(k) * factorial(n - k * l) * boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(k));
  return factorial(n) / denom;
}

BigInt count_c(int n)
{
  if (n < 1)
    throw Error(Errc::domain_error, "degree must be positive");
  BigInt total = 1;
  for (int l = 2; l <= n; ++l)
    total += factorial(n) / (l * factorial(n - l));
  return total;
}

BigInt count_g(int n)
{
  if (n < 1)
    throw Error(Errc::domain_error, "degree must be positive");
  BigInt total = 1;
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p))
      continue;
    for (int k = 1; k <= n / p; ++k)
      total += count_equal_cycle_products(n, k, p);
  }
  return total;
}

BigInt count_t(int n)
{
  if (n < 1)
    throw Error(Errc::domain_error, "degree must be positive");
  if (n == 1)
    return 1;
  return boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n - 2)) +
         boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(n - 2));
}

std::optional<BigInt> count_formula(SimpleClass c, int n)
{
  switch (c) {
  case SimpleClass::b: return count_b(n);
  case SimpleClass::c: return count_c(n);
  case SimpleClass::g: return count_g(n);
  case SimpleClass::t: return count_t(n);
  case SimpleClass::s: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void tally(const Permutation &p, CensusReport &r)
{
  const auto prof = classify(p);
  for (auto c : all_classes)
    if (prof.has(c))
      ++r.counts[static_cast<std::size_t>(c)];
  r.b_and_c += prof.in_b_and_c;
  r.b_and_g += prof.in_b_and_g;
  r.b_and_s += prof.in_b_and_s;
  r.b_and_t += prof.in_b_and_t;
  r.all_five += prof.s_simple && prof.c_simple && prof.g_simple && prof.b_simple && prof.t_simple;
  ++r.total;
}

void merge_into(CensusReport &into, const CensusReport &part)
{
  for (std::size_t i = 0; i < into.counts.size(); ++i)
    into.counts[i] += part.counts[i];
  into.total += part.total;
  into.b_and_c += part.b_and_c;
  into.b_and_g += part.b_and_g;
  into.b_and_s += part.b_and_s;
  into.b_and_t += part.b_and_t;
  into.all_five += part.all_five;
}

} // namespace

CensusReport census(int n, int bound, int jobs)
{
  if (n < 1)
    throw Error(Errc::domain_error, "degree must be positive");
  if (n > bound)
    throw Error(Errc::bound_exceeded, "census degree " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  jobs = std::clamp(jobs, 1, n);

  // Block f holds the permutations with p(1) == f; worker w takes blocks
  // w+1, w+1+jobs, ... and blocks are merged in order of f.
  std::vector<CensusReport> blocks(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(jobs));
  auto work = [&](int worker) {
    try {
      for (int f = worker + 1; f <= n; f += jobs) {
        auto &block = blocks[static_cast<std::size_t>(f - 1)];
        for_each_permutation_with_first(n, f, [&](const Permutation &p) { tally(p, block); });
      }
    } catch (...) {
      failures[static_cast<std::size_t>(worker)] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back(work, w);
  }
  for (auto &f : failures)
    if (f)
      std::rethrow_exception(f);

  CensusReport report;
  report.n = n;
  for (const auto &b : blocks)
    merge_into(report, b);

  ensure(BigInt(report.total) == factorial(n), "census visited n! permutations");
  for (auto c : all_classes)
    if (auto formula = count_formula(c, n))
      ensure(*formula == report.count(c),
             std::string("census count of class ") + class_letter(c) + " equals its closed form at n=" + std::to_string(n));
  return report;
}

std::optional<double> AsymptoticCheck::relative_gap() const
{
  if (!asymptote || *asymptote <= 0)
    return std::nullopt;
  return std::abs(census_ratio - *asymptote) / *asymptote;
}

AsymptoticCheck s_asymptotic_check(const CensusReport &report)
{
  AsymptoticCheck check;
  check.census_ratio = report.ratio(SimpleClass::s);
  const double n = report.n;
  if (report.n >= 2)
    // 1 - 4/n + 2/(n(n-1)) factored so that n = 2, 3 give exactly +0.
    check.asymptote = (n - 2.0) * (n - 3.0) / (n * (n - 1.0)) * std::exp(-2.0) + 0.0;
  return check;
}

AsymptoticCheck s_asymptotic_check(int n, int bound, int jobs)
{
  return s_asymptotic_check(census(n, bound, jobs));
}

} // namespace permsimple
