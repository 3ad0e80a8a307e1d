#include "permsimple/polygon.hpp"

#include "permsimple/classify.hpp"
#include "permsimple/error.hpp"
#include "permsimple/notation.hpp"

#include <algorithm>
#include <set>

namespace permsimple {

namespace {

std::vector<int> rotate_to_max(std::vector<int> v)
{
  std::rotate(v.begin(), std::max_element(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> rotate_to(std::vector<int> v, int first)
{
  std::rotate(v.begin(), std::find(v.begin(), v.end(), first), v.end());
  return v;
}

PolygonalType make_polygon(int n, std::vector<int> vertices)
{
  return PolygonalType{PolygonalType::Kind::polygon, n, rotate_to_max(std::move(vertices))};
}

void require_polygon(const PolygonalType &poly)
{
  if (poly.kind != PolygonalType::Kind::polygon || poly.size() < 3)
    throw Error(Errc::too_short, "polygons have at least three vertices");
}

} // namespace

PolygonalType polygon_of_cycle(std::span<const int> cycle, int n)
{
  if (cycle.size() < 3)
    throw Error(Errc::too_short, "a cycle of length " + std::to_string(cycle.size()) + " has no polygon");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : cycle) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw Error(Errc::domain_error, "cycle points must be distinct and in [1, n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return make_polygon(n, std::vector<int>(cycle.begin(), cycle.end()));
}

PolygonalType polygon_of(const Permutation &p)
{
  if (!is_c_simple(p))
    throw Error(Errc::not_c_simple, format_one_line(p));
  const auto cycles = cycle_decomposition(p, false).cycles;
  if (cycles.empty())
    return PolygonalType{PolygonalType::Kind::identity, p.degree(), {}};
  if (cycles.front().size() == 2)
    return PolygonalType{PolygonalType::Kind::transposition, p.degree(), cycles.front()};
  return polygon_of_cycle(cycles.front(), p.degree());
}

std::vector<PolygonalType> reduce_once(const PolygonalType &poly)
{
  require_polygon(poly);
  std::vector<PolygonalType> out;
  const auto &v = poly.vertices;
  const std::size_t s = v.size();
  if (s < 4)
    return out;
  for (std::size_t t = 0; t < s; ++t) {
    const int from = v[t];
    const int to = v[(t + 1) % s];
    const int lo = std::min(from, to);
    const int hi = std::max(from, to);
    const bool clear = std::none_of(v.begin(), v.end(), [&](int x) { return lo < x && x < hi; });
    if (!clear)
      continue;
    std::vector<int> rest;
    rest.reserve(s - 1);
    for (int x : v)
      if (x != to)
        rest.push_back(x);
    out.push_back(make_polygon(poly.n, std::move(rest)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReductionTerminals reduction_terminals(const PolygonalType &poly)
{
  require_polygon(poly);
  thread_local std::map<std::pair<int, std::vector<int>>, ReductionTerminals> memo;
  const auto key = std::make_pair(poly.n, poly.vertices);
  if (const auto it = memo.find(key); it != memo.end())
    return it->second;

  ReductionTerminals out;
  if (poly.size() == 3) {
    out.triangle = true;
  } else {
    const auto next = reduce_once(poly);
    if (next.empty())
      out.irreducible.push_back(poly);
    std::set<PolygonalType> irreducible;
    for (const auto &q : next) {
      const auto sub = reduction_terminals(q);
      out.triangle = out.triangle || sub.triangle;
      irreducible.insert(sub.irreducible.begin(), sub.irreducible.end());
    }
    out.irreducible.insert(out.irreducible.end(), irreducible.begin(), irreducible.end());
  }
  memo.emplace(key, out);
  return out;
}

ReductionResult irreducible_type(const PolygonalType &poly)
{
  const auto terminals = reduction_terminals(poly);
  ensure(terminals.confluent(), "reduction of " + format_cycles(CycleDecomposition{poly.n, {poly.vertices}, false}) +
                                  " ends in a unique irreducible type or only in triangles");
  if (terminals.triangle)
    return TriangleClass{};
  return IrreducibleType{terminals.irreducible.front()};
}

std::map<int, NeighboringIntervals> neighboring_intervals(const IrreducibleType &t)
{
  std::vector<int> sorted = t.polygon.vertices;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, NeighboringIntervals> out;
  for (std::size_t r = 0; r < sorted.size(); ++r) {
    const int a = sorted[r];
    NeighboringIntervals iv;
    iv.plus = {a + 1, r + 1 < sorted.size() ? sorted[r + 1] - 1 : t.polygon.n};
    iv.minus = {r > 0 ? sorted[r - 1] + 1 : 1, a - 1};
    out.emplace(a, iv);
  }
  return out;
}

bool matches_block_structure(const PolygonalType &poly, const IrreducibleType &t, BlockReading reading)
{
  require_polygon(poly);
  const auto &a = t.polygon.vertices;
  const std::size_t s = a.size();
  const auto walk = rotate_to(poly.vertices, a.front());
  if (walk.front() != a.front())
    return false;

  // blocks[r] holds the vertices between a[r] and a[r+1].
  std::vector<std::vector<int>> blocks(s);
  std::size_t r = 0;
  for (std::size_t pos = 1; pos < walk.size(); ++pos) {
    if (r + 1 < s && walk[pos] == a[r + 1])
      ++r;
    else if (std::find(a.begin(), a.end(), walk[pos]) != a.end())
      return false;
    else
      blocks[r].push_back(walk[pos]);
  }
  if (r + 1 != s)
    return false;

  const auto iv = neighboring_intervals(t);
  for (std::size_t q = 0; q < s; ++q) {
    const auto &b = blocks[q];
    const auto &here = iv.at(a[q]);
    const bool all_plus = std::all_of(b.begin(), b.end(), [&](int x) { return here.plus.contains(x); });
    const bool all_minus = std::all_of(b.begin(), b.end(), [&](int x) { return here.minus.contains(x); });
    const bool each = std::all_of(b.begin(), b.end(), [&](int x) { return here.plus.contains(x) || here.minus.contains(x); });
    if (reading == BlockReading::whole_block ? !(all_plus || all_minus) : !each)
      return false;
  }
  // Where I+(a_p) == I-(a_q), the points block p puts there lie below the
  // points block q puts there.
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q) {
      const Interval shared = iv.at(a[p]).plus;
      if (p == q || shared.empty() || shared != iv.at(a[q]).minus)
        continue;
      for (int x : blocks[p])
        for (int y : blocks[q])
          if (shared.contains(x) && shared.contains(y) && x > y)
            return false;
    }
  for (std::size_t q = 0; q < s; ++q) {
    if (blocks[q].empty())
      continue;
    std::vector<int> single(a.begin(), a.begin() + static_cast<long>(q) + 1);
    single.insert(single.end(), blocks[q].begin(), blocks[q].end());
    single.insert(single.end(), a.begin() + static_cast<long>(q) + 1, a.end());
    const auto reduced = irreducible_type(make_polygon(t.polygon.n, std::move(single)));
    if (!std::holds_alternative<IrreducibleType>(reduced) || std::get<IrreducibleType>(reduced) != t)
      return false;
  }
  return true;
}

CComponentId cs_component_of(const Permutation &p)
{
  const auto poly = polygon_of(p);
  if (poly.kind != PolygonalType::Kind::polygon)
    return {};
  const auto reduced = irreducible_type(poly);
  if (std::holds_alternative<TriangleClass>(reduced))
    return {};
  return {std::get<IrreducibleType>(reduced).polygon.vertices};
}

namespace {

GComponentId transposition_component(const std::vector<std::vector<int>> &cycles)
{
  std::vector<std::pair<int, int>> wide;
  for (const auto &c : cycles)
    if (c[0] - c[1] >= 2)
      wide.emplace_back(c[0], c[1]);
  if (wide.empty())
    return IdentityComponent{};
  if (wide.size() == 1) {
    const auto [j, i] = wide.front();
    if (j - i == 2)
      return IdentityComponent{};
    return Cji{j, i};
  }
  std::sort(wide.begin(), wide.end());
  return CJI{wide};
}

ThreeCycleSingleton::Factor three_cycle_factor(const std::vector<int> &c)
{
  // c = (c0 c1 c2) with c0 the maximum.
  ThreeCycleSingleton::Factor f;
  f.k = c[0];
  f.j = std::max(c[1], c[2]);
  f.i = std::min(c[1], c[2]);
  f.sign = c[1] > c[2] ? 1 : -1;
  return f;
}

GComponentId single_three_cycle_component(const std::vector<int> &c)
{
  const int k = c[0];
  const int x = c[1];
  const int y = c[2];
  // Shapes in the component of the identity.
  for (int i = 1; i <= k; ++i) {
    const bool match = (k == i + 2 && x == i + 1 && y == i) || (k == i + 2 && x == i && y == i + 1) ||
                       (k == i + 3 && x == i && y == i + 2) || (k == i + 3 && x == i + 1 && y == i);
    if (match)
      return IdentityComponent{};
  }
  // Shapes attached to the transposition (j, i), j >= i + 3.
  if (y == x + 1 && k >= x + 3) // (j, i, i+1)
    return Cji{k, x};
  if (y == x - 1 && k >= x + 3) // (j, i, i-1)
    return Cji{k, x};
  if (y == k - 1 && y >= x + 3) // (j+1, i, j)
    return Cji{y, x};
  if (x == k - 1 && k >= y + 3) // (j, j-1, i)
    return Cji{k, y};
  const auto f = three_cycle_factor(c);
  ensure(f.k - 2 >= f.j && f.j >= f.i + 2, "isolated 3-cycles have no value-adjacent points");
  return ThreeCycleSingleton{{f}};
}

} // namespace

GComponentId gs_component_of(const Permutation &p)
{
  const auto witness = g_witness(p);
  if (!is_g_simple(p))
    throw Error(Errc::not_g_simple, format_one_line(p));
  if (!witness)
    return IdentityComponent{};
  const auto cycles = cycle_decomposition(p, false).cycles;
  switch (witness->prime) {
  case 2:
    return transposition_component(cycles);
  case 3: {
    if (cycles.size() == 1)
      return single_three_cycle_component(cycles.front());
    // Any t_i either breaks a 3-cycle, merges two, or adds a point.
    ThreeCycleSingleton out;
    for (const auto &c : cycles)
      out.factors.push_back(three_cycle_factor(c));
    std::sort(out.factors.begin(), out.factors.end());
    return out;
  }
  default:
    return PrimePowerSingleton{witness->prime, witness->multiplicity, std::vector<int>(p.word().begin(), p.word().end())};
  }
}

namespace {

struct Located {
  std::vector<std::vector<int>> cycles; ///< fixed points as 1-cycles
  std::size_t ci = 0;                   ///< cycle holding i
  std::size_t cj = 0;                   ///< cycle holding i+1
};

Located locate(const CycleDecomposition &c, int i)
{
  if (i < 1 || i >= c.n)
    throw Error(Errc::domain_error, "generator index " + std::to_string(i) + " outside [1, n-1]");
  Located out;
  std::vector<bool> covered(static_cast<std::size_t>(c.n) + 1, false);
  for (const auto &cy : c.cycles) {
    out.cycles.push_back(cy);
    for (int v : cy)
      covered[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= c.n; ++v)
    if (!covered[static_cast<std::size_t>(v)])
      out.cycles.push_back({v});
  for (std::size_t q = 0; q < out.cycles.size(); ++q) {
    const auto &cy = out.cycles[q];
    if (std::find(cy.begin(), cy.end(), i) != cy.end())
      out.ci = q;
    if (std::find(cy.begin(), cy.end(), i + 1) != cy.end())
      out.cj = q;
  }
  return out;
}

} // namespace

GeneratorProductCase generator_product_case(const CycleDecomposition &c, int i)
{
  const auto loc = locate(c, i);
  const auto &a = loc.cycles[loc.ci];
  const auto &b = loc.cycles[loc.cj];
  if (loc.ci != loc.cj) {
    if (a.size() == 1 && b.size() == 1)
      return GeneratorProductCase::both_fixed;
    if (b.size() == 1)
      return GeneratorProductCase::insert_after_i;
    if (a.size() == 1)
      return GeneratorProductCase::insert_i;
    return GeneratorProductCase::merge;
  }
  const auto r = rotate_to(a, i);
  const bool adjacent = r[1] == i + 1 || r.back() == i + 1;
  return adjacent ? GeneratorProductCase::remove : GeneratorProductCase::split;
}

CycleDecomposition multiply_by_generator(const CycleDecomposition &c, int i)
{
  auto loc = locate(c, i);
  std::vector<std::vector<int>> out;
  for (std::size_t q = 0; q < loc.cycles.size(); ++q)
    if (q != loc.ci && q != loc.cj)
      out.push_back(loc.cycles[q]);

  const auto a = rotate_to(loc.cycles[loc.ci], i);
  if (loc.ci == loc.cj) {
    // (i, x1, ..., x_{t-1}, i+1, x_{t+1}, ...) becomes
    // (i, x_{t+1}, ...) (i+1, x1, ..., x_{t-1}); an empty tail is a fixed point.
    const auto t = std::find(a.begin(), a.end(), i + 1);
    std::vector<int> with_i{i};
    with_i.insert(with_i.end(), t + 1, a.end());
    std::vector<int> with_next{i + 1};
    with_next.insert(with_next.end(), a.begin() + 1, t);
    out.push_back(std::move(with_i));
    out.push_back(std::move(with_next));
  } else {
    // (i, d, ...) (i+1, b, ..., c) becomes (i, b, ..., c, i+1, d, ...).
    const auto b = rotate_to(loc.cycles[loc.cj], i + 1);
    std::vector<int> merged{i};
    merged.insert(merged.end(), b.begin() + 1, b.end());
    merged.push_back(i + 1);
    merged.insert(merged.end(), a.begin() + 1, a.end());
    out.push_back(std::move(merged));
  }
  auto result = normalize_cycles(c.n, std::move(out), c.includes_fixed_points);
  const auto direct = compose(to_permutation(c), Permutation::adjacent_transposition(c.n, i));
  ensure(result == cycle_decomposition(direct, c.includes_fixed_points), "cycle-list product equals the one-line product");
  return result;
}

} // namespace permsimple
