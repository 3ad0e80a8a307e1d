#include "permsimple/complexes.hpp"

#include "permsimple/classify.hpp"
#include "permsimple/coxeter.hpp"
#include "permsimple/cayley.hpp"
#include "permsimple/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace permsimple {

int CellComplex::dimension() const noexcept
{
  return cells.empty() ? -1 : cells.back().dim;
}

std::vector<std::int64_t> CellComplex::f_vector() const
{
  std::vector<std::int64_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto &c : cells)
    ++f[static_cast<std::size_t>(c.dim)];
  return f;
}

std::vector<int> CellComplex::cells_of_dim(int d) const
{
  std::vector<int> out;
  for (std::size_t id = 0; id < cells.size(); ++id)
    if (cells[id].dim == d)
      out.push_back(static_cast<int>(id));
  return out;
}

bool boundary_squared_is_zero(const CellComplex &c)
{
  for (const auto &cell : c.cells) {
    std::map<int, long long> total;
    for (const auto &[f, s] : cell.boundary)
      for (const auto &[r, t] : c.cells[static_cast<std::size_t>(f)].boundary)
        total[r] += static_cast<long long>(s) * t;
    for (const auto &[r, v] : total)
      if (v != 0)
        return false;
  }
  return true;
}

void validate(const CellComplex &c)
{
  for (std::size_t id = 0; id < c.cells.size(); ++id) {
    const auto &cell = c.cells[id];
    ensure(id == 0 || c.cells[id - 1].dim <= cell.dim, "cells sorted by dimension");
    if (cell.dim == 0) {
      ensure(cell.vertices == std::vector<int>{static_cast<int>(id)} && id < c.points.size(), "0-cells are the points");
      continue;
    }
    std::set<int> from_boundary;
    for (const auto &[f, s] : cell.boundary) {
      ensure(c.cells[static_cast<std::size_t>(f)].dim == cell.dim - 1, "boundary cells have codimension one");
      const auto &fv = c.cells[static_cast<std::size_t>(f)].vertices;
      from_boundary.insert(fv.begin(), fv.end());
    }
    ensure(std::vector<int>(from_boundary.begin(), from_boundary.end()) == cell.vertices,
           "cell vertices are the union of its boundary's vertices");
  }
  ensure(c.cells_of_dim(0).size() == c.points.size(), "one 0-cell per point");
  ensure(boundary_squared_is_zero(c), "boundary of boundary is zero");
}

namespace {

void check_bound(int n, int bound, const char *what)
{
  if (n < 1)
    throw Error(Errc::domain_error, "degree must be positive");
  if (n > bound)
    throw Error(Errc::bound_exceeded,
                std::string(what) + " degree " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
}

std::vector<Permutation> all_permutations(int n)
{
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation &p) { out.push_back(p); });
  return out;
}

using Partition = std::vector<unsigned>; // blocks as bitmasks over values 1..n

void ordered_partitions(unsigned remaining, Partition &current, std::vector<Partition> &out)
{
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  // Enumerate nonempty submasks of `remaining` as the next block.
  for (unsigned sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
    current.push_back(sub);
    ordered_partitions(remaining & ~sub, current, out);
    current.pop_back();
  }
}

std::vector<int> bits_of(unsigned mask)
{
  std::vector<int> out;
  for (int v = 1; mask != 0; ++v, mask >>= 1)
    if (mask & 1u)
      out.push_back(v);
  return out;
}

/// Words whose consecutive position blocks carry exactly the given value sets.
std::vector<std::vector<int>> words_of(const Partition &blocks)
{
  std::vector<std::vector<int>> out{{}};
  for (unsigned mask : blocks) {
    auto values = bits_of(mask);
    std::vector<std::vector<int>> next;
    for (const auto &prefix : out) {
      std::sort(values.begin(), values.end());
      do {
        auto w = prefix;
        w.insert(w.end(), values.begin(), values.end());
        next.push_back(std::move(w));
      } while (std::next_permutation(values.begin(), values.end()));
    }
    out = std::move(next);
  }
  return out;
}

/// Incidence numbers for a cell of dimension >= 2 whose facets are already
/// oriented: the first facet gets +1 and signs propagate across shared
/// ridges so that the boundary of the boundary cancels.
std::vector<std::pair<int, int>> orient(const std::vector<int> &facets, const std::vector<Cell> &cells)
{
  std::map<int, std::vector<std::pair<std::size_t, int>>> ridges;
  for (std::size_t a = 0; a < facets.size(); ++a)
    for (const auto &[r, s] : cells[static_cast<std::size_t>(facets[a])].boundary)
      ridges[r].emplace_back(a, s);
  std::vector<std::vector<std::pair<std::size_t, int>>> link(facets.size()); // (other facet, sign factor)
  for (const auto &[r, inc] : ridges) {
    ensure(inc.size() == 2, "each ridge of a cell lies in exactly two of its facets");
    const int factor = -inc[0].second * inc[1].second;
    link[inc[0].first].emplace_back(inc[1].first, factor);
    link[inc[1].first].emplace_back(inc[0].first, factor);
  }
  std::vector<int> eps(facets.size(), 0);
  eps[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto a = queue.front();
    queue.pop_front();
    for (const auto &[b, factor] : link[a]) {
      const int want = eps[a] * factor;
      if (eps[b] == 0) {
        eps[b] = want;
        queue.push_back(b);
      } else {
        ensure(eps[b] == want, "cell orientation is consistent");
      }
    }
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < facets.size(); ++a) {
    ensure(eps[a] != 0, "facets of a cell are connected through ridges");
    out.emplace_back(facets[a], eps[a]);
  }
  return out;
}

} // namespace

CellComplex permutahedron_complex(int n, int bound)
{
  check_bound(n, bound, "permutahedron");
  CellComplex out;
  out.n = n;
  out.points = all_permutations(n);
  std::unordered_map<std::uint64_t, int> point_index;
  for (std::size_t v = 0; v < out.points.size(); ++v)
    point_index.emplace(out.points[v].key(), static_cast<int>(v));

  std::vector<Partition> faces;
  Partition scratch;
  ordered_partitions((1u << n) - 1, scratch, faces);

  struct Face {
    Partition blocks;
    std::vector<int> vertices;
  };
  std::vector<Face> sorted;
  for (auto &blocks : faces) {
    Face f{std::move(blocks), {}};
    for (auto &w : words_of(f.blocks))
      f.vertices.push_back(point_index.at(Permutation(std::move(w)).key()));
    std::sort(f.vertices.begin(), f.vertices.end());
    sorted.push_back(std::move(f));
  }
  // Dimension n - k ascending, then by vertex list; 0-cells land in point order.
  std::sort(sorted.begin(), sorted.end(), [n](const Face &a, const Face &b) {
    const auto da = n - static_cast<int>(a.blocks.size());
    const auto db = n - static_cast<int>(b.blocks.size());
    return da != db ? da < db : a.vertices < b.vertices;
  });

  std::map<Partition, int> id_of;
  for (std::size_t id = 0; id < sorted.size(); ++id)
    id_of.emplace(sorted[id].blocks, static_cast<int>(id));

  for (const auto &face : sorted) {
    Cell cell;
    cell.dim = n - static_cast<int>(face.blocks.size());
    cell.vertices = face.vertices;
    if (cell.dim == 1) {
      // Lexicographically smaller end point gets -1.
      cell.boundary = {{cell.vertices[0], -1}, {cell.vertices[1], 1}};
    } else if (cell.dim >= 2) {
      std::vector<int> facets;
      for (std::size_t t = 0; t < face.blocks.size(); ++t) {
        const unsigned block = face.blocks[t];
        for (unsigned sub = (block - 1) & block; sub != 0; sub = (sub - 1) & block) {
          Partition refined(face.blocks.begin(), face.blocks.begin() + static_cast<long>(t));
          refined.push_back(sub);
          refined.push_back(block & ~sub);
          refined.insert(refined.end(), face.blocks.begin() + static_cast<long>(t) + 1, face.blocks.end());
          facets.push_back(id_of.at(refined));
        }
      }
      std::sort(facets.begin(), facets.end());
      cell.boundary = orient(facets, out.cells);
    }
    out.cells.push_back(std::move(cell));
  }
  validate(out);
  return out;
}

CellComplex induced_subcomplex(const CellComplex &c, const std::function<bool(const Permutation &)> &keep)
{
  CellComplex out;
  out.n = c.n;
  std::vector<int> point_map(c.points.size(), -1);
  for (std::size_t v = 0; v < c.points.size(); ++v)
    if (keep(c.points[v])) {
      point_map[v] = static_cast<int>(out.points.size());
      out.points.push_back(c.points[v]);
    }
  std::vector<int> cell_map(c.cells.size(), -1);
  for (std::size_t id = 0; id < c.cells.size(); ++id) {
    const auto &cell = c.cells[id];
    if (!std::all_of(cell.vertices.begin(), cell.vertices.end(), [&](int v) { return point_map[static_cast<std::size_t>(v)] >= 0; }))
      continue;
    Cell kept;
    kept.dim = cell.dim;
    for (int v : cell.vertices)
      kept.vertices.push_back(point_map[static_cast<std::size_t>(v)]);
    for (const auto &[f, s] : cell.boundary) {
      const int mapped = cell_map[static_cast<std::size_t>(f)];
      ensure(mapped >= 0, "faces of a kept cell are kept");
      kept.boundary.emplace_back(mapped, s);
    }
    cell_map[id] = static_cast<int>(out.cells.size());
    out.cells.push_back(std::move(kept));
  }
  validate(out);
  return out;
}

namespace {

Poset covers(int n, int bound, bool weak)
{
  check_bound(n, bound, "poset");
  Poset out;
  out.n = n;
  out.elements = all_permutations(n);
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t v = 0; v < out.elements.size(); ++v)
    index.emplace(out.elements[v].key(), static_cast<int>(v));
  for (std::size_t a = 0; a < out.elements.size(); ++a) {
    const auto &alpha = out.elements[a];
    const int len = coxeter_length(alpha);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (weak && j != i + 1)
          continue;
        std::vector<int> w(alpha.word().begin(), alpha.word().end());
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
        const Permutation beta(std::move(w));
        if (coxeter_length(beta) == len + 1)
          out.covers.emplace_back(static_cast<int>(a), index.at(beta.key()));
      }
  }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

} // namespace

Poset bruhat_covers(int n, int bound)
{
  return covers(n, bound, false);
}

Poset weak_covers(int n, int bound)
{
  auto weak = covers(n, bound, true);
  const auto bruhat = covers(n, bound, false);
  for (const auto &c : weak.covers)
    ensure(std::binary_search(bruhat.covers.begin(), bruhat.covers.end(), c), "weak covers are Bruhat covers");
  return weak;
}

CellComplex order_complex(const std::vector<Permutation> &elements, Order order, int bound)
{
  CellComplex out;
  if (elements.empty())
    return out;
  const int n = elements.front().degree();
  for (const auto &p : elements)
    if (p.degree() != n)
      throw Error(Errc::degree_mismatch, "order complex elements must share one degree");
  const auto poset = order == Order::bruhat ? bruhat_covers(n, bound) : weak_covers(n, bound);
  const auto size = poset.elements.size();

  // below[b] = all a <= b in the whole group (transitive closure of covers,
  // processed by increasing length).
  std::vector<std::vector<bool>> le(size, std::vector<bool>(size, false));
  std::vector<std::size_t> by_length(size);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
    return coxeter_length(poset.elements[a]) < coxeter_length(poset.elements[b]);
  });
  std::vector<std::vector<int>> down(size);
  for (const auto &[a, b] : poset.covers)
    down[static_cast<std::size_t>(b)].push_back(a);
  for (std::size_t b : by_length) {
    le[b][b] = true;
    for (int a : down[b])
      for (std::size_t x = 0; x < size; ++x)
        if (le[static_cast<std::size_t>(a)][x])
          le[b][x] = true; // le[b][x]: x <= b
  }

  out.n = n;
  out.points = elements;
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  std::vector<std::size_t> global(out.points.size());
  for (std::size_t v = 0; v < out.points.size(); ++v)
    global[v] = static_cast<std::size_t>(
      std::lower_bound(poset.elements.begin(), poset.elements.end(), out.points[v]) - poset.elements.begin());
  const auto less = [&](std::size_t u, std::size_t v) { return u != v && le[global[v]][global[u]]; };

  // Chains as increasing vertex sequences, grouped by size.
  std::vector<std::vector<std::vector<int>>> chains{{}};
  for (std::size_t v = 0; v < out.points.size(); ++v)
    chains[0].push_back({static_cast<int>(v)});
  while (!chains.back().empty()) {
    std::vector<std::vector<int>> longer;
    for (const auto &ch : chains.back())
      for (std::size_t v = 0; v < out.points.size(); ++v)
        if (less(static_cast<std::size_t>(ch.back()), v)) {
          auto ext = ch;
          ext.push_back(static_cast<int>(v));
          longer.push_back(std::move(ext));
        }
    chains.push_back(std::move(longer));
  }
  chains.pop_back();

  std::map<std::vector<int>, int> id_of;
  for (std::size_t d = 0; d < chains.size(); ++d) {
    auto level = chains[d];
    std::sort(level.begin(), level.end(), [](const auto &a, const auto &b) {
      auto sa = a, sb = b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      return sa < sb;
    });
    for (const auto &ch : level) {
      Cell cell;
      cell.dim = static_cast<int>(d);
      cell.vertices = ch;
      std::sort(cell.vertices.begin(), cell.vertices.end());
      if (d > 0)
        for (std::size_t drop = 0; drop < ch.size(); ++drop) {
          auto face = ch;
          face.erase(face.begin() + static_cast<long>(drop));
          cell.boundary.emplace_back(id_of.at(face), drop % 2 == 0 ? 1 : -1);
        }
      id_of.emplace(ch, static_cast<int>(out.cells.size()));
      out.cells.push_back(std::move(cell));
    }
  }
  validate(out);
  return out;
}

std::int64_t euler_characteristic(const CellComplex &c)
{
  std::int64_t chi = 0;
  for (const auto &cell : c.cells)
    chi += cell.dim % 2 == 0 ? 1 : -1;
  return chi;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::overflow, "Smith normal form entry overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(Errc::overflow, "Smith normal form entry overflow");
  return r;
}

std::int64_t abs_checked(std::int64_t a)
{
  if (a == std::numeric_limits<std::int64_t>::min())
    throw Error(Errc::overflow, "Smith normal form entry overflow");
  return a < 0 ? -a : a;
}

} // namespace

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m)
{
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    std::size_t pr = rows, pc = cols;
    std::int64_t best = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (best == 0 || abs_checked(m[r][c]) < best)) {
          best = abs_checked(m[r][c]);
          pr = r;
          pc = c;
        }
    if (best == 0)
      break;
    std::swap(m[t], m[pr]);
    for (auto &row : m)
      std::swap(row[t], row[pc]);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0)
          continue;
        const std::int64_t q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c)
          if (m[t][c] != 0)
            m[r][c] = checked_sub(m[r][c], checked_mul(q, m[t][c]));
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          dirty = true;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0)
          continue;
        const std::int64_t q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r)
          if (m[r][t] != 0)
            m[r][c] = checked_sub(m[r][c], checked_mul(q, m[r][t]));
        if (m[t][c] != 0) {
          for (auto &row : m)
            std::swap(row[t], row[c]);
          dirty = true;
        }
      }
    }
    diag.push_back(abs_checked(m[t][t]));
  }
  // Rewrite the diagonal as invariant factors, each dividing the next.
  for (std::size_t a = 0; a < diag.size(); ++a)
    for (std::size_t b = a + 1; b < diag.size(); ++b) {
      const std::int64_t g = std::gcd(diag[a], diag[b]);
      const std::int64_t l = checked_mul(diag[a] / g, diag[b]);
      diag[a] = g;
      diag[b] = l;
    }
  return diag;
}

std::vector<HomologyGroup> reduced_homology(const CellComplex &c)
{
  const int top = c.dimension();
  if (top < 0)
    return {HomologyGroup{-1, 1, {}}};

  std::vector<std::vector<int>> ids(static_cast<std::size_t>(top + 1));
  std::vector<int> local(c.cells.size());
  for (std::size_t id = 0; id < c.cells.size(); ++id) {
    auto &bucket = ids[static_cast<std::size_t>(c.cells[id].dim)];
    local[id] = static_cast<int>(bucket.size());
    bucket.push_back(static_cast<int>(id));
  }
  // diagonal[d]: Smith diagonal of the boundary map from dimension d to
  // d - 1; dimension 0 maps onto Z by the augmentation.
  std::vector<std::vector<std::int64_t>> diagonal(static_cast<std::size_t>(top + 2));
  for (int d = 0; d <= top; ++d) {
    const auto &cols = ids[static_cast<std::size_t>(d)];
    const std::size_t rows = d == 0 ? 1 : ids[static_cast<std::size_t>(d - 1)].size();
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (d == 0) {
        m[0][k] = 1;
        continue;
      }
      for (const auto &[f, s] : c.cells[static_cast<std::size_t>(cols[k])].boundary)
        m[static_cast<std::size_t>(local[static_cast<std::size_t>(f)])][k] += s;
    }
    diagonal[static_cast<std::size_t>(d)] = smith_diagonal(std::move(m));
  }
  std::vector<HomologyGroup> out;
  for (int d = 0; d <= top; ++d) {
    HomologyGroup h;
    h.dim = d;
    const auto rank_d = static_cast<std::int64_t>(diagonal[static_cast<std::size_t>(d)].size());
    const auto &next = diagonal[static_cast<std::size_t>(d + 1)];
    h.rank = static_cast<std::int64_t>(ids[static_cast<std::size_t>(d)].size()) - rank_d - static_cast<std::int64_t>(next.size());
    for (auto v : next)
      if (v > 1)
        h.torsion.push_back(v);
    out.push_back(std::move(h));
  }
  return out;
}

CollapseOutcome collapse_onto(const CellComplex &c, const std::vector<int> &target, int budget)
{
  const std::size_t size = c.cells.size();
  std::vector<bool> in_target(size, false);
  for (int id : target)
    in_target[static_cast<std::size_t>(id)] = true;
  for (int id : target)
    for (const auto &[f, s] : c.cells[static_cast<std::size_t>(id)].boundary)
      ensure(in_target[static_cast<std::size_t>(f)], "collapse target is a subcomplex");
  std::vector<std::vector<int>> cofaces(size);
  for (std::size_t id = 0; id < size; ++id)
    for (const auto &[f, s] : c.cells[id].boundary)
      cofaces[static_cast<std::size_t>(f)].push_back(static_cast<int>(id));

  std::vector<int> order;
  for (std::size_t id = 0; id < size; ++id)
    if (!in_target[id])
      order.push_back(static_cast<int>(id));

  std::mt19937 rng(12345);
  for (int attempt = 0; attempt < budget; ++attempt) {
    // Attempt 0 scans from the top dimension down; later attempts shuffle.
    if (attempt == 0)
      std::reverse(order.begin(), order.end());
    else
      std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> alive(size, true);
    std::size_t left = order.size();
    for (bool progress = true; progress && left > 0;) {
      progress = false;
      for (int face : order) {
        if (!alive[static_cast<std::size_t>(face)])
          continue;
        int only = -1;
        int count = 0;
        for (int co : cofaces[static_cast<std::size_t>(face)])
          if (alive[static_cast<std::size_t>(co)]) {
            only = co;
            ++count;
          }
        if (count != 1)
          continue;
        alive[static_cast<std::size_t>(face)] = false;
        alive[static_cast<std::size_t>(only)] = false;
        left -= 2;
        progress = true;
      }
    }
    if (left == 0)
      return CollapseOutcome::collapsed;
  }
  return CollapseOutcome::inconclusive;
}

Filtration bs_filtration(int n, int bound, int collapse_budget)
{
  check_bound(n + 1, bound, "filtration");
  const int m = n + 1;
  const auto whole = permutahedron_complex(m, bound);

  // For each braid-simple word of degree n+1, the start j' of a final run
  // D(n, j'); 0 marks words from degree n (no such run).
  std::map<Permutation, int> last_run;
  for (const auto &p : generate_b_simple(m)) {
    const auto word = coxeter_normal_form(p);
    const bool tops = !word.runs.empty() && word.runs.back().k == n;
    last_run.emplace(p, tops ? word.runs.back().j : 0);
  }

  Filtration out;
  out.n = n;
  for (int j = n + 1; j >= 1; --j) {
    FiltrationStage stage;
    stage.j = j;
    for (const auto &[p, start] : last_run)
      if (start == 0 || start >= j)
        stage.vertices.push_back(p);
    const std::set<Permutation> keep(stage.vertices.begin(), stage.vertices.end());
    stage.complex = induced_subcomplex(whole, [&](const Permutation &p) { return keep.count(p) > 0; });
    out.stages.push_back(std::move(stage));
  }

  for (std::size_t t = 0; t + 1 < out.stages.size(); ++t) {
    const auto &small = out.stages[t].complex;
    const auto &big = out.stages[t + 1].complex;
    // Cells of `small` located in `big` through their vertex sets.
    std::map<std::vector<Permutation>, int> big_ids;
    for (std::size_t id = 0; id < big.cells.size(); ++id) {
      std::vector<Permutation> vs;
      for (int v : big.cells[id].vertices)
        vs.push_back(big.points[static_cast<std::size_t>(v)]);
      big_ids.emplace(std::move(vs), static_cast<int>(id));
    }
    std::vector<int> target;
    for (const auto &cell : small.cells) {
      std::vector<Permutation> vs;
      for (int v : cell.vertices)
        vs.push_back(small.points[static_cast<std::size_t>(v)]);
      const auto it = big_ids.find(vs);
      ensure(it != big_ids.end(), "filtration stages are nested");
      target.push_back(it->second);
    }
    out.collapses.push_back(collapse_onto(big, target, collapse_budget));
  }
  return out;
}

} // namespace permsimple
