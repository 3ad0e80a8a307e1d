#include "permsimple/tree.hpp"

#include "permsimple/error.hpp"

#include <algorithm>
#include <functional>

namespace permsimple {

PlaneTree PlaneTree::from_sequence(std::span<const int> sequence)
{
  if (sequence.empty())
    throw Error(Errc::empty_input, "tree of an empty sequence");
  PlaneTree t;
  const int top = *std::max_element(sequence.begin(), sequence.end());
  t.nodes_.resize(static_cast<std::size_t>(top) + 1);
  t.root_ = t.build(sequence, std::nullopt, std::nullopt);
  return t;
}

int PlaneTree::build(std::span<const int> seq, std::optional<int> parent, std::optional<Side> side)
{
  const auto min_it = std::min_element(seq.begin(), seq.end());
  const int mark = *min_it;
  const auto split = static_cast<std::size_t>(min_it - seq.begin());
  Node &slot = nodes_[static_cast<std::size_t>(mark)];
  slot.parent = parent;
  slot.side = side;
  if (split > 0) {
    const int l = build(seq.subspan(0, split), mark, Side::left);
    nodes_[static_cast<std::size_t>(mark)].left = l;
  }
  if (split + 1 < seq.size()) {
    const int r = build(seq.subspan(split + 1), mark, Side::right);
    nodes_[static_cast<std::size_t>(mark)].right = r;
  }
  return mark;
}

int PlaneTree::degree(int mark) const
{
  const Node &v = node(mark);
  return v.child_count() + (v.parent ? 1 : 0);
}

std::vector<int> PlaneTree::branch(Side side) const
{
  std::vector<int> out;
  const Node &r = node(root_);
  const auto start = side == Side::left ? r.left : r.right;
  if (!start)
    return out;
  std::function<void(int)> walk = [&](int m) {
    out.push_back(m);
    if (node(m).left)
      walk(*node(m).left);
    if (node(m).right)
      walk(*node(m).right);
  };
  walk(*start);
  std::sort(out.begin(), out.end());
  return out;
}

PlaneTree build_tree(const Permutation &p)
{
  const auto seq = standard_sequence(p);
  return PlaneTree::from_sequence(seq);
}

} // namespace permsimple
