#ifndef PERMSIMPLE_TREE_HPP
#define PERMSIMPLE_TREE_HPP

#include "permsimple/permutation.hpp"

#include <optional>
#include <span>
#include <vector>

namespace permsimple {

enum class Side { left, right };

/// Ordered binary tree on marks 1..n. The root carries the smallest mark
/// and marks increase along every branch.
class PlaneTree {
public:
  struct Node {
    std::optional<int> left;
    std::optional<int> right;
    std::optional<int> parent;
    std::optional<Side> side; ///< which child of its parent this node is

    int child_count() const noexcept { return (left ? 1 : 0) + (right ? 1 : 0); }
  };

  /// Recursive split of a sequence of distinct marks around its minimum.
  static PlaneTree from_sequence(std::span<const int> sequence);

  int size() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
  int root() const noexcept { return root_; }
  const Node &node(int mark) const { return nodes_.at(static_cast<std::size_t>(mark)); }

  /// Number of incident edges of a node.
  int degree(int mark) const;

  /// Marks of the subtree hanging on the given side of the root, in
  /// increasing order.
  std::vector<int> branch(Side side) const;

  friend bool operator==(const PlaneTree &, const PlaneTree &) = default;

private:
  std::vector<Node> nodes_; // index 0 unused
  int root_ = 0;

  int build(std::span<const int> seq, std::optional<int> parent, std::optional<Side> side);
};

/// T(p): the tree of the standard sequence of p.
PlaneTree build_tree(const Permutation &p);

} // namespace permsimple

#endif
