#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopftree {

using Label = std::uint32_t;

/// Thrown when a canonical string (tree, word, binary tree, combination)
/// does not follow its grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nested form of a planar tree. The root's `label` is ignored.
struct TreeNode {
  std::optional<Label> label;
  std::vector<TreeNode> children;
};

/// Planar rooted tree, optionally labelled on its non-root nodes.
///
/// Nodes are identified by their depth-first post-order position: the
/// non-root nodes are 1..n and the root is n+1, so the root is the maximum
/// of the traversal order. Every node has a larger id than all of its
/// descendants and the descendants of a node form the id interval just
/// below it. Either all non-root nodes carry a label or none does.
class PlanarTree {
 public:
  using NodeId = std::size_t;

  /// The degree-0 tree.
  PlanarTree() = default;

  explicit PlanarTree(const TreeNode& root);

  /// Builds a tree from a post-order parent table. `parent[v-1]` is the
  /// parent of node v and must satisfy v < parent <= n+1 with contiguous
  /// descendant intervals. `labels` is empty or has n entries.
  static PlanarTree from_parents(std::vector<NodeId> parent,
                                 std::vector<Label> labels = {});

  std::size_t degree() const { return parent_.size(); }
  NodeId root() const { return parent_.size() + 1; }
  bool labelled() const { return !labels_.empty(); }

  NodeId parent(NodeId node) const;
  Label label(NodeId node) const;
  const std::vector<NodeId>& parents() const { return parent_; }
  const std::vector<Label>& labels() const { return labels_; }

  /// Children of `node` from left to right.
  std::vector<NodeId> children(NodeId node) const;
  /// Number of nodes in the subtree of `node`, including itself.
  std::size_t subtree_size(NodeId node) const;

  TreeNode to_node() const;

  /// Same shape with labels replaced (empty vector drops them).
  PlanarTree with_labels(std::vector<Label> labels) const;

  bool operator==(const PlanarTree&) const = default;

 private:
  std::vector<NodeId> parent_;
  std::vector<Label> labels_;
};

/// Canonical-string order; this is the order of every enumeration.
std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);

enum class Side { leftmost, rightmost };

/// Ordered split of a tree into the convex blocks
/// t[1,n1], t[n1+1,n2], ..., t[n_{k-1}+1,n].
struct TreePartition {
  std::vector<std::size_t> cuts;  // 0 = c0 < c1 < ... < ck = n
  std::vector<PlanarTree> blocks;

  std::size_t size() const { return blocks.size(); }
};

/// Grammar: tree := "(" node* ")"; node := "(" [label SP] node* ")".
/// A labelled leaf is written "(7)"; the space only precedes children.
PlanarTree parse_tree(std::string_view text);
std::string render_tree(const PlanarTree& t);

/// Non-root nodes in depth-first post order.
std::vector<PlanarTree::NodeId> postorder_nodes(const PlanarTree& t);

/// t restricted to post-order positions [i,j] clipped to [1,n], with edges
/// contracted through the removed nodes. Empty intersections give the
/// degree-0 tree.
PlanarTree convex_subtree(const PlanarTree& t, long i, long j);

/// Partitions into exactly `k` blocks, or all partitions when k is empty
/// (ordered by block count, then by cut tuple). The degree-0 tree has none.
std::vector<TreePartition> partitions(const PlanarTree& t,
                                      std::optional<std::size_t> k = {});

/// Identifies the roots of t and w.
PlanarTree dot(const PlanarTree& t, const PlanarTree& w);

/// Subtrees hanging from the root, each re-rooted as an irreducible tree.
std::vector<PlanarTree> irreducible_factors(const PlanarTree& t);

bool is_irreducible(const PlanarTree& t);

/// All unlabelled trees of degree n in canonical order.
std::vector<PlanarTree> enumerate_trees(std::size_t n);

/// All trees of degree n labelled by {1..alphabet}.
std::vector<PlanarTree> enumerate_labelled_trees(std::size_t n,
                                                 Label alphabet);

/// The children of sub's root become a new first or last block of children
/// of `node`.
PlanarTree graft(const PlanarTree& host, PlanarTree::NodeId node,
                 const PlanarTree& sub, Side side);

struct Graft {
  PlanarTree::NodeId node;
  PlanarTree sub;
};

/// Simultaneous grafts at distinct nodes of `host` (ids refer to host).
PlanarTree graft_all(const PlanarTree& host, const std::vector<Graft>& grafts,
                     Side side);

/// Tree whose root has a single child carrying `label` and whose subtree
/// below that child is `t`.
PlanarTree attach_below(const PlanarTree& t, std::optional<Label> label);

/// Sorts into canonical-string order, rendering each tree once.
void sort_canonical(std::vector<PlanarTree>& trees);

std::size_t catalan(std::size_t n);

}  // namespace hopftree
