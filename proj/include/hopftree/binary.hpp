#pragma once

#include "hopftree/linalg.hpp"
#include "hopftree/tree.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hopftree {

/// Full binary tree. Internal vertices are numbered 1..n in in-order and
/// leaves 0..n from left to right, so leaf i sits between vertices i and
/// i+1.
class BinaryTree {
 public:
  using VertexId = std::size_t;

  /// The single-leaf tree.
  BinaryTree() = default;

  static BinaryTree make(const BinaryTree& left, const BinaryTree& right);

  std::size_t degree() const { return left_.size(); }
  bool is_leaf() const { return left_.empty(); }
  /// In-order id of the root vertex; 0 for the single leaf.
  VertexId root() const { return root_; }

  /// Require a non-leaf tree.
  BinaryTree left() const;
  BinaryTree right() const;

  /// Children of vertex v (0 for a leaf).
  VertexId left_child(VertexId v) const { return left_.at(v - 1); }
  VertexId right_child(VertexId v) const { return right_.at(v - 1); }

  bool operator==(const BinaryTree&) const = default;

 private:
  BinaryTree subtree(VertexId v) const;

  std::vector<VertexId> left_, right_;
  VertexId root_ = 0;
};

/// leaf = "."; internal = "(" left "," right ")".
BinaryTree parse_binary(std::string_view text);
std::string render_binary(const BinaryTree& x);

BasisKey binary_key(const BinaryTree& x);
BinaryTree binary_from_key(const BasisKey& key);

/// x / y: the root of x replaces the leftmost leaf of y.
BinaryTree over(const BinaryTree& x, const BinaryTree& y);
/// x \ y: the root of y replaces the rightmost leaf of x.
BinaryTree under(const BinaryTree& x, const BinaryTree& y);

/// x = x1 \ ... \ xk with each xi of the form (L, .).
std::vector<BinaryTree> under_irreducible_factors(const BinaryTree& x);

/// The single-leaf tree for the root, phi(t')/Y for an irreducible tree
/// whose root child carries t', and phi(t1) \ ... \ phi(tk) for a dot
/// product.
BinaryTree planar_to_binary(const PlanarTree& t);
PlanarTree binary_to_planar(const BinaryTree& x);

/// The tree formed by the internal vertices i+1..j of x, seen as a search
/// tree on its in-order keys. Requires 0 <= i <= j <= deg(x).
BinaryTree binary_convex(const BinaryTree& x, std::size_t i, std::size_t j);

/// sum_i x[0,i] (x) x[i,n].
TensorCombination binary_coproduct(const BinaryTree& x);
TensorCombination binary_coproduct(const LinearCombination& v);

/// Replaces leaves of x by trees: `at[l]` goes into leaf l when present.
BinaryTree substitute_leaves(const BinaryTree& x,
                             const std::vector<const BinaryTree*>& at);

/// Sum over cuts 0 = n0 < ... < nk = deg(y) and strictly increasing leaf
/// choices l1 < ... < lk of x of the substitution y[n_{i-1}, n_i] -> leaf l_i.
LinearCombination binary_product(const BinaryTree& x, const BinaryTree& y);
LinearCombination binary_product(const LinearCombination& a,
                                 const LinearCombination& b);
TensorCombination binary_product(const TensorCombination& x,
                                 const TensorCombination& y);

/// binary_product(y, x).
LinearCombination binary_product_op(const BinaryTree& x, const BinaryTree& y);
LinearCombination binary_product_op(const LinearCombination& a,
                                    const LinearCombination& b);
TensorCombination binary_product_op(const TensorCombination& x,
                                    const TensorCombination& y);

/// All binary trees with n internal vertices, canonical string order.
std::vector<BinaryTree> enumerate_binary(std::size_t n);

struct CheckLine {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct DualCheckReport {
  std::vector<CheckLine> lines;
  bool ok() const;
  std::string render() const;
};

/// Checks the opposite binary product with the binary coproduct: graded
/// dimensions, associativity, coassociativity, counit, compatibility, and
/// that the binary coproduct is dual to the phi-transported dual product.
DualCheckReport loday_ronco_dual_check(std::size_t maxdeg);

}  // namespace hopftree
