#pragma once

#include "hopftree/linalg.hpp"
#include "hopftree/tree.hpp"

#include <cstddef>
#include <vector>

namespace hopftree {

BasisKey tree_key(const PlanarTree& t);
PlanarTree tree_from_key(const BasisKey& key);
LinearCombination as_combination(const PlanarTree& t);
LinearCombination unit_tree();

/// Strictly increasing assignment of partition blocks to nodes of a target
/// tree, where nodes are post-order ids 1..m and the root m+1 is maximal.
struct OrderPreservingMap {
  std::vector<PlanarTree::NodeId> targets;

  bool operator==(const OrderPreservingMap&) const = default;
};

/// All order-preserving maps from k blocks into a node set of size `nodes`,
/// in lexicographic order. There are C(nodes, k) of them.
std::vector<OrderPreservingMap> order_preserving_maps(std::size_t k,
                                                      std::size_t nodes);

// --- infinitesimal structure (dot product, deconcatenation coproduct) ---

/// Sum over k of t[1,k] (x) t[k+1,n].
TensorCombination coproduct(const PlanarTree& t);
TensorCombination coproduct(const LinearCombination& v);

/// Coefficient of the degree-0 tree.
Rational counit(const LinearCombination& v);

LinearCombination dot(const LinearCombination& a, const LinearCombination& b);

// --- Hopf structure ---

/// Glues each block u_i at node f(u_i) of t as the rightmost child block.
/// With u the degree-0 tree the result is t.
PlanarTree hash_product(const PlanarTree& t, const PlanarTree& u,
                        const TreePartition& partition,
                        const OrderPreservingMap& f);

/// Sum of all hash products; C(m+n, m) addends counted with multiplicity.
LinearCombination product(const PlanarTree& t, const PlanarTree& u);
LinearCombination product(const LinearCombination& a,
                          const LinearCombination& b);
/// Componentwise product on tensors of equal arity.
TensorCombination product(const TensorCombination& x,
                          const TensorCombination& y);

/// S(root) = root and S(t) = -t - sum S(t') * t'' over the reduced
/// coproduct. Results are memoized per call.
LinearCombination antipode(const LinearCombination& v);

// --- dual structure ---

/// Nodes of the branch ending at the leftmost leaf, bottom to top, ending
/// with the root.
std::vector<PlanarTree::NodeId> leftmost_branch(const PlanarTree& w);

/// Groups the irreducible factors of t into consecutive runs and glues them,
/// as leftmost child blocks, at strictly deeper nodes of the leftmost branch
/// of w: the first run goes closest to the root.
/// C(k + l, k) addends for k factors and a branch of l + 1 nodes.
LinearCombination dual_product(const PlanarTree& t, const PlanarTree& w);
LinearCombination dual_product(const LinearCombination& a,
                               const LinearCombination& b);

/// Deconcatenation of the irreducible factor sequence.
TensorCombination dual_coproduct(const PlanarTree& t);
TensorCombination dual_coproduct(const LinearCombination& v);

/// Basis-dual pairing. Throws when the two sides use different key
/// namespaces.
Rational pairing(const LinearCombination& a, const LinearCombination& b);
Rational pairing(const TensorCombination& a, const TensorCombination& b);

}  // namespace hopftree
