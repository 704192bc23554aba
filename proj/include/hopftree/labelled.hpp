#pragma once

#include "hopftree/linalg.hpp"
#include "hopftree/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hopftree {

/// n-trees and their increasing and sorted subfamilies. Sorted implies
/// increasing implies n-tree.
enum class Family { ntree, increasing, sorted };

std::string family_name(Family f);
/// Accepts "ntree", "increasing" and "sorted".
Family parse_family(std::string_view name);

/// Rank relabelling: the k-th smallest label becomes k. Shape is unchanged.
/// Throws on repeated labels or unlabelled trees of positive degree.
PlanarTree standardize(const PlanarTree& t);

/// Adds m to every label.
PlanarTree shift(const PlanarTree& t, Label m);

/// Labels are exactly {1..n}, each once.
bool is_ntree(const PlanarTree& t);

bool is_member(Family family, const PlanarTree& t);

/// (s (x) s) of the deconcatenation coproduct.
TensorCombination coproduct_std(const PlanarTree& t);
TensorCombination coproduct_std(const LinearCombination& v);

/// t / w = t . w[|t|].
PlanarTree slash_product(const PlanarTree& t, const PlanarTree& w);
LinearCombination slash_product(const LinearCombination& a,
                                const LinearCombination& b);

/// t * w[|t|] as labelled trees; C(m+n, m) addends.
LinearCombination star_product(const PlanarTree& t, const PlanarTree& w);
LinearCombination star_product(const LinearCombination& a,
                               const LinearCombination& b);
TensorCombination star_product(const TensorCombination& x,
                               const TensorCombination& y);

/// Unique factorisation t = t1 / ... / tk into /-irreducible n-trees.
std::vector<PlanarTree> slash_irreducible_factors(const PlanarTree& t);
bool is_slash_irreducible(const PlanarTree& t);

/// Inductive construction: n-trees label every shape in all n! ways,
/// increasing trees insert a leaf labelled n at every slot of I[n-1], sorted
/// trees add n as the rightmost child of each node of SI[n-1]. Canonical
/// order.
std::vector<PlanarTree> enumerate_family(Family family, std::size_t n);

/// Filters all n-trees of degree n by `is_member`. Independent of the
/// inductive constructions above.
std::vector<PlanarTree> enumerate_family_by_filter(Family family,
                                                   std::size_t n);

}  // namespace hopftree
