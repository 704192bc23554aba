#pragma once

#include "hopftree/linalg.hpp"
#include "hopftree/parallel.hpp"
#include "hopftree/tree.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hopftree {

/// Which multiplication and coproduct the primitive machinery uses: dot with
/// plain deconcatenation, or slash with the standardized deconcatenation.
enum class MultMode { dot, slash };

/// Graded families of trees with their own primitive theory.
struct TreeFamily {
  enum class Kind { unlabelled, labelled, ntree, increasing, sorted };
  Kind kind = Kind::unlabelled;
  /// Alphabet size for Kind::labelled.
  Label alphabet = 0;

  MultMode mode() const;
  bool operator==(const TreeFamily&) const = default;
};

/// "tree" (or "unlabelled"), "labelled:K", "ntree", "increasing", "sorted".
TreeFamily parse_tree_family(std::string_view name);
std::string tree_family_name(const TreeFamily& f);

/// All trees of degree n in the family, canonical order.
std::vector<PlanarTree> family_trees(const TreeFamily& f, std::size_t n);

/// Irreducible for the family's multiplication (dot or slash).
bool is_family_irreducible(const TreeFamily& f, const PlanarTree& t);

/// Delta(x) - 1 (x) x - x (x) 1. Throws when v has a degree-0 component.
TensorCombination reduced_coproduct(const LinearCombination& v,
                                    MultMode mode = MultMode::dot);

/// n = 0 gives v as a one-leg tensor; otherwise the reduced coproduct is
/// applied n times to the first leg.
TensorCombination iterated_reduced_coproduct(const LinearCombination& v,
                                             std::size_t n,
                                             MultMode mode = MultMode::dot);

/// sum_n (-1)^n m^n o iterated reduced coproduct, with the n+1 legs
/// multiplied left to right. Throws when v has a degree-0 component.
LinearCombination idempotent_e(const LinearCombination& v,
                               MultMode mode = MultMode::dot);

/// {e(t) : t irreducible in the family, |t| = n}.
std::vector<LinearCombination> primitive_basis(const TreeFamily& f,
                                               std::size_t n,
                                               Exec exec = Exec::serial);

struct DimensionSeries {
  TreeFamily family;
  std::vector<Integer> a;  // a[0] = 1
  std::vector<Integer> b;  // b[0] = 0
};

/// a_n = number of trees of degree n in the family.
Integer family_count(const TreeFamily& f, std::size_t n);

/// b_n = a_n - sum_{k=1}^{n-1} a_k b_{n-k}, for n <= N.
DimensionSeries prim_dimensions(const TreeFamily& f, std::size_t N);

/// rank of primitive_basis(f, n) for n = 1..N (entry 0 is 0).
std::vector<std::size_t> prim_dimensions_by_rank(const TreeFamily& f,
                                                 std::size_t N,
                                                 Exec exec = Exec::serial);

/// Dimensions of the tensor algebra on a graded space of dimensions b:
/// c_0 = 1, c_n = sum_{k=1}^n b_k c_{n-k}.
std::vector<Integer> tensor_algebra_dimensions(const std::vector<Integer>& b);

/// One line per degree n >= 1: "n\ta_n\tb_n".
std::string render_series(const DimensionSeries& s);

}  // namespace hopftree
