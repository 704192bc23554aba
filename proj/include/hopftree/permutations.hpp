#pragma once

#include "hopftree/linalg.hpp"
#include "hopftree/tree.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopftree {

using Word = std::vector<unsigned>;

/// Space-separated decimal letters. A string without spaces is read one
/// digit per letter, which is only unambiguous for sizes up to 9.
Word parse_word(std::string_view text);
std::string render_word(const Word& w);

/// "word:" keys hold 2-permutations, "perm:" keys hold permutations.
BasisKey word_key(const Word& w);
BasisKey perm_key(const Word& w);
Word word_from_key(const BasisKey& key);

/// Rank relabelling; equal letters stay equal.
Word standardize_word(const Word& w);
/// Adds m to every letter.
Word shift_word(const Word& w, unsigned m);

bool is_permutation(const Word& w);
/// Each of 1..n occurs exactly twice.
bool is_two_permutation(const Word& w);
/// Between the two occurrences of every letter sits a 2-permutation.
bool is_treed(const Word& w);
/// Only larger letters sit between the two occurrences of a letter.
bool is_stirling(const Word& w);

/// Clockwise border walk: a node contributes its label, the walks of its
/// children left to right, then its label again.
Word euler_tour(const PlanarTree& t);
/// Inverse of euler_tour. Throws unless w is treed.
PlanarTree euler_tour_inverse(const Word& w);

/// Letters ordered by the position of their second occurrence.
std::vector<unsigned> second_occurrence_order(const Word& w);

/// Restriction of w to the given letters, order kept, not standardized.
Word restrict_word(const Word& w, const std::vector<unsigned>& letters);

struct WordPartition {
  std::vector<std::size_t> cuts;  // cut positions in second-occurrence order
  std::vector<Word> blocks;
};

/// Splits the second-occurrence order into k consecutive non-empty runs and
/// restricts w to each. All k when `k` is empty.
std::vector<WordPartition> word_partitions(const Word& w,
                                           std::optional<std::size_t> k = {});

/// Sum over partitions P of w[m] and order-preserving maps into the letters
/// of u (second-occurrence order, 0 adjoined as maximum): each block goes
/// right before the second occurrence of its target, or at the end for 0.
LinearCombination treed_product(const Word& u, const Word& w);
LinearCombination treed_product(const LinearCombination& a,
                                const LinearCombination& b);
TensorCombination treed_product(const TensorCombination& x,
                                const TensorCombination& y);

/// sum_i s(u restricted to x1..xi) (x) s(u restricted to x_{i+1}..xn).
TensorCombination treed_coproduct(const Word& u);
TensorCombination treed_coproduct(const LinearCombination& v);

/// Stirling permutations of size n, by inserting "n n" into size n-1.
std::vector<Word> enumerate_stirling(std::size_t n);
/// Treed permutations of size n, by filtering all 2-permutations.
std::vector<Word> enumerate_treed(std::size_t n);
/// Permutations of 1..n in lexicographic order.
std::vector<Word> enumerate_permutations(std::size_t n);

/// Labels of a sorted tree in post order. Throws unless t is sorted.
Word sorted_to_permutation(const PlanarTree& t);
/// Inverse: n becomes the rightmost child of the node labelled by the
/// letter following n, or of the root when n is last.
PlanarTree permutation_to_sorted(const Word& u);

/// Shifted shuffle and standardized deconcatenation on "perm:" keys.
LinearCombination mr_product(const Word& u, const Word& v);
LinearCombination mr_product(const LinearCombination& a,
                             const LinearCombination& b);
TensorCombination mr_product(const TensorCombination& x,
                             const TensorCombination& y);
TensorCombination mr_coproduct(const Word& u);
TensorCombination mr_coproduct(const LinearCombination& v);

}  // namespace hopftree
