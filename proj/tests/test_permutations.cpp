#include "hopftree/labelled.hpp"
#include "hopftree/permutations.hpp"
#include "hopftree/planar.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hopftree;

namespace {
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("word syntax") {
  CHECK(W("2 1 1 2") == Word{2, 1, 1, 2});
  CHECK(W("2112") == Word{2, 1, 1, 2});
  CHECK(W("10 10") == Word{10, 10});
  CHECK(W("").empty());
  CHECK(render_word(Word{3, 3, 1, 1}) == "3 3 1 1");
  CHECK_THROWS_AS(W("2 0"), ParseError);
  CHECK_THROWS_AS(W("20"), ParseError);
  CHECK_THROWS_AS(W("1 x"), ParseError);
  CHECK(word_from_key(word_key(Word{1, 1})) == Word{1, 1});
  CHECK(word_from_key(perm_key(Word{2, 1})) == Word{2, 1});
}

TEST_CASE("predicates") {
  CHECK(is_treed(W("211442665335")));
  CHECK(is_stirling(W("13344122")));
  CHECK(!is_treed(W("1212")));
  CHECK(!is_stirling(W("1212")));
  CHECK(!is_two_permutation(W("112")));
  CHECK(!is_two_permutation(W("1 1 3 3")));
  CHECK(is_treed(W("2112")));
  CHECK(!is_stirling(W("2112")));
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& w : enumerate_stirling(n)) CHECK(is_treed(w));
}

TEST_CASE("euler tour") {
  const auto fig = parse_tree("((1 (3))(5 (6 (4))(2)))");
  CHECK(euler_tour(fig) == W("133156446225"));
  CHECK(euler_tour_inverse(W("133156446225")) == fig);
  CHECK(euler_tour(parse_tree("((1))")) == W("11"));
  CHECK(euler_tour_inverse(W("11")) == parse_tree("((1))"));
  CHECK_THROWS(euler_tour_inverse(W("1212")));

  std::set<Word> image;
  for (const auto& t : enumerate_family(Family::ntree, 3)) image.insert(euler_tour(t));
  CHECK(image.size() == 30);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : enumerate_family(Family::ntree, n)) {
      CHECK(euler_tour_inverse(euler_tour(t)) == t);
      Word concat;
      for (const auto& f : irreducible_factors(t)) {
        const auto part = euler_tour(f);
        concat.insert(concat.end(), part.begin(), part.end());
      }
      CHECK(concat == euler_tour(t));
    }
    CHECK(oracle::factorial(n) * oracle::catalan_table(n)[n] == enumerate_treed(n).size());
  }
}

TEST_CASE("word partitions") {
  const auto u = W("2115524334");
  bool found = false;
  for (const auto& p : word_partitions(u, 3))
    if (p.blocks == std::vector<Word>{W("11"), W("2552"), W("4334")}) found = true;
  CHECK(found);
  const auto one = word_partitions(u, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].blocks == std::vector<Word>{u});
  CHECK(second_occurrence_order(u) == std::vector<unsigned>{1, 5, 2, 3, 4});
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& w : enumerate_treed(n))
      CHECK(word_partitions(w).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("treed product and coproduct") {
  const auto p = treed_product(W("2112"), W("332112"));
  CHECK(p.coefficient_sum() == 10);
  CHECK(p.coefficient(word_key(W("2112554334"))) == 1);
  CHECK(treed_product(W("2112"), Word{}) == LinearCombination::basis(word_key(W("2112"))));
  CHECK(treed_product(Word{}, W("2112")) == LinearCombination::basis(word_key(W("2112"))));

  CHECK(treed_coproduct(Word{}) ==
        TensorCombination::basis({word_key(Word{}), word_key(Word{})}));
  const auto d = treed_coproduct(W("2155433412"));
  CHECK(d.coefficient_sum() == 6);
  CHECK(d.coefficient({word_key(W("2211")), word_key(W("213312"))}) == 1);

  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; a + b <= 4; ++b)
      for (const auto& t : enumerate_family(Family::ntree, a))
        for (const auto& w : enumerate_family(Family::ntree, b)) {
          LinearCombination transported;
          for (const auto& [k, c] : star_product(t, w))
            transported.add_term(word_key(euler_tour(tree_from_key(k))), c);
          CHECK(transported == treed_product(euler_tour(t), euler_tour(w)));
        }
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& t : enumerate_family(Family::ntree, n)) {
      TensorCombination transported;
      for (const auto& [k, c] : coproduct_std(t))
        transported.add_term({word_key(euler_tour(tree_from_key(k[0]))),
                              word_key(euler_tour(tree_from_key(k[1])))},
                             c);
      CHECK(transported == treed_coproduct(euler_tour(t)));
    }
}

TEST_CASE("stirling permutations") {
  const auto two = enumerate_stirling(2);
  CHECK(two == std::vector<Word>{W("1122"), W("1221"), W("2211")});
  CHECK(enumerate_stirling(3).size() == 15);
  for (std::size_t n = 0; n <= 4; ++n) {
    std::set<Word> image;
    for (const auto& t : enumerate_family(Family::increasing, n)) image.insert(euler_tour(t));
    const auto st = enumerate_stirling(n);
    CHECK(image == std::set<Word>(st.begin(), st.end()));
    for (const auto& w : st) CHECK(is_stirling(w));
  }
}

TEST_CASE("sorted trees and permutations") {
  const auto fig = parse_tree("((1 (2)(4))(3))");
  CHECK(sorted_to_permutation(fig) == W("2413"));
  CHECK(permutation_to_sorted(W("2413")) == fig);
  CHECK(sorted_to_permutation(parse_tree("((1))")) == W("1"));
  CHECK(permutation_to_sorted(W("1")) == parse_tree("((1))"));
  CHECK_THROWS(sorted_to_permutation(parse_tree("((2)(1))")));
  CHECK_THROWS(permutation_to_sorted(W("1 1")));
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<Word> image;
    for (const auto& t : enumerate_family(Family::sorted, n)) {
      const auto u = sorted_to_permutation(t);
      CHECK(permutation_to_sorted(u) == t);
      image.insert(u);
    }
    CHECK(oracle::factorial(n) == image.size());
    for (const auto& u : enumerate_permutations(n))
      CHECK(sorted_to_permutation(permutation_to_sorted(u)) == u);
  }
}

TEST_CASE("Malvenuto-Reutenauer oracle") {
  CHECK(mr_product(W("1"), W("1")) ==
        LinearCombination::basis(perm_key(W("12"))) + LinearCombination::basis(perm_key(W("21"))));
  for (std::size_t a = 0; a <= 5; ++a)
    for (std::size_t b = 0; a + b <= 5; ++b)
      for (const auto& u : enumerate_permutations(a))
        for (const auto& v : enumerate_permutations(b)) {
          CHECK(oracle::binomial(a + b, a) == mr_product(u, v).coefficient_sum());
          if (a + b > 4) continue;
          LinearCombination transported;
          for (const auto& [k, c] : star_product(permutation_to_sorted(u), permutation_to_sorted(v)))
            transported.add_term(perm_key(sorted_to_permutation(tree_from_key(k))), c);
          CHECK(transported == mr_product(u, v));
        }
  CHECK(mr_coproduct(W("231")).coefficient({perm_key(W("12")), perm_key(W("1"))}) == 1);
}
