#include "hopftree/planar.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hopftree;

namespace {

const PlanarTree kRoot;
PlanarTree T(const char* s) { return parse_tree(s); }
LinearCombination L(const char* s) { return as_combination(parse_tree(s)); }

std::vector<PlanarTree> up_to(std::size_t maxdeg, Label alphabet = 0) {
  std::vector<PlanarTree> out;
  for (std::size_t n = 0; n <= maxdeg; ++n)
    for (auto& t : alphabet ? enumerate_labelled_trees(n, alphabet) : enumerate_trees(n))
      out.push_back(std::move(t));
  return out;
}

}  // namespace

TEST_CASE("coproduct") {
  CHECK(coproduct(kRoot) == tensor_of(unit_tree(), unit_tree()));
  const auto t = T("((()()())(()))");
  REQUIRE(t.degree() == 6);
  const auto d = coproduct(t);
  CHECK(d.coefficient_sum() == 7);
  CHECK(d.coefficient({tree_key(kRoot), tree_key(t)}) == 1);
  CHECK(d.coefficient({tree_key(t), tree_key(kRoot)}) == 1);

  for (const auto& s : up_to(5)) {
    LinearCombination left, right;
    for (const auto& [k, c] : coproduct(s)) {
      left += LinearCombination::basis(k[1], c * counit(LinearCombination::basis(k[0])));
      right += LinearCombination::basis(k[0], c * counit(LinearCombination::basis(k[1])));
    }
    CHECK(left == as_combination(s));
    CHECK(right == as_combination(s));
  }
}

TEST_CASE("counit") {
  CHECK(counit(unit_tree()) == 1);
  CHECK(counit(L("(())")) == 0);
  CHECK(counit(unit_tree() * Rational(2) + L("(())") * Rational(3)) == 2);
}

TEST_CASE("order preserving maps") {
  for (std::size_t nodes = 1; nodes <= 6; ++nodes)
    for (std::size_t k = 0; k <= nodes + 1; ++k) {
      const auto maps = order_preserving_maps(k, nodes);
      CHECK(oracle::binomial(nodes, k) == maps.size());
      for (const auto& f : maps)
        for (std::size_t i = 1; i < f.targets.size(); ++i) CHECK(f.targets[i - 1] < f.targets[i]);
    }
}

TEST_CASE("hash product") {
  const auto single = T("(())");
  const auto u = T("((())())");
  const auto whole = partitions(u, 1).front();
  CHECK(hash_product(kRoot, u, whole, {{1}}) == u);
  CHECK(hash_product(u, kRoot, TreePartition{}, OrderPreservingMap{}) == u);
  const auto p = partitions(single, 1).front();
  CHECK(hash_product(single, single, p, {{2}}) == T("(()())"));
  CHECK(hash_product(single, single, p, {{1}}) == T("((()))"));
  CHECK_THROWS(hash_product(single, single, p, {{3}}));
  CHECK_THROWS(hash_product(single, single, p, {{1, 2}}));
  const auto two = partitions(T("(()())"), 2).front();
  CHECK_THROWS(hash_product(single, T("(()())"), two, {{2, 1}}));
  CHECK_THROWS(hash_product(single, u, two, {{1, 2}}));
}

TEST_CASE("product") {
  CHECK(product(T("((()))"), T("((()()))")).coefficient_sum() == 10);
  CHECK(product(T("(())"), T("(())")) == L("(()())") + L("((()))"));
  for (const auto& t : up_to(3)) {
    CHECK(product(t, kRoot) == as_combination(t));
    CHECK(product(kRoot, t) == as_combination(t));
  }
  const auto small = up_to(5);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.degree() + b.degree() > 6) continue;
      CHECK(oracle::binomial(a.degree() + b.degree(), a.degree()) ==
            product(a, b).coefficient_sum());
    }
}

TEST_CASE("antipode") {
  CHECK(antipode(unit_tree()) == unit_tree());
  CHECK(antipode(L("(())")) == -L("(())"));
  CHECK(antipode(L("((()))")) == L("(()())"));
  const BasisRule mul = [](const BasisKey& a, const BasisKey& b) {
    return product(tree_from_key(a), tree_from_key(b));
  };
  for (const auto& t : up_to(4)) {
    TensorCombination left;
    for (const auto& [k, c] : coproduct(t))
      left += tensor_of(antipode(LinearCombination::basis(k[0])), LinearCombination::basis(k[1])) * c;
    const auto expected = t.degree() == 0 ? unit_tree() : LinearCombination{};
    CHECK(fold_legs(mul, left) == expected);
  }
}

TEST_CASE("leftmost branch") {
  CHECK(leftmost_branch(kRoot) == std::vector<PlanarTree::NodeId>{1});
  CHECK(leftmost_branch(T("(((())))")).size() == 4);
  const auto corolla = T("(()()())");
  CHECK(leftmost_branch(corolla) == std::vector<PlanarTree::NodeId>{1, corolla.root()});
}

TEST_CASE("dual product and coproduct") {
  CHECK(dual_product(T("(())"), T("(())")) == L("((()))") + L("(()())"));
  for (const char* s : {"(())", "((()))", "((()()))"})
    CHECK(dual_product(T(s), kRoot) == L(s));
  const auto six = dual_product(T("(()())"), T("((()))"));
  CHECK(six.coefficient_sum() == 6);

  CHECK(dual_coproduct(kRoot) == tensor_of(unit_tree(), unit_tree()));
  const auto irr = T("((()()))");
  CHECK(dual_coproduct(irr) == tensor_of(unit_tree(), L("((()()))")) +
                                   tensor_of(L("((()()))"), unit_tree()));
  CHECK(dual_coproduct(T("(()())")).coefficient_sum() == 3);
}

TEST_CASE("pairing") {
  CHECK(pairing(L("(())"), L("(())")) == 1);
  CHECK(pairing(L("(())"), L("((()))")) == 0);
  CHECK(pairing(L("(())") * Rational(2) + L("((()))"), L("(())") * Rational(3)) == 6);
  CHECK_THROWS(pairing(L("(())"), LinearCombination::basis("word:1 1")));
  const auto all = up_to(5);
  for (const auto& t : all)
    for (const auto& w : all) {
      const auto n = t.degree() + w.degree();
      if (n > 5) continue;
      const auto left = dual_product(t, w);
      const auto dw = tensor_of(as_combination(t), as_combination(w));
      for (const auto& u : enumerate_trees(n)) {
        CHECK(pairing(left, as_combination(u)) == pairing(dw, coproduct(u)));
        CHECK(pairing(dual_coproduct(u), dw) == pairing(as_combination(u), as_combination(dot(t, w))));
      }
    }
}

TEST_CASE("labelled trees over the alphabet {1,2}") {
  const auto trees = up_to(4, 2);
  const BasisCoMap delta = [](const BasisKey& k) { return coproduct(tree_from_key(k)); };
  for (const auto& t : trees) {
    const auto d = coproduct(t);
    CHECK(apply_to_leg(d, 0, delta) == apply_to_leg(d, 1, delta));
  }
  for (const auto& x : trees)
    for (const auto& y : trees) {
      if (x.degree() + y.degree() > 4) continue;
      const auto X = as_combination(x), Y = as_combination(y);
      CHECK(coproduct(product(X, Y)) == product(coproduct(x), coproduct(y)));
      CHECK(product(x, y).coefficient_sum() == oracle::binomial(x.degree() + y.degree(), x.degree()));
      const BasisRule dot_rule = [](const BasisKey& a, const BasisKey& b) {
        return as_combination(dot(tree_from_key(a), tree_from_key(b)));
      };
      const auto lhs = coproduct(as_combination(dot(x, y)));
      const auto rhs = componentwise(dot_rule, coproduct(x), tensor_of(unit_tree(), Y)) +
                       componentwise(dot_rule, tensor_of(X, unit_tree()), coproduct(y)) -
                       tensor_of(X, Y);
      CHECK(lhs == rhs);
      for (const auto& z : trees) {
        if (x.degree() + y.degree() + z.degree() > 4) continue;
        const auto Z = as_combination(z);
        CHECK(product(product(X, Y), Z) == product(X, product(Y, Z)));
      }
    }
}
