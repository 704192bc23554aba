#include "hopftree/tree.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hopftree;

TEST_CASE("parse and render") {
  CHECK(parse_tree("()").degree() == 0);
  const auto ladder = parse_tree("(((())))");
  CHECK(ladder.degree() == 3);
  CHECK(ladder.parent(1) == 2);
  CHECK(ladder.parent(2) == 3);
  CHECK(ladder.parent(3) == ladder.root());

  const auto labelled = parse_tree("((1 (2)))");
  REQUIRE(labelled.labelled());
  CHECK(labelled.label(1) == 2);
  CHECK(labelled.label(2) == 1);
  CHECK(labelled.parent(1) == 2);

  CHECK(render_tree(PlanarTree{}) == "()");
  CHECK(render_tree(parse_tree("(()()())")) == "(()()())");
  CHECK(render_tree(parse_tree("((7))")) == "((7))");
  CHECK(render_tree(parse_tree("((1 (3))(5 (6 (4))(2)))")) == "((1 (3))(5 (6 (4))(2)))");
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) CHECK(parse_tree(render_tree(t)) == t);
}

TEST_CASE("parse errors") {
  for (const char* bad : {"", "(", ")", "(()", "())", "()()", "(a)", "((1 ))", "((1 (2))())",
                          "((1)(()))", "( ())", "((1  (2)))"})
    CHECK_THROWS_AS(parse_tree(bad), ParseError);
}

TEST_CASE("post order") {
  CHECK(postorder_nodes(PlanarTree{}).empty());
  const auto ladder = parse_tree("(((())))");
  CHECK(postorder_nodes(ladder) == std::vector<PlanarTree::NodeId>{1, 2, 3});
  const auto corolla = parse_tree("(()()())");
  CHECK(corolla.children(corolla.root()) == std::vector<PlanarTree::NodeId>{1, 2, 3});
  // Every descendant precedes its ancestor.
  for (const auto& t : enumerate_trees(5))
    for (PlanarTree::NodeId v = 1; v <= t.degree(); ++v) CHECK(t.parent(v) > v);
}

TEST_CASE("from_parents validation") {
  CHECK_NOTHROW(PlanarTree::from_parents({2, 3}));
  CHECK_THROWS(PlanarTree::from_parents({1}));
  CHECK_THROWS(PlanarTree::from_parents({3, 4, 4}));  // 3 has descendant 1 but not 2
  CHECK_THROWS(PlanarTree::from_parents({2, 3}, {1}));
}

TEST_CASE("convex subtrees against contraction oracle") {
  const auto ladder = parse_tree("(((())))");
  CHECK(convex_subtree(ladder, 1, 2) == parse_tree("((()))"));

  const auto t = parse_tree("((()(()))(())(()()))");
  REQUIRE(t.degree() == 9);
  CHECK(convex_subtree(t, -2, 12) == t);
  CHECK(convex_subtree(t, 10, 12) == PlanarTree{});
  CHECK(convex_subtree(t, 5, 4) == PlanarTree{});

  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& s : enumerate_trees(n))
      for (long i = -1; i <= static_cast<long>(n) + 1; ++i)
        for (long j = i - 1; j <= static_cast<long>(n) + 1; ++j)
          CHECK(convex_subtree(s, i, j) == oracle::interval(s, i, j));
}

TEST_CASE("convex subtrees compose") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n))
      for (long a = 1; a <= static_cast<long>(n); ++a)
        for (long b = a; b <= static_cast<long>(n); ++b) {
          const auto inner = convex_subtree(t, a, b);
          for (long i = 1; i <= b - a + 1; ++i)
            for (long j = i; j <= b - a + 1; ++j)
              CHECK(convex_subtree(inner, i, j) == convex_subtree(t, a + i - 1, a + j - 1));
        }
}

TEST_CASE("partitions") {
  for (const auto& t : {parse_tree("(((((((())))))))"), parse_tree("(()()()()()()())")}) {
    CHECK(partitions(t, 3).size() == 15);
    CHECK(partitions(t).size() == 64);
  }
  const auto t = parse_tree("((())(()()))");
  CHECK(partitions(t).size() == 16);
  const auto one = partitions(t, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].blocks == std::vector<PlanarTree>{t});
  CHECK(partitions(PlanarTree{}).empty());

  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& s : enumerate_trees(n)) {
      std::size_t total = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        const auto ps = partitions(s, k);
        CHECK(oracle::binomial(n - 1, k - 1) == ps.size());
        total += ps.size();
        for (const auto& p : ps) {
          CHECK(p.size() == k);
          for (const auto& blk : p.blocks) CHECK(blk.degree() >= 1);
        }
      }
      CHECK(total == (std::size_t{1} << (n - 1)));
    }
}

TEST_CASE("dot product and irreducible factors") {
  const auto t = parse_tree("((())())");
  CHECK(dot(t, PlanarTree{}) == t);
  CHECK(dot(PlanarTree{}, t) == t);
  CHECK(dot(parse_tree("((()))"), parse_tree("((()))")) == parse_tree("((())(()))"));
  CHECK_THROWS(dot(parse_tree("((1))"), parse_tree("(())")));

  std::vector<PlanarTree> small;
  for (std::size_t n = 0; n <= 2; ++n)
    for (const auto& s : enumerate_trees(n)) small.push_back(s);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) CHECK(dot(dot(a, b), c) == dot(a, dot(b, c)));

  CHECK(irreducible_factors(PlanarTree{}).empty());
  CHECK(irreducible_factors(parse_tree("(((())))")).size() == 1);
  CHECK(irreducible_factors(parse_tree("(()()())")) ==
        std::vector<PlanarTree>(3, parse_tree("(())")));

  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& s : enumerate_trees(n)) {
      PlanarTree acc;
      for (const auto& f : irreducible_factors(s)) {
        CHECK(is_irreducible(f));
        acc = dot(acc, f);
      }
      CHECK(acc == s);
    }
}

TEST_CASE("enumeration") {
  const auto c = oracle::catalan_table(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto trees = enumerate_trees(n);
    CHECK(c[n] == trees.size());
    CHECK(catalan(n) == trees.size());
    std::set<std::string> seen;
    for (const auto& t : trees) {
      CHECK(t.degree() == n);
      seen.insert(render_tree(t));
    }
    CHECK(seen.size() == trees.size());
    CHECK(std::is_sorted(trees.begin(), trees.end()));
  }
  CHECK(enumerate_trees(3).size() == 5);
  CHECK(enumerate_trees(7).size() == 429);
  CHECK(enumerate_labelled_trees(2, 2).size() == 8);
}

TEST_CASE("grafting") {
  const auto single = parse_tree("(())");
  CHECK(graft(PlanarTree{}, 1, single, Side::rightmost) == single);
  CHECK(graft(single, single.root(), single, Side::rightmost) == parse_tree("(()())"));
  const auto host = parse_tree("((()))");
  const auto sub = parse_tree("((()))");
  CHECK(graft(host, 2, sub, Side::rightmost) == parse_tree("((()(())))"));
  CHECK(graft(host, 2, sub, Side::leftmost) == parse_tree("(((())()))"));
  CHECK_THROWS(graft(host, 7, sub, Side::leftmost));

  // Leftmost and rightmost differ only in where the new block sits.
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& h : enumerate_trees(n))
      for (PlanarTree::NodeId v = 1; v <= h.root(); ++v)
        for (const auto& s : enumerate_trees(2)) {
          const auto l = graft(h, v, s, Side::leftmost);
          const auto r = graft(h, v, s, Side::rightmost);
          CHECK(l.degree() == n + 2);
          CHECK(r.degree() == n + 2);
          if (h.children(v).empty()) CHECK(l == r);
        }
}
