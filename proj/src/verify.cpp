#include "hopftree/verify.hpp"

#include "hopftree/labelled.hpp"
#include "hopftree/permutations.hpp"
#include "hopftree/planar.hpp"
#include "hopftree/primitives.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopftree {

namespace {

using Trees = std::vector<std::vector<PlanarTree>>;
using Check = std::function<std::string(std::size_t)>;

Trees by_degree(std::size_t maxdeg, const std::function<std::vector<PlanarTree>(std::size_t)>& gen) {
  Trees out;
  for (std::size_t n = 0; n <= maxdeg; ++n) out.push_back(gen(n));
  return out;
}

std::vector<const PlanarTree*> flat(const Trees& trees, std::size_t maxdeg) {
  std::vector<const PlanarTree*> out;
  for (std::size_t n = 0; n <= maxdeg && n < trees.size(); ++n)
    for (const auto& t : trees[n]) out.push_back(&t);
  return out;
}

/// All ordered tuples with total degree <= maxsum.
std::vector<std::vector<const PlanarTree*>> tuples(const Trees& trees, std::size_t arity,
                                                   std::size_t maxsum) {
  std::vector<std::vector<const PlanarTree*>> out{{}};
  std::vector<std::size_t> used{0};
  for (std::size_t a = 0; a < arity; ++a) {
    std::vector<std::vector<const PlanarTree*>> next;
    std::vector<std::size_t> next_used;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t n = 0; used[i] + n <= maxsum && n < trees.size(); ++n)
        for (const auto& t : trees[n]) {
          auto tuple = out[i];
          tuple.push_back(&t);
          next.push_back(std::move(tuple));
          next_used.push_back(used[i] + n);
        }
    out = std::move(next);
    used = std::move(next_used);
  }
  return out;
}

std::string names(const std::vector<const PlanarTree*>& ts) {
  std::string out;
  for (const auto* t : ts) out += (out.empty() ? "" : " ") + render_tree(*t);
  return out;
}

Integer binom(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

LinearCombination basis(const PlanarTree& t) { return as_combination(t); }

BasisRule dot_rule() {
  return [](const BasisKey& x, const BasisKey& y) {
    return as_combination(dot(tree_from_key(x), tree_from_key(y)));
  };
}

BasisRule slash_rule() {
  return [](const BasisKey& x, const BasisKey& y) {
    return as_combination(slash_product(tree_from_key(x), tree_from_key(y)));
  };
}

// Delta(xy) = Delta(x)(1 (x) y) + (x (x) 1)Delta(y) - x (x) y.
std::string infinitesimal(const PlanarTree& x, const PlanarTree& y, const BasisRule& mul,
                          const std::function<TensorCombination(const PlanarTree&)>& delta) {
  const auto one = unit_tree();
  const auto X = basis(x), Y = basis(y);
  const BasisCoMap d = [&](const BasisKey& k) { return delta(tree_from_key(k)); };
  const auto lhs = extend_linear(d, fold_legs(mul, tensor_of(X, Y)));
  const auto rhs = componentwise(mul, delta(x), tensor_of(one, Y)) +
                   componentwise(mul, tensor_of(X, one), delta(y)) - tensor_of(X, Y);
  return lhs == rhs ? "" : render_tree(x) + " " + render_tree(y);
}

class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, Exec exec) : exec_(exec) { report_.suite = std::move(suite); }

  void check(std::string name, std::size_t n, const Check& body) {
    report_.lines.push_back(to_check_line(std::move(name), sweep(n, body, exec_)));
  }

  template <typename T>
  void check_each(std::string name, const std::vector<T>& items,
                  const std::function<std::string(const T&)>& body) {
    check(std::move(name), items.size(), [&](std::size_t i) { return body(items[i]); });
  }

  void append(const DualCheckReport& r, const std::string& prefix) {
    for (auto line : r.lines) {
      line.name = prefix + line.name;
      report_.lines.push_back(std::move(line));
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
  Exec exec_;
};

using Tuple = std::vector<const PlanarTree*>;

SuiteReport counts_suite(const VerifyOptions& o) {
  SuiteBuilder s("counts", o.exec);
  const auto N = o.maxdeg;
  s.check("planar trees", N + 1, [](std::size_t n) -> std::string {
    return enumerate_trees(n).size() == catalan(n) ? "" : "degree " + std::to_string(n);
  });
  s.check("binary trees", N + 1, [](std::size_t n) -> std::string {
    return enumerate_binary(n).size() == catalan(n) ? "" : "degree " + std::to_string(n);
  });
  const std::pair<Family, std::size_t> families[] = {
      {Family::ntree, std::min<std::size_t>(N, 5)},
      {Family::increasing, std::min<std::size_t>(N, 6)},
      {Family::sorted, std::min<std::size_t>(N, 6)}};
  for (const auto& [fam, cap] : families) {
    const TreeFamily tf = parse_tree_family(family_name(fam));
    s.check(family_name(fam) + " count", cap + 1, [fam = fam, tf](std::size_t n) -> std::string {
      return enumerate_family(fam, n).size() == family_count(tf, n)
                 ? ""
                 : "degree " + std::to_string(n);
    });
    s.check(family_name(fam) + " construction matches filter",
            std::min<std::size_t>(cap, 5) + 1, [fam = fam](std::size_t n) -> std::string {
              return enumerate_family(fam, n) == enumerate_family_by_filter(fam, n)
                         ? ""
                         : "degree " + std::to_string(n);
            });
  }
  const auto w = std::min<std::size_t>(N, 4);
  s.check("treed words", w + 1, [](std::size_t n) -> std::string {
    return enumerate_treed(n).size() == family_count({TreeFamily::Kind::ntree, 0}, n)
               ? ""
               : "size " + std::to_string(n);
  });
  s.check("stirling words", std::min<std::size_t>(N, 6) + 1, [](std::size_t n) -> std::string {
    return enumerate_stirling(n).size() == family_count({TreeFamily::Kind::increasing, 0}, n)
               ? ""
               : "size " + std::to_string(n);
  });
  return s.take();
}

SuiteReport partitions_suite(const VerifyOptions& o) {
  SuiteBuilder s("partitions", o.exec);
  const auto trees = by_degree(o.maxdeg, enumerate_trees);
  const auto all = flat(trees, o.maxdeg);
  s.check_each<const PlanarTree*>("block counts", all, [](const PlanarTree* t) -> std::string {
    const auto n = t->degree();
    std::size_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const auto ps = partitions(*t, k);
      if (binom(n - 1, k - 1) != ps.size()) return render_tree(*t) + " k=" + std::to_string(k);
      total += ps.size();
    }
    if (n > 0 && total != (std::size_t{1} << (n - 1))) return render_tree(*t) + " total";
    return "";
  });
  s.check_each<const PlanarTree*>("blocks are convex subtrees", all,
                                  [](const PlanarTree* t) -> std::string {
    for (const auto& p : partitions(*t))
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.blocks[b] != convex_subtree(*t, static_cast<long>(p.cuts[b] + 1),
                                          static_cast<long>(p.cuts[b + 1])))
          return render_tree(*t);
    return "";
  });
  return s.take();
}

SuiteReport addends_suite(const VerifyOptions& o) {
  SuiteBuilder s("addends", o.exec);
  const auto N = o.maxdeg;
  const auto trees = by_degree(N, enumerate_trees);
  s.check_each<Tuple>("hash product", tuples(trees, 2, N), [](const Tuple& p) -> std::string {
    const auto sum = product(*p[0], *p[1]).coefficient_sum();
    return sum == binom(p[0]->degree() + p[1]->degree(), p[0]->degree()) ? "" : names(p);
  });
  s.check_each<Tuple>("dual product", tuples(trees, 2, N), [](const Tuple& p) -> std::string {
    const auto k = irreducible_factors(*p[0]).size();
    const auto l = leftmost_branch(*p[1]).size() - 1;
    return dual_product(*p[0], *p[1]).coefficient_sum() == binom(k + l, k) ? "" : names(p);
  });
  const auto b = std::min<std::size_t>(N, 4);
  const auto ntrees = by_degree(b, [](std::size_t n) { return enumerate_family(Family::ntree, n); });
  s.check_each<Tuple>("star product", tuples(ntrees, 2, b), [](const Tuple& p) -> std::string {
    const auto sum = star_product(*p[0], *p[1]).coefficient_sum();
    return sum == binom(p[0]->degree() + p[1]->degree(), p[0]->degree()) ? "" : names(p);
  });
  s.check_each<Tuple>("treed word product", tuples(ntrees, 2, b), [](const Tuple& p) -> std::string {
    const auto sum = treed_product(euler_tour(*p[0]), euler_tour(*p[1])).coefficient_sum();
    return sum == binom(p[0]->degree() + p[1]->degree(), p[0]->degree()) ? "" : names(p);
  });
  s.check_each<Tuple>("binary product", tuples(trees, 2, N), [](const Tuple& p) -> std::string {
    const auto sum =
        binary_product(planar_to_binary(*p[0]), planar_to_binary(*p[1])).coefficient_sum();
    return sum == binom(p[0]->degree() + p[1]->degree(), p[0]->degree()) ? "" : names(p);
  });
  return s.take();
}

// Shared axiom checks for a (product, coproduct) pair on one family.
struct Structure {
  std::function<LinearCombination(const LinearCombination&, const LinearCombination&)> mul;
  std::function<TensorCombination(const TensorCombination&, const TensorCombination&)> mul2;
  std::function<TensorCombination(const PlanarTree&)> delta;
};

void axiom_checks(SuiteBuilder& s, const std::string& tag, const Trees& trees, std::size_t bound,
                  const Structure& st) {
  const auto all = flat(trees, bound);
  const BasisCoMap delta_key = [&](const BasisKey& k) { return st.delta(tree_from_key(k)); };
  s.check_each<const PlanarTree*>(tag + " coassociativity", all,
                                  [&](const PlanarTree* t) -> std::string {
    const auto d = st.delta(*t);
    return apply_to_leg(d, 0, delta_key) == apply_to_leg(d, 1, delta_key) ? "" : render_tree(*t);
  });
  s.check_each<const PlanarTree*>(tag + " counit", all, [&](const PlanarTree* t) -> std::string {
    LinearCombination left, right;
    const auto unit = tree_key(PlanarTree{});
    for (const auto& [k, c] : st.delta(*t)) {
      if (k[0] == unit) left.add_term(k[1], c);
      if (k[1] == unit) right.add_term(k[0], c);
    }
    return left == basis(*t) && right == basis(*t) ? "" : render_tree(*t);
  });
  s.check_each<Tuple>(tag + " associativity", tuples(trees, 3, bound),
                      [&](const Tuple& p) -> std::string {
    const auto x = basis(*p[0]), y = basis(*p[1]), z = basis(*p[2]);
    return st.mul(st.mul(x, y), z) == st.mul(x, st.mul(y, z)) ? "" : names(p);
  });
  s.check_each<const PlanarTree*>(tag + " unit", all, [&](const PlanarTree* t) -> std::string {
    const auto x = basis(*t);
    return st.mul(unit_tree(), x) == x && st.mul(x, unit_tree()) == x ? "" : render_tree(*t);
  });
  s.check_each<Tuple>(tag + " compatibility", tuples(trees, 2, bound),
                      [&](const Tuple& p) -> std::string {
    const auto lhs = extend_linear(delta_key, st.mul(basis(*p[0]), basis(*p[1])));
    return lhs == st.mul2(st.delta(*p[0]), st.delta(*p[1])) ? "" : names(p);
  });
}

SuiteReport hopf_suite(const VerifyOptions& o) {
  SuiteBuilder s("hopf", o.exec);
  const auto N = o.maxdeg;
  const auto trees = by_degree(N, enumerate_trees);
  Structure st{
      [](const LinearCombination& a, const LinearCombination& b) { return product(a, b); },
      [](const TensorCombination& a, const TensorCombination& b) { return product(a, b); },
      [](const PlanarTree& t) { return coproduct(t); }};
  axiom_checks(s, "(*, delta)", trees, N, st);
  s.check_each<Tuple>("(dot, delta) infinitesimal", tuples(trees, 2, N),
                      [](const Tuple& p) {
    return infinitesimal(*p[0], *p[1], dot_rule(),
                         [](const PlanarTree& t) { return coproduct(t); });
  });
  const BasisRule star_rule = [](const BasisKey& a, const BasisKey& b) {
    return product(tree_from_key(a), tree_from_key(b));
  };
  s.check_each<const PlanarTree*>("antipode", flat(trees, N), [&](const PlanarTree* t) -> std::string {
    const auto d = coproduct(*t);
    const auto eta = t->degree() == 0 ? unit_tree() : LinearCombination{};
    const BasisMap S = [](const BasisKey& k) { return antipode(LinearCombination::basis(k)); };
    const BasisMap id = [](const BasisKey& k) { return LinearCombination::basis(k); };
    TensorCombination left, right;
    for (const auto& [k, c] : d) {
      left += tensor_of(S(k[0]), id(k[1])) * c;
      right += tensor_of(id(k[0]), S(k[1])) * c;
    }
    return fold_legs(star_rule, left) == eta && fold_legs(star_rule, right) == eta
               ? ""
               : render_tree(*t);
  });
  return s.take();
}

SuiteReport labelled_suite(const VerifyOptions& o) {
  SuiteBuilder s("labelled", o.exec);
  const auto b = std::min<std::size_t>(o.maxdeg, 4);
  const auto ntrees = by_degree(b, [](std::size_t n) { return enumerate_family(Family::ntree, n); });
  Structure st{
      [](const LinearCombination& x, const LinearCombination& y) { return star_product(x, y); },
      [](const TensorCombination& x, const TensorCombination& y) { return star_product(x, y); },
      [](const PlanarTree& t) { return coproduct_std(t); }};
  axiom_checks(s, "(star, delta_s)", ntrees, b, st);
  s.check_each<Tuple>("(slash, delta_s) infinitesimal", tuples(ntrees, 2, b),
                      [](const Tuple& p) {
    return infinitesimal(*p[0], *p[1], slash_rule(),
                         [](const PlanarTree& t) { return coproduct_std(t); });
  });
  for (Family fam : {Family::increasing, Family::sorted}) {
    const auto members = by_degree(b, [fam](std::size_t n) { return enumerate_family(fam, n); });
    s.check_each<Tuple>(family_name(fam) + " closed under star and delta_s",
                        tuples(members, 2, b), [fam](const Tuple& p) -> std::string {
      for (const auto& [k, c] : star_product(*p[0], *p[1]))
        if (!is_member(fam, tree_from_key(k))) return names(p);
      for (const auto* t : p)
        for (const auto& [k, c] : coproduct_std(*t))
          for (const auto& leg : k)
            if (!is_member(fam, tree_from_key(leg))) return render_tree(*t);
      return "";
    });
  }
  s.check_each<const PlanarTree*>("slash factorisation", flat(ntrees, b),
                                  [](const PlanarTree* t) -> std::string {
    PlanarTree acc;
    for (const auto& f : slash_irreducible_factors(*t)) {
      if (!is_slash_irreducible(f)) return render_tree(*t);
      acc = slash_product(acc, f);
    }
    return acc == *t ? "" : render_tree(*t);
  });
  return s.take();
}

SuiteReport duality_suite(const VerifyOptions& o) {
  SuiteBuilder s("duality", o.exec);
  const auto N = o.maxdeg;
  const auto trees = by_degree(N, enumerate_trees);
  s.check_each<Tuple>("dual product against coproduct", tuples(trees, 2, N),
                      [&](const Tuple& p) -> std::string {
    const auto d = dual_product(*p[0], *p[1]);
    const TensorKey legs{tree_key(*p[0]), tree_key(*p[1])};
    for (const auto& u : trees[p[0]->degree() + p[1]->degree()])
      if (d.coefficient(tree_key(u)) != coproduct(u).coefficient(legs))
        return names(p) + " at " + render_tree(u);
    return "";
  });
  s.check_each<Tuple>("dual coproduct against dot", tuples(trees, 2, N),
                      [&](const Tuple& p) -> std::string {
    const TensorKey legs{tree_key(*p[0]), tree_key(*p[1])};
    const auto joined = dot(*p[0], *p[1]);
    for (const auto& u : trees[p[0]->degree() + p[1]->degree()])
      if (dual_coproduct(u).coefficient(legs) != (u == joined ? 1 : 0))
        return names(p) + " at " + render_tree(u);
    return "";
  });
  return s.take();
}

SuiteReport primitives_suite(const VerifyOptions& o) {
  SuiteBuilder s("primitives", o.exec);
  const auto N = o.maxdeg;
  const auto b = std::min<std::size_t>(N, 4);
  const auto trees = by_degree(N, enumerate_trees);
  const auto ntrees = by_degree(b, [](std::size_t n) { return enumerate_family(Family::ntree, n); });
  struct Case {
    const Trees* trees;
    std::size_t bound;
    MultMode mode;
    std::string tag;
  };
  for (const auto& c : {Case{&trees, N, MultMode::dot, "unlabelled"},
                        Case{&ntrees, b, MultMode::slash, "ntree"}}) {
    std::vector<const PlanarTree*> positive;
    for (const auto* t : flat(*c.trees, c.bound))
      if (t->degree() > 0) positive.push_back(t);
    const auto mode = c.mode;
    s.check_each<const PlanarTree*>(c.tag + " e is idempotent and primitive", positive,
                                    [mode](const PlanarTree* t) -> std::string {
      const auto e = idempotent_e(basis(*t), mode);
      if (idempotent_e(e, mode) != e) return render_tree(*t) + " not idempotent";
      if (!reduced_coproduct(e, mode).is_zero()) return render_tree(*t) + " not primitive";
      return "";
    });
    std::vector<Tuple> pairs;
    for (auto& p : tuples(*c.trees, 2, c.bound))
      if (p[0]->degree() > 0 && p[1]->degree() > 0) pairs.push_back(std::move(p));
    const BasisRule mul = mode == MultMode::dot ? dot_rule() : slash_rule();
    s.check_each<Tuple>(c.tag + " e kills products", pairs, [mode, mul](const Tuple& p) -> std::string {
      const auto xy = fold_legs(mul, tensor_of(basis(*p[0]), basis(*p[1])));
      return idempotent_e(xy, mode).is_zero() ? "" : names(p);
    });
  }
  struct RankCase {
    const char* family;
    std::size_t cap;
  };
  for (const auto& rc : {RankCase{"tree", 6}, RankCase{"sorted", 5}, RankCase{"increasing", 4},
                         RankCase{"ntree", 4}}) {
    const auto f = parse_tree_family(rc.family);
    const auto top = std::min(N, rc.cap);
    if (top == 0) continue;
    const auto series = prim_dimensions(f, top);
    s.check(std::string(rc.family) + " rank matches recursion", top,
            [&, f](std::size_t i) -> std::string {
      const auto n = i + 1;
      // Ranks already run in parallel across degrees here.
      const auto r = rank_of(primitive_basis(f, n, Exec::serial));
      return series.b[n] == r ? "" : "degree " + std::to_string(n);
    });
  }
  for (const char* fam : {"tree", "labelled:2", "ntree", "increasing", "sorted"}) {
    const auto f = parse_tree_family(fam);
    s.check(std::string(fam) + " tensor algebra dimensions", 1, [f](std::size_t) -> std::string {
      const auto series = prim_dimensions(f, 6);
      return tensor_algebra_dimensions(series.b) == series.a ? "" : "mismatch";
    });
  }
  return s.take();
}

LinearCombination eps(const LinearCombination& v) {
  LinearCombination out;
  for (const auto& [k, c] : v) out.add_term(word_key(euler_tour(tree_from_key(k))), c);
  return out;
}

TensorCombination eps(const TensorCombination& v) {
  TensorCombination out;
  for (const auto& [k, c] : v) {
    TensorKey legs;
    for (const auto& leg : k) legs.push_back(word_key(euler_tour(tree_from_key(leg))));
    out.add_term(std::move(legs), c);
  }
  return out;
}

LinearCombination sigma(const LinearCombination& v) {
  LinearCombination out;
  for (const auto& [k, c] : v) out.add_term(perm_key(sorted_to_permutation(tree_from_key(k))), c);
  return out;
}

TensorCombination sigma(const TensorCombination& v) {
  TensorCombination out;
  for (const auto& [k, c] : v) {
    TensorKey legs;
    for (const auto& leg : k) legs.push_back(perm_key(sorted_to_permutation(tree_from_key(leg))));
    out.add_term(std::move(legs), c);
  }
  return out;
}

SuiteReport permutations_suite(const VerifyOptions& o) {
  SuiteBuilder s("permutations", o.exec);
  const auto b = std::min<std::size_t>(o.maxdeg, 4);
  const auto ntrees = by_degree(b, [](std::size_t n) { return enumerate_family(Family::ntree, n); });
  s.check("euler tour is a bijection onto treed words", b + 1, [&](std::size_t n) -> std::string {
    std::set<Word> image;
    for (const auto& t : ntrees[n]) {
      const auto w = euler_tour(t);
      if (!is_treed(w) || euler_tour_inverse(w) != t) return render_tree(t);
      Word concat;
      for (const auto& f : irreducible_factors(t)) {
        const auto part = euler_tour(f);
        concat.insert(concat.end(), part.begin(), part.end());
      }
      if (concat != w) return render_tree(t) + " not multiplicative";
      image.insert(w);
    }
    const auto treed = enumerate_treed(n);
    return image == std::set<Word>(treed.begin(), treed.end()) ? "" : "size " + std::to_string(n);
  });
  s.check("increasing trees tour onto stirling words", b + 1, [](std::size_t n) -> std::string {
    std::set<Word> image;
    for (const auto& t : enumerate_family(Family::increasing, n)) image.insert(euler_tour(t));
    const auto st = enumerate_stirling(n);
    return image == std::set<Word>(st.begin(), st.end()) ? "" : "size " + std::to_string(n);
  });
  s.check_each<const PlanarTree*>("treed partitions", flat(ntrees, b),
                                  [](const PlanarTree* t) -> std::string {
    if (t->degree() == 0) return "";
    const auto w = euler_tour(*t);
    const auto ps = word_partitions(w);
    if (ps.size() != (std::size_t{1} << (t->degree() - 1))) return render_word(w);
    for (const auto& p : ps)
      for (std::size_t i = 0; i < p.blocks.size(); ++i)
        if (p.blocks[i] != euler_tour(convex_subtree(*t, static_cast<long>(p.cuts[i] + 1),
                                                     static_cast<long>(p.cuts[i + 1]))))
          return render_word(w);
    return "";
  });
  s.check_each<Tuple>("treed product is the transported star product", tuples(ntrees, 2, b),
                      [](const Tuple& p) -> std::string {
    return eps(star_product(*p[0], *p[1])) == treed_product(euler_tour(*p[0]), euler_tour(*p[1]))
               ? ""
               : names(p);
  });
  s.check_each<const PlanarTree*>("treed coproduct is the transported delta_s", flat(ntrees, b),
                                  [](const PlanarTree* t) -> std::string {
    return eps(coproduct_std(*t)) == treed_coproduct(euler_tour(*t)) ? "" : render_tree(*t);
  });
  const auto stirling = [&] {
    std::vector<Word> all;
    for (std::size_t n = 0; n <= b; ++n)
      for (auto& w : enumerate_stirling(n)) all.push_back(std::move(w));
    return all;
  }();
  s.check("stirling words closed under product and coproduct", stirling.size(),
          [&](std::size_t i) -> std::string {
    const auto& u = stirling[i];
    for (const auto& [k, c] : treed_coproduct(u))
      for (const auto& leg : k)
        if (!is_stirling(word_from_key(leg))) return render_word(u);
    for (const auto& v : stirling) {
      if (u.size() + v.size() > 2 * b) continue;
      for (const auto& [k, c] : treed_product(u, v))
        if (!is_stirling(word_from_key(k))) return render_word(u) + " * " + render_word(v);
    }
    return "";
  });
  const auto m = std::min<std::size_t>(o.maxdeg, 5);
  s.check("sorted trees and permutations round trip", m + 1, [](std::size_t n) -> std::string {
    for (const auto& u : enumerate_permutations(n)) {
      const auto t = permutation_to_sorted(u);
      if (!is_member(Family::sorted, t) || sorted_to_permutation(t) != u) return render_word(u);
    }
    return "";
  });
  const auto sorted = by_degree(m, [](std::size_t n) { return enumerate_family(Family::sorted, n); });
  s.check_each<Tuple>("sorted star product is the shifted shuffle", tuples(sorted, 2, m),
                      [](const Tuple& p) -> std::string {
    return sigma(star_product(*p[0], *p[1])) ==
                   mr_product(sorted_to_permutation(*p[0]), sorted_to_permutation(*p[1]))
               ? ""
               : names(p);
  });
  s.check_each<const PlanarTree*>("sorted delta_s is standardized deconcatenation",
                                  flat(sorted, m), [](const PlanarTree* t) -> std::string {
    return sigma(coproduct_std(*t)) == mr_coproduct(sorted_to_permutation(*t)) ? ""
                                                                                : render_tree(*t);
  });
  return s.take();
}

LinearCombination phi(const LinearCombination& v) {
  LinearCombination out;
  for (const auto& [k, c] : v) out.add_term(binary_key(planar_to_binary(tree_from_key(k))), c);
  return out;
}

TensorCombination phi(const TensorCombination& v) {
  TensorCombination out;
  for (const auto& [k, c] : v) {
    TensorKey legs;
    for (const auto& leg : k) legs.push_back(binary_key(planar_to_binary(tree_from_key(leg))));
    out.add_term(std::move(legs), c);
  }
  return out;
}

SuiteReport binary_suite(const VerifyOptions& o) {
  SuiteBuilder s("binary", o.exec);
  const auto N = o.maxdeg;
  const auto trees = by_degree(N, enumerate_trees);
  s.check("phi is a bijection", N + 1, [&](std::size_t n) -> std::string {
    std::set<std::string> image;
    for (const auto& t : trees[n]) {
      const auto x = planar_to_binary(t);
      if (binary_to_planar(x) != t) return render_tree(t);
      image.insert(render_binary(x));
    }
    return image.size() == catalan(n) ? "" : "degree " + std::to_string(n);
  });
  s.check_each<const PlanarTree*>("phi respects convex subtrees", flat(trees, N),
                                  [](const PlanarTree* t) -> std::string {
    const auto x = planar_to_binary(*t);
    const long n = static_cast<long>(t->degree());
    for (long i = 1; i <= n; ++i)
      for (long j = i - 1; j <= n; ++j)
        if (planar_to_binary(convex_subtree(*t, i, j)) !=
            binary_convex(x, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j)))
          return render_tree(*t) + " [" + std::to_string(i) + "," + std::to_string(j) + "]";
    return "";
  });
  s.check_each<const PlanarTree*>("phi turns dot factors into under factors", flat(trees, N),
                                  [](const PlanarTree* t) -> std::string {
    const auto factors = irreducible_factors(*t);
    const auto under_factors = under_irreducible_factors(planar_to_binary(*t));
    if (factors.size() != under_factors.size()) return render_tree(*t);
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (planar_to_binary(factors[i]) != under_factors[i]) return render_tree(*t);
    return "";
  });
  s.check_each<const PlanarTree*>("binary coproduct is the transported delta", flat(trees, N),
                                  [](const PlanarTree* t) -> std::string {
    return phi(coproduct(*t)) == binary_coproduct(planar_to_binary(*t)) ? "" : render_tree(*t);
  });
  s.check_each<Tuple>("binary product is the transported hash product", tuples(trees, 2, N),
                      [](const Tuple& p) -> std::string {
    return phi(product(*p[0], *p[1])) ==
                   binary_product(planar_to_binary(*p[0]), planar_to_binary(*p[1]))
               ? ""
               : names(p);
  });
  s.append(loday_ronco_dual_check(std::min<std::size_t>(N, 6)), "loday-ronco ");
  return s.take();
}

// A claim that is false on purpose: addend counts off by one.
SuiteReport broken_suite(const VerifyOptions& o) {
  SuiteBuilder s("broken", o.exec);
  const auto trees = by_degree(std::min<std::size_t>(o.maxdeg, 3), enumerate_trees);
  s.check_each<Tuple>("hash product addends plus one", tuples(trees, 2, 3),
                      [](const Tuple& p) -> std::string {
    const auto sum = product(*p[0], *p[1]).coefficient_sum();
    return sum == binom(p[0]->degree() + p[1]->degree(), p[0]->degree()) + 1 ? "" : names(p);
  });
  return s.take();
}

}  // namespace

CheckLine to_check_line(std::string name, const SweepResult& r) {
  return CheckLine{std::move(name), r.cases, r.failures, r.message};
}

bool SuiteReport::ok() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const CheckLine& l) { return l.failures == 0; });
}

std::string SuiteReport::render() const {
  DualCheckReport r{lines};
  return r.render();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counts",     "partitions",   "addends",
                                              "hopf",       "labelled",     "duality",
                                              "primitives", "permutations", "binary"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "all") {
    SuiteReport all{"all", {}};
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, options);
      for (auto& l : r.lines) {
        l.name = s + ": " + l.name;
        all.lines.push_back(std::move(l));
      }
    }
    return all;
  }
  static const std::map<std::string, SuiteReport (*)(const VerifyOptions&)> suites{
      {"counts", counts_suite},         {"partitions", partitions_suite},
      {"addends", addends_suite},       {"hopf", hopf_suite},
      {"labelled", labelled_suite},     {"duality", duality_suite},
      {"primitives", primitives_suite}, {"permutations", permutations_suite},
      {"binary", binary_suite}};
  if (name == "broken") {
    if (!options.test_mode) throw std::invalid_argument("the broken suite needs test mode");
    return broken_suite(options);
  }
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(options);
}

}  // namespace hopftree
