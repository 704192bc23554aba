#include "hopftree/binary.hpp"

#include "hopftree/planar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopftree {

namespace {

constexpr std::string_view kBinaryPrefix = "bin:";

class BinaryParser {
 public:
  explicit BinaryParser(std::string_view text) : text_(text) {}

  BinaryTree parse() {
    BinaryTree x = tree();
    if (pos_ != text_.size()) fail("trailing characters");
    return x;
  }

 private:
  BinaryTree tree() {
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_[pos_] == '.') {
      ++pos_;
      return BinaryTree{};
    }
    expect('(');
    BinaryTree l = tree();
    expect(',');
    BinaryTree r = tree();
    expect(')');
    return BinaryTree::make(l, r);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("binary tree: " + what + " at offset " + std::to_string(pos_) +
                     " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const BinaryTree& x, BinaryTree::VertexId v, std::string& out) {
  if (v == 0) {
    out += '.';
    return;
  }
  out += '(';
  render_into(x, x.left_child(v), out);
  out += ',';
  render_into(x, x.right_child(v), out);
  out += ')';
}

BinaryTree rebuild(const BinaryTree& x, BinaryTree::VertexId v) {
  if (v == 0) return BinaryTree{};
  return BinaryTree::make(rebuild(x, x.left_child(v)), rebuild(x, x.right_child(v)));
}

BinaryTree restrict_keys(const BinaryTree& x, BinaryTree::VertexId v, std::size_t i,
                         std::size_t j) {
  if (v == 0) return BinaryTree{};
  if (v <= i) return restrict_keys(x, x.right_child(v), i, j);
  if (v > j) return restrict_keys(x, x.left_child(v), i, j);
  return BinaryTree::make(restrict_keys(x, x.left_child(v), i, j),
                          restrict_keys(x, x.right_child(v), i, j));
}

BinaryTree substitute_from(const BinaryTree& x, BinaryTree::VertexId v,
                           const std::vector<const BinaryTree*>& at, std::size_t& leaf) {
  if (v == 0) {
    const auto* sub = leaf < at.size() ? at[leaf] : nullptr;
    ++leaf;
    return sub ? *sub : BinaryTree{};
  }
  BinaryTree l = substitute_from(x, x.left_child(v), at, leaf);
  BinaryTree r = substitute_from(x, x.right_child(v), at, leaf);
  return BinaryTree::make(l, r);
}

BinaryTree phi_forest(const std::vector<TreeNode>& children) {
  BinaryTree acc;
  for (auto it = children.rbegin(); it != children.rend(); ++it)
    acc = BinaryTree::make(phi_forest(it->children), acc);
  return acc;
}

std::vector<TreeNode> forest_of(BinaryTree x) {
  std::vector<TreeNode> out;
  while (!x.is_leaf()) {
    out.push_back(TreeNode{std::nullopt, forest_of(x.left())});
    x = x.right();
  }
  return out;
}

std::vector<std::vector<std::size_t>> cut_sequences(std::size_t n) {
  // All 0 = c0 < c1 < ... < ck = n, k >= 1, via subsets of 1..n-1.
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> inner(k - 1);
    std::iota(inner.begin(), inner.end(), std::size_t{1});
    while (true) {
      std::vector<std::size_t> cuts{0};
      cuts.insert(cuts.end(), inner.begin(), inner.end());
      cuts.push_back(n);
      out.push_back(std::move(cuts));
      std::size_t r = inner.size();
      while (r > 0 && inner[r - 1] == n - 1 - (inner.size() - r)) --r;
      if (r == 0) break;
      ++inner[r - 1];
      for (auto s = r; s < inner.size(); ++s) inner[s] = inner[s - 1] + 1;
    }
  }
  return out;
}

LinearCombination to_binary_basis(const LinearCombination& v) {
  LinearCombination out;
  for (const auto& [k, c] : v) out.add_term(binary_key(planar_to_binary(tree_from_key(k))), c);
  return out;
}

}  // namespace

BinaryTree BinaryTree::make(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree x;
  const auto a = left.degree();
  const auto shift = a + 1;
  x.left_ = left.left_;
  x.right_ = left.right_;
  x.left_.push_back(left.root_);
  x.right_.push_back(right.root_ == 0 ? 0 : right.root_ + shift);
  for (std::size_t v = 0; v < right.degree(); ++v) {
    x.left_.push_back(right.left_[v] == 0 ? 0 : right.left_[v] + shift);
    x.right_.push_back(right.right_[v] == 0 ? 0 : right.right_[v] + shift);
  }
  x.root_ = shift;
  return x;
}

BinaryTree BinaryTree::subtree(VertexId v) const { return rebuild(*this, v); }

BinaryTree BinaryTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no left subtree");
  return subtree(left_child(root_));
}

BinaryTree BinaryTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no right subtree");
  return subtree(right_child(root_));
}

BinaryTree parse_binary(std::string_view text) { return BinaryParser(text).parse(); }

std::string render_binary(const BinaryTree& x) {
  std::string out;
  render_into(x, x.root(), out);
  return out;
}

BasisKey binary_key(const BinaryTree& x) {
  return std::string(kBinaryPrefix) + render_binary(x);
}

BinaryTree binary_from_key(const BasisKey& key) {
  if (key.compare(0, kBinaryPrefix.size(), kBinaryPrefix) != 0)
    throw std::invalid_argument("not a binary tree key: " + key);
  return parse_binary(std::string_view(key).substr(kBinaryPrefix.size()));
}

BinaryTree over(const BinaryTree& x, const BinaryTree& y) {
  if (y.is_leaf()) return x;
  return BinaryTree::make(over(x, y.left()), y.right());
}

BinaryTree under(const BinaryTree& x, const BinaryTree& y) {
  if (x.is_leaf()) return y;
  return BinaryTree::make(x.left(), under(x.right(), y));
}

std::vector<BinaryTree> under_irreducible_factors(const BinaryTree& x) {
  std::vector<BinaryTree> out;
  for (BinaryTree rest = x; !rest.is_leaf(); rest = rest.right())
    out.push_back(BinaryTree::make(rest.left(), BinaryTree{}));
  return out;
}

BinaryTree planar_to_binary(const PlanarTree& t) {
  if (t.labelled()) throw std::invalid_argument("phi is defined on unlabelled trees");
  return phi_forest(t.to_node().children);
}

PlanarTree binary_to_planar(const BinaryTree& x) {
  return PlanarTree(TreeNode{std::nullopt, forest_of(x)});
}

BinaryTree binary_convex(const BinaryTree& x, std::size_t i, std::size_t j) {
  if (i > j || j > x.degree())
    throw std::out_of_range("binary convex interval out of range");
  return restrict_keys(x, x.root(), i, j);
}

TensorCombination binary_coproduct(const BinaryTree& x) {
  TensorCombination out;
  const auto n = x.degree();
  for (std::size_t i = 0; i <= n; ++i)
    out.add_term({binary_key(binary_convex(x, 0, i)), binary_key(binary_convex(x, i, n))}, 1);
  return out;
}

TensorCombination binary_coproduct(const LinearCombination& v) {
  return extend_linear(BasisCoMap([](const BasisKey& k) {
                         return binary_coproduct(binary_from_key(k));
                       }),
                       v);
}

BinaryTree substitute_leaves(const BinaryTree& x, const std::vector<const BinaryTree*>& at) {
  std::size_t leaf = 0;
  return substitute_from(x, x.root(), at, leaf);
}

LinearCombination binary_product(const BinaryTree& x, const BinaryTree& y) {
  LinearCombination out;
  if (y.is_leaf()) {
    out.add_term(binary_key(x), 1);
    return out;
  }
  const auto leaves = x.degree() + 1;
  for (const auto& cuts : cut_sequences(y.degree())) {
    const auto k = cuts.size() - 1;
    std::vector<BinaryTree> blocks;
    for (std::size_t b = 0; b < k; ++b) blocks.push_back(binary_convex(y, cuts[b], cuts[b + 1]));
    for (const auto& f : order_preserving_maps(k, leaves)) {
      std::vector<const BinaryTree*> at(leaves, nullptr);
      for (std::size_t b = 0; b < k; ++b) at[f.targets[b] - 1] = &blocks[b];
      out.add_term(binary_key(substitute_leaves(x, at)), 1);
    }
  }
  return out;
}

LinearCombination binary_product(const LinearCombination& a, const LinearCombination& b) {
  static const LinearRule rule =
      extend_bilinear([](const BasisKey& x, const BasisKey& y) {
        return binary_product(binary_from_key(x), binary_from_key(y));
      });
  return rule(a, b);
}

TensorCombination binary_product(const TensorCombination& x, const TensorCombination& y) {
  return componentwise(
      [](const BasisKey& a, const BasisKey& b) {
        return binary_product(binary_from_key(a), binary_from_key(b));
      },
      x, y);
}

LinearCombination binary_product_op(const BinaryTree& x, const BinaryTree& y) {
  return binary_product(y, x);
}

LinearCombination binary_product_op(const LinearCombination& a, const LinearCombination& b) {
  return binary_product(b, a);
}

TensorCombination binary_product_op(const TensorCombination& x, const TensorCombination& y) {
  return binary_product(y, x);
}

std::vector<BinaryTree> enumerate_binary(std::size_t n) {
  std::vector<std::vector<BinaryTree>> by_size{{BinaryTree{}}};
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<BinaryTree> level;
    for (std::size_t a = 0; a < size; ++a)
      for (const auto& l : by_size[a])
        for (const auto& r : by_size[size - 1 - a]) level.push_back(BinaryTree::make(l, r));
    by_size.push_back(std::move(level));
  }
  auto out = by_size[n];
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < out.size(); ++i) order.emplace_back(render_binary(out[i]), i);
  std::sort(order.begin(), order.end());
  std::vector<BinaryTree> sorted;
  sorted.reserve(out.size());
  for (const auto& [s, i] : order) sorted.push_back(out[i]);
  return sorted;
}

bool DualCheckReport::ok() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const CheckLine& l) { return l.failures == 0; });
}

std::string DualCheckReport::render() const {
  std::ostringstream out;
  for (const auto& l : lines) {
    out << (l.failures == 0 ? "PASS " : "FAIL ") << l.name << " (" << l.cases << " cases";
    if (l.failures) out << ", " << l.failures << " failed; first: " << l.first_failure;
    out << ")\n";
  }
  return out.str();
}

DualCheckReport loday_ronco_dual_check(std::size_t maxdeg) {
  if (maxdeg > 6) throw std::invalid_argument("loday_ronco_dual_check supports maxdeg <= 6");
  DualCheckReport report;
  std::vector<std::vector<BinaryTree>> trees;
  for (std::size_t n = 0; n <= maxdeg; ++n) trees.push_back(enumerate_binary(n));
  auto basis = [](const BinaryTree& x) { return LinearCombination::basis(binary_key(x)); };
  const auto unit = basis(BinaryTree{});

  auto run = [&](std::string name, auto&& body) {
    CheckLine line{std::move(name), 0, 0, {}};
    body([&](bool ok, const std::string& what) {
      ++line.cases;
      if (!ok && line.failures++ == 0) line.first_failure = what;
    });
    report.lines.push_back(std::move(line));
  };

  run("dimensions", [&](auto&& check) {
    for (std::size_t n = 0; n <= maxdeg; ++n)
      check(trees[n].size() == catalan(n) && enumerate_trees(n).size() == catalan(n),
            "degree " + std::to_string(n));
  });

  run("opposite product associative", [&](auto&& check) {
    for (std::size_t a = 0; a <= maxdeg; ++a)
      for (std::size_t b = 0; a + b <= maxdeg; ++b)
        for (std::size_t c = 0; a + b + c <= maxdeg; ++c)
          for (const auto& x : trees[a])
            for (const auto& y : trees[b])
              for (const auto& z : trees[c]) {
                const auto X = basis(x), Y = basis(y), Z = basis(z);
                check(binary_product_op(binary_product_op(X, Y), Z) ==
                          binary_product_op(X, binary_product_op(Y, Z)),
                      render_binary(x) + " " + render_binary(y) + " " + render_binary(z));
              }
  });

  run("coproduct coassociative", [&](auto&& check) {
    const BasisCoMap delta = [](const BasisKey& k) {
      return binary_coproduct(binary_from_key(k));
    };
    for (std::size_t n = 0; n <= maxdeg; ++n)
      for (const auto& x : trees[n]) {
        const auto d = binary_coproduct(x);
        check(apply_to_leg(d, 0, delta) == apply_to_leg(d, 1, delta), render_binary(x));
      }
  });

  run("counit", [&](auto&& check) {
    for (std::size_t n = 0; n <= maxdeg; ++n)
      for (const auto& x : trees[n]) {
        LinearCombination left, right;
        for (const auto& [k, c] : binary_coproduct(x)) {
          if (k[0] == binary_key(BinaryTree{})) left.add_term(k[1], c);
          if (k[1] == binary_key(BinaryTree{})) right.add_term(k[0], c);
        }
        check(left == basis(x) && right == basis(x), render_binary(x));
      }
  });

  run("compatibility", [&](auto&& check) {
    for (std::size_t a = 0; a <= maxdeg; ++a)
      for (std::size_t b = 0; a + b <= maxdeg; ++b)
        for (const auto& x : trees[a])
          for (const auto& y : trees[b]) {
            const auto lhs = binary_coproduct(binary_product_op(basis(x), basis(y)));
            const auto rhs = binary_product_op(binary_coproduct(x), binary_coproduct(y));
            check(lhs == rhs, render_binary(x) + " " + render_binary(y));
          }
  });

  run("unit", [&](auto&& check) {
    for (std::size_t n = 0; n <= maxdeg; ++n)
      for (const auto& x : trees[n])
        check(binary_product_op(unit, basis(x)) == basis(x) &&
                  binary_product_op(basis(x), unit) == basis(x),
              render_binary(x));
  });

  run("duality with transported dual product", [&](auto&& check) {
    for (std::size_t a = 0; a <= maxdeg; ++a)
      for (std::size_t b = 0; a + b <= maxdeg; ++b)
        for (const auto& s : enumerate_trees(a))
          for (const auto& w : enumerate_trees(b)) {
            const auto prod = to_binary_basis(dual_product(s, w));
            const auto legs = tensor_of(basis(planar_to_binary(s)), basis(planar_to_binary(w)));
            bool ok = true;
            for (const auto& x : trees[a + b])
              if (pairing(prod, basis(x)) != pairing(legs, binary_coproduct(x))) ok = false;
            check(ok, render_tree(s) + " " + render_tree(w));
          }
  });

  return report;
}

}  // namespace hopftree
