#include "hopftree/labelled.hpp"

#include "hopftree/planar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopftree {

namespace {

// Inserts a leaf labelled `label` at child slot `slot` of `node` (slot 0 is
// before the first child).
void insert_leaf(TreeNode& node, std::size_t slot, Label label) {
  TreeNode leaf;
  leaf.label = label;
  node.children.insert(node.children.begin() + static_cast<long>(slot), leaf);
}

void collect_slots(TreeNode& node, std::vector<std::pair<TreeNode*, std::size_t>>& out) {
  for (std::size_t s = 0; s <= node.children.size(); ++s) out.emplace_back(&node, s);
  for (auto& c : node.children) collect_slots(c, out);
}

void collect_nodes(TreeNode& node, std::vector<TreeNode*>& out) {
  out.push_back(&node);
  for (auto& c : node.children) collect_nodes(c, out);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::ntree: return "ntree";
    case Family::increasing: return "increasing";
    case Family::sorted: return "sorted";
  }
  return "ntree";
}

Family parse_family(std::string_view name) {
  if (name == "ntree") return Family::ntree;
  if (name == "increasing") return Family::increasing;
  if (name == "sorted") return Family::sorted;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

PlanarTree standardize(const PlanarTree& t) {
  if (t.degree() == 0) return t;
  if (!t.labelled()) throw std::invalid_argument("cannot standardize an unlabelled tree");
  std::vector<Label> sorted = t.labels();
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cannot standardize a tree with repeated labels");
  std::vector<Label> ranks;
  ranks.reserve(t.degree());
  for (auto l : t.labels())
    ranks.push_back(static_cast<Label>(
        std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin() + 1));
  return t.with_labels(std::move(ranks));
}

PlanarTree shift(const PlanarTree& t, Label m) {
  if (t.degree() == 0 || m == 0) return t;
  if (!t.labelled()) throw std::invalid_argument("cannot shift an unlabelled tree");
  std::vector<Label> labels = t.labels();
  for (auto& l : labels) l += m;
  return t.with_labels(std::move(labels));
}

bool is_ntree(const PlanarTree& t) {
  if (t.degree() == 0) return true;
  if (!t.labelled()) return false;
  std::vector<Label> sorted = t.labels();
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i + 1) return false;
  return true;
}

bool is_member(Family family, const PlanarTree& t) {
  if (!is_ntree(t)) return false;
  if (family == Family::ntree || t.degree() == 0) return true;
  for (PlanarTree::NodeId v = 1; v <= t.degree(); ++v) {
    const auto p = t.parent(v);
    if (p != t.root() && t.label(p) >= t.label(v)) return false;
  }
  if (family == Family::increasing) return true;
  for (PlanarTree::NodeId v = 1; v <= t.root(); ++v) {
    const auto kids = t.children(v);
    for (std::size_t i = 1; i < kids.size(); ++i)
      if (t.label(kids[i - 1]) >= t.label(kids[i])) return false;
  }
  return true;
}

TensorCombination coproduct_std(const PlanarTree& t) {
  if (!is_ntree(t)) throw std::invalid_argument("coproduct_std needs an n-tree");
  TensorCombination out;
  const long n = static_cast<long>(t.degree());
  for (long k = 0; k <= n; ++k)
    out.add_term({tree_key(standardize(convex_subtree(t, 1, k))),
                  tree_key(standardize(convex_subtree(t, k + 1, n)))},
                 1);
  return out;
}

TensorCombination coproduct_std(const LinearCombination& v) {
  return extend_linear(BasisCoMap([](const BasisKey& k) {
                         return coproduct_std(tree_from_key(k));
                       }),
                       v);
}

PlanarTree slash_product(const PlanarTree& t, const PlanarTree& w) {
  return dot(t, shift(w, static_cast<Label>(t.degree())));
}

LinearCombination slash_product(const LinearCombination& a,
                                const LinearCombination& b) {
  static const LinearRule rule =
      extend_bilinear([](const BasisKey& x, const BasisKey& y) {
        return as_combination(slash_product(tree_from_key(x), tree_from_key(y)));
      });
  return rule(a, b);
}

LinearCombination star_product(const PlanarTree& t, const PlanarTree& w) {
  return product(t, shift(w, static_cast<Label>(t.degree())));
}

LinearCombination star_product(const LinearCombination& a,
                               const LinearCombination& b) {
  static const LinearRule rule =
      extend_bilinear([](const BasisKey& x, const BasisKey& y) {
        return star_product(tree_from_key(x), tree_from_key(y));
      });
  return rule(a, b);
}

TensorCombination star_product(const TensorCombination& x,
                               const TensorCombination& y) {
  return componentwise(
      [](const BasisKey& a, const BasisKey& b) {
        return star_product(tree_from_key(a), tree_from_key(b));
      },
      x, y);
}

std::vector<PlanarTree> slash_irreducible_factors(const PlanarTree& t) {
  if (!is_ntree(t)) throw std::invalid_argument("slash factors need an n-tree");
  std::vector<PlanarTree> out;
  const auto dots = irreducible_factors(t);
  // A prefix of dot factors splits off exactly when its labels are 1..size.
  std::size_t seen_nodes = 0;
  Label max_label = 0;
  PlanarTree group;
  for (const auto& f : dots) {
    group = dot(group, f);
    seen_nodes += f.degree();
    for (auto l : f.labels()) max_label = std::max(max_label, l);
    if (max_label == seen_nodes) {
      out.push_back(standardize(group));
      group = PlanarTree{};
    }
  }
  return out;
}

bool is_slash_irreducible(const PlanarTree& t) {
  return t.degree() > 0 && slash_irreducible_factors(t).size() == 1;
}

std::vector<PlanarTree> enumerate_family(Family family, std::size_t n) {
  std::vector<PlanarTree> out;
  if (family == Family::ntree) {
    if (n == 0) return {PlanarTree{}};
    for (const auto& shape : enumerate_trees(n)) {
      std::vector<Label> labels(n);
      std::iota(labels.begin(), labels.end(), Label{1});
      do {
        out.push_back(shape.with_labels(labels));
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
    sort_canonical(out);
    return out;
  }
  std::vector<TreeNode> level{TreeNode{}};
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<TreeNode> next;
    const auto label = static_cast<Label>(size);
    for (const auto& base : level) {
      TreeNode probe = base;
      std::vector<std::pair<TreeNode*, std::size_t>> probe_slots;
      std::vector<TreeNode*> probe_nodes;
      if (family == Family::increasing)
        collect_slots(probe, probe_slots);
      else
        collect_nodes(probe, probe_nodes);
      const auto choices = family == Family::increasing ? probe_slots.size()
                                                        : probe_nodes.size();
      for (std::size_t i = 0; i < choices; ++i) {
        TreeNode copy = base;
        if (family == Family::increasing) {
          std::vector<std::pair<TreeNode*, std::size_t>> slots;
          collect_slots(copy, slots);
          insert_leaf(*slots[i].first, slots[i].second, label);
        } else {
          std::vector<TreeNode*> nodes;
          collect_nodes(copy, nodes);
          insert_leaf(*nodes[i], nodes[i]->children.size(), label);
        }
        next.push_back(std::move(copy));
      }
    }
    level = std::move(next);
  }
  out.reserve(level.size());
  for (const auto& node : level) out.emplace_back(node);
  sort_canonical(out);
  return out;
}

std::vector<PlanarTree> enumerate_family_by_filter(Family family,
                                                   std::size_t n) {
  std::vector<PlanarTree> out;
  for (auto& t : enumerate_family(Family::ntree, n))
    if (is_member(family, t)) out.push_back(std::move(t));
  return out;
}

}  // namespace hopftree
