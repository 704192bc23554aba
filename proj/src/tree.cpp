#include "hopftree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace hopftree {

namespace {

struct Flattener {
  std::vector<PlanarTree::NodeId> parent;
  std::vector<Label> labels;
  bool any_label = false;
  bool any_unlabelled = false;

  // Returns the post-order id given to `node`.
  PlanarTree::NodeId visit(const TreeNode& node, bool is_root) {
    std::vector<PlanarTree::NodeId> kids;
    kids.reserve(node.children.size());
    for (const auto& c : node.children) kids.push_back(visit(c, false));
    if (is_root) {
      const auto id = parent.size() + 1;
      for (auto k : kids) parent[k - 1] = id;
      return id;
    }
    parent.push_back(0);
    const auto id = parent.size();
    for (auto k : kids) parent[k - 1] = id;
    if (node.label) {
      any_label = true;
      labels.push_back(*node.label);
    } else {
      any_unlabelled = true;
      labels.push_back(0);
    }
    return id;
  }
};

std::vector<std::vector<PlanarTree::NodeId>> child_table(const PlanarTree& t) {
  std::vector<std::vector<PlanarTree::NodeId>> kids(t.degree() + 2);
  for (PlanarTree::NodeId v = 1; v <= t.degree(); ++v)
    kids[t.parent(v)].push_back(v);
  return kids;
}

void render_into(const PlanarTree& t,
                 const std::vector<std::vector<PlanarTree::NodeId>>& kids,
                 PlanarTree::NodeId v, std::string& out) {
  out.push_back('(');
  const bool is_root = v == t.root();
  if (!is_root && t.labelled()) {
    out += std::to_string(t.label(v));
    if (!kids[v].empty()) out.push_back(' ');
  }
  for (auto c : kids[v]) render_into(t, kids, c, out);
  out.push_back(')');
}

TreeNode build_node(const PlanarTree& t,
                    const std::vector<std::vector<PlanarTree::NodeId>>& kids,
                    PlanarTree::NodeId v) {
  TreeNode node;
  if (v != t.root() && t.labelled()) node.label = t.label(v);
  node.children.reserve(kids[v].size());
  for (auto c : kids[v]) node.children.push_back(build_node(t, kids, c));
  return node;
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PlanarTree run() {
    TreeNode root = parse_node(true);
    if (pos_ != text_.size()) fail("trailing characters");
    if (seen_label_ && seen_plain_) fail("label in unlabelled context");
    return PlanarTree(root);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("tree: " + why + " at offset " + std::to_string(pos_) +
                     " in \"" + std::string(text_) + "\"");
  }

  TreeNode parse_node(bool is_root) {
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    TreeNode node;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (is_root) fail("the root cannot carry a label");
      unsigned long long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (value > 0xffffffffULL) fail("label out of range");
        ++pos_;
      }
      node.label = static_cast<Label>(value);
      seen_label_ = true;
      if (pos_ < text_.size() && text_[pos_] == ' ') {
        ++pos_;
        if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected a child after the label");
      }
    } else if (!is_root) {
      seen_plain_ = true;
    }
    while (pos_ < text_.size() && text_[pos_] == '(')
      node.children.push_back(parse_node(false));
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool seen_label_ = false;
  bool seen_plain_ = false;
};

}  // namespace

PlanarTree::PlanarTree(const TreeNode& root) {
  Flattener f;
  f.visit(root, true);
  if (f.any_label && f.any_unlabelled)
    throw std::invalid_argument("tree mixes labelled and unlabelled nodes");
  parent_ = std::move(f.parent);
  if (f.any_label) labels_ = std::move(f.labels);
}

PlanarTree PlanarTree::from_parents(std::vector<NodeId> parent,
                                    std::vector<Label> labels) {
  const auto n = parent.size();
  if (!labels.empty() && labels.size() != n)
    throw std::invalid_argument("label count does not match degree");
  // Children of each node must tile the id interval right below it.
  std::vector<std::size_t> size(n + 2, 1);
  std::vector<std::vector<NodeId>> kids(n + 2);
  for (NodeId v = 1; v <= n; ++v) {
    const auto p = parent[v - 1];
    if (p <= v || p > n + 1)
      throw std::invalid_argument("parent table is not in post order");
    size[p] += size[v];
    kids[p].push_back(v);
  }
  for (NodeId p = 1; p <= n + 1; ++p) {
    auto next = p + 1 - size[p];
    for (auto c : kids[p]) {
      if (c + 1 - size[c] != next)
        throw std::invalid_argument("parent table is not in post order");
      next = c + 1;
    }
    if (next != p)
      throw std::invalid_argument("parent table is not in post order");
  }
  PlanarTree t;
  t.parent_ = std::move(parent);
  t.labels_ = std::move(labels);
  return t;
}

PlanarTree::NodeId PlanarTree::parent(NodeId node) const {
  if (node == 0 || node > parent_.size())
    throw std::out_of_range("node has no parent");
  return parent_[node - 1];
}

Label PlanarTree::label(NodeId node) const {
  if (!labelled()) throw std::logic_error("tree is unlabelled");
  if (node == 0 || node > labels_.size())
    throw std::out_of_range("node carries no label");
  return labels_[node - 1];
}

std::vector<PlanarTree::NodeId> PlanarTree::children(NodeId node) const {
  if (node == 0 || node > root()) throw std::out_of_range("node not in tree");
  std::vector<NodeId> out;
  for (NodeId v = 1; v <= degree(); ++v)
    if (parent_[v - 1] == node) out.push_back(v);
  return out;
}

std::size_t PlanarTree::subtree_size(NodeId node) const {
  if (node == 0 || node > root()) throw std::out_of_range("node not in tree");
  std::size_t size = 1;
  // Descendants form the interval immediately below the node.
  for (NodeId v = node - 1; v >= 1; --v) {
    NodeId a = v;
    while (a < node) a = parent_[a - 1];
    if (a != node) break;
    ++size;
  }
  return size;
}

TreeNode PlanarTree::to_node() const {
  return build_node(*this, child_table(*this), root());
}

PlanarTree PlanarTree::with_labels(std::vector<Label> labels) const {
  if (!labels.empty() && labels.size() != degree())
    throw std::invalid_argument("label count does not match degree");
  PlanarTree t = *this;
  t.labels_ = std::move(labels);
  return t;
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (a == b) return std::strong_ordering::equal;
  return render_tree(a).compare(render_tree(b)) < 0
             ? std::strong_ordering::less
             : std::strong_ordering::greater;
}

PlanarTree parse_tree(std::string_view text) { return TreeParser(text).run(); }

std::string render_tree(const PlanarTree& t) {
  std::string out;
  out.reserve(2 * t.degree() + 2);
  render_into(t, child_table(t), t.root(), out);
  return out;
}

std::vector<PlanarTree::NodeId> postorder_nodes(const PlanarTree& t) {
  std::vector<PlanarTree::NodeId> out(t.degree());
  std::iota(out.begin(), out.end(), PlanarTree::NodeId{1});
  return out;
}

PlanarTree convex_subtree(const PlanarTree& t, long i, long j) {
  const long n = static_cast<long>(t.degree());
  const long lo = std::max(i, 1L);
  const long hi = std::min(j, n);
  if (i > j || lo > hi) return PlanarTree{};
  const auto h = static_cast<std::size_t>(lo);
  const auto k = static_cast<std::size_t>(hi);
  const auto new_root = k - h + 2;
  std::vector<PlanarTree::NodeId> parent;
  std::vector<Label> labels;
  parent.reserve(k - h + 1);
  for (auto v = h; v <= k; ++v) {
    // Ancestors have larger ids, so the nearest kept ancestor is the parent
    // itself when it lies in range, otherwise the root.
    const auto p = t.parent(v);
    parent.push_back(p <= k ? p - h + 1 : new_root);
    if (t.labelled()) labels.push_back(t.label(v));
  }
  return PlanarTree::from_parents(std::move(parent), std::move(labels));
}

std::vector<TreePartition> partitions(const PlanarTree& t,
                                      std::optional<std::size_t> k) {
  const auto n = t.degree();
  std::vector<TreePartition> out;
  if (n == 0) return out;
  if (k && (*k == 0 || *k > n)) return out;
  const std::size_t k_lo = k ? *k : 1;
  const std::size_t k_hi = k ? *k : n;
  for (auto blocks = k_lo; blocks <= k_hi; ++blocks) {
    // Inner cuts: lexicographic (blocks-1)-subsets of {1..n-1}.
    std::vector<std::size_t> inner(blocks - 1);
    std::iota(inner.begin(), inner.end(), std::size_t{1});
    while (true) {
      TreePartition p;
      p.cuts.push_back(0);
      p.cuts.insert(p.cuts.end(), inner.begin(), inner.end());
      p.cuts.push_back(n);
      for (std::size_t b = 0; b + 1 < p.cuts.size(); ++b)
        p.blocks.push_back(convex_subtree(t, static_cast<long>(p.cuts[b] + 1),
                                          static_cast<long>(p.cuts[b + 1])));
      out.push_back(std::move(p));
      // Next combination.
      std::size_t r = inner.size();
      while (r > 0 && inner[r - 1] == n - 1 - (inner.size() - r)) --r;
      if (r == 0) break;
      ++inner[r - 1];
      for (auto s = r; s < inner.size(); ++s) inner[s] = inner[s - 1] + 1;
    }
  }
  return out;
}

PlanarTree dot(const PlanarTree& t, const PlanarTree& w) {
  if (t.degree() == 0) return w;
  if (w.degree() == 0) return t;
  if (t.labelled() != w.labelled())
    throw std::invalid_argument("dot of labelled and unlabelled trees");
  const auto m = t.degree();
  const auto n = w.degree();
  std::vector<PlanarTree::NodeId> parent;
  parent.reserve(m + n);
  for (auto v = 1u; v <= m; ++v) {
    const auto p = t.parent(v);
    parent.push_back(p == t.root() ? m + n + 1 : p);
  }
  for (auto v = 1u; v <= n; ++v) parent.push_back(w.parent(v) + m);
  std::vector<Label> labels = t.labels();
  labels.insert(labels.end(), w.labels().begin(), w.labels().end());
  return PlanarTree::from_parents(std::move(parent), std::move(labels));
}

std::vector<PlanarTree> irreducible_factors(const PlanarTree& t) {
  std::vector<PlanarTree> out;
  std::size_t start = 1;
  for (auto c : t.children(t.root())) {
    out.push_back(convex_subtree(t, static_cast<long>(start),
                                 static_cast<long>(c)));
    start = c + 1;
  }
  return out;
}

bool is_irreducible(const PlanarTree& t) {
  return t.degree() > 0 && t.children(t.root()).size() == 1;
}

std::vector<PlanarTree> enumerate_trees(std::size_t n) {
  // forests[s] = canonical strings of ordered forests with s nodes.
  std::vector<std::vector<std::string>> forests(n + 1);
  forests[0] = {""};
  for (std::size_t s = 1; s <= n; ++s)
    for (std::size_t first = 1; first <= s; ++first)
      for (const auto& inner : forests[first - 1])
        for (const auto& rest : forests[s - first])
          forests[s].push_back("(" + inner + ")" + rest);
  std::vector<std::string> strings;
  strings.reserve(forests[n].size());
  for (const auto& f : forests[n]) strings.push_back("(" + f + ")");
  std::sort(strings.begin(), strings.end());
  std::vector<PlanarTree> out;
  out.reserve(strings.size());
  for (const auto& s : strings) out.push_back(parse_tree(s));
  return out;
}

std::vector<PlanarTree> enumerate_labelled_trees(std::size_t n,
                                                 Label alphabet) {
  if (n == 0) return {PlanarTree{}};
  std::vector<PlanarTree> out;
  for (const auto& shape : enumerate_trees(n)) {
    std::vector<Label> labels(n, 1);
    while (true) {
      out.push_back(shape.with_labels(labels));
      std::size_t i = 0;
      while (i < n && labels[i] == alphabet) labels[i++] = 1;
      if (i == n) break;
      ++labels[i];
    }
  }
  sort_canonical(out);
  return out;
}

PlanarTree graft_all(const PlanarTree& host, const std::vector<Graft>& grafts,
                     Side side) {
  std::map<PlanarTree::NodeId, const PlanarTree*> at;
  const bool labelled = host.labelled();
  for (const auto& g : grafts) {
    if (g.node == 0 || g.node > host.root())
      throw std::out_of_range("graft target is not a node of the host");
    if (!at.emplace(g.node, &g.sub).second)
      throw std::invalid_argument("two grafts at the same node");
    if (g.sub.degree() > 0 && host.degree() > 0 &&
        g.sub.labelled() != labelled)
      throw std::invalid_argument("graft mixes labelling modes");
  }
  const auto kids = child_table(host);
  // Rebuild nested form with the forests inserted.
  auto build = [&](auto&& self, PlanarTree::NodeId v) -> TreeNode {
    TreeNode node;
    if (v != host.root() && host.labelled()) node.label = host.label(v);
    for (auto c : kids[v]) node.children.push_back(self(self, c));
    if (auto it = at.find(v); it != at.end() && it->second->degree() > 0) {
      auto forest = it->second->to_node().children;
      if (side == Side::rightmost)
        node.children.insert(node.children.end(), forest.begin(), forest.end());
      else
        node.children.insert(node.children.begin(), forest.begin(), forest.end());
    }
    return node;
  };
  return PlanarTree(build(build, host.root()));
}

PlanarTree graft(const PlanarTree& host, PlanarTree::NodeId node,
                 const PlanarTree& sub, Side side) {
  return graft_all(host, {Graft{node, sub}}, side);
}

PlanarTree attach_below(const PlanarTree& t, std::optional<Label> label) {
  TreeNode child = t.to_node();
  child.label = label;
  TreeNode root;
  root.children.push_back(std::move(child));
  return PlanarTree(root);
}

void sort_canonical(std::vector<PlanarTree>& trees) {
  std::vector<std::pair<std::string, PlanarTree>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) keyed.emplace_back(render_tree(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < trees.size(); ++i) trees[i] = std::move(keyed[i].second);
}

std::size_t catalan(std::size_t n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[n];
}

}  // namespace hopftree
