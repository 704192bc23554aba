#include "hopftree/planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hopftree {

namespace {

constexpr std::string_view kTreePrefix = "tree:";

// Compositions of k into `parts` positive parts, as run boundaries
// 0 = b0 < b1 < ... < b_parts = k.
std::vector<std::vector<std::size_t>> run_boundaries(std::size_t k,
                                                     std::size_t parts) {
  std::vector<std::vector<std::size_t>> out;
  if (parts == 0 || parts > k) return out;
  std::vector<std::size_t> inner(parts - 1);
  std::iota(inner.begin(), inner.end(), std::size_t{1});
  while (true) {
    std::vector<std::size_t> b{0};
    b.insert(b.end(), inner.begin(), inner.end());
    b.push_back(k);
    out.push_back(std::move(b));
    std::size_t r = inner.size();
    while (r > 0 && inner[r - 1] == k - 1 - (inner.size() - r)) --r;
    if (r == 0) break;
    ++inner[r - 1];
    for (auto s = r; s < inner.size(); ++s) inner[s] = inner[s - 1] + 1;
  }
  return out;
}

PlanarTree dot_all(const std::vector<PlanarTree>& factors, std::size_t from,
                   std::size_t to) {
  PlanarTree acc;
  for (auto i = from; i < to; ++i) acc = dot(acc, factors[i]);
  return acc;
}

void check_single_namespace(const std::set<std::string_view>& spaces) {
  if (spaces.size() > 1)
    throw std::invalid_argument("pairing across different basis namespaces");
}

}  // namespace

BasisKey tree_key(const PlanarTree& t) {
  return std::string(kTreePrefix) + render_tree(t);
}

PlanarTree tree_from_key(const BasisKey& key) {
  if (key.compare(0, kTreePrefix.size(), kTreePrefix) != 0)
    throw std::invalid_argument("not a tree key: " + key);
  return parse_tree(std::string_view(key).substr(kTreePrefix.size()));
}

LinearCombination as_combination(const PlanarTree& t) {
  return LinearCombination::basis(tree_key(t));
}

LinearCombination unit_tree() { return as_combination(PlanarTree{}); }

std::vector<OrderPreservingMap> order_preserving_maps(std::size_t k,
                                                      std::size_t nodes) {
  std::vector<OrderPreservingMap> out;
  if (k > nodes) return out;
  std::vector<PlanarTree::NodeId> pick(k);
  std::iota(pick.begin(), pick.end(), PlanarTree::NodeId{1});
  while (true) {
    out.push_back({pick});
    std::size_t r = k;
    while (r > 0 && pick[r - 1] == nodes - (k - r)) --r;
    if (r == 0) break;
    ++pick[r - 1];
    for (auto s = r; s < k; ++s) pick[s] = pick[s - 1] + 1;
  }
  return out;
}

TensorCombination coproduct(const PlanarTree& t) {
  TensorCombination out;
  const long n = static_cast<long>(t.degree());
  for (long k = 0; k <= n; ++k)
    out.add_term({tree_key(convex_subtree(t, 1, k)),
                  tree_key(convex_subtree(t, k + 1, n))},
                 1);
  return out;
}

TensorCombination coproduct(const LinearCombination& v) {
  return extend_linear(
      BasisCoMap([](const BasisKey& k) { return coproduct(tree_from_key(k)); }),
      v);
}

Rational counit(const LinearCombination& v) {
  return v.coefficient(tree_key(PlanarTree{}));
}

LinearCombination dot(const LinearCombination& a, const LinearCombination& b) {
  static const LinearRule rule = extend_bilinear(
      [](const BasisKey& x, const BasisKey& y) {
        return as_combination(dot(tree_from_key(x), tree_from_key(y)));
      });
  return rule(a, b);
}

PlanarTree hash_product(const PlanarTree& t, const PlanarTree& u,
                        const TreePartition& partition,
                        const OrderPreservingMap& f) {
  if (u.degree() == 0) {
    if (!partition.blocks.empty() || !f.targets.empty())
      throw std::invalid_argument("the degree-0 tree has no partitions");
    return t;
  }
  const auto n = u.degree();
  const auto& cuts = partition.cuts;
  if (cuts.size() != partition.blocks.size() + 1 || cuts.front() != 0 ||
      cuts.back() != n)
    throw std::invalid_argument("not a partition of the right factor");
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (cuts[b] >= cuts[b + 1] ||
        partition.blocks[b] != convex_subtree(u, static_cast<long>(cuts[b] + 1),
                                              static_cast<long>(cuts[b + 1])))
      throw std::invalid_argument("not a partition of the right factor");
  }
  if (f.targets.size() != partition.blocks.size())
    throw std::invalid_argument("map size does not match partition");
  for (std::size_t i = 0; i < f.targets.size(); ++i) {
    if (f.targets[i] == 0 || f.targets[i] > t.root() ||
        (i > 0 && f.targets[i - 1] >= f.targets[i]))
      throw std::invalid_argument("map is not order preserving");
  }
  std::vector<Graft> grafts;
  grafts.reserve(f.targets.size());
  for (std::size_t i = 0; i < f.targets.size(); ++i)
    grafts.push_back({f.targets[i], partition.blocks[i]});
  return graft_all(t, grafts, Side::rightmost);
}

LinearCombination product(const PlanarTree& t, const PlanarTree& u) {
  LinearCombination out;
  if (u.degree() == 0) {
    out.add_term(tree_key(t), 1);
    return out;
  }
  const auto nodes = t.degree() + 1;
  for (const auto& p : partitions(u)) {
    for (const auto& f : order_preserving_maps(p.size(), nodes)) {
      std::vector<Graft> grafts;
      for (std::size_t i = 0; i < f.targets.size(); ++i)
        grafts.push_back({f.targets[i], p.blocks[i]});
      out.add_term(tree_key(graft_all(t, grafts, Side::rightmost)), 1);
    }
  }
  return out;
}

LinearCombination product(const LinearCombination& a,
                          const LinearCombination& b) {
  static const LinearRule rule =
      extend_bilinear([](const BasisKey& x, const BasisKey& y) {
        return product(tree_from_key(x), tree_from_key(y));
      });
  return rule(a, b);
}

TensorCombination product(const TensorCombination& x,
                          const TensorCombination& y) {
  return componentwise(
      [](const BasisKey& a, const BasisKey& b) {
        return product(tree_from_key(a), tree_from_key(b));
      },
      x, y);
}

LinearCombination antipode(const LinearCombination& v) {
  std::map<BasisKey, LinearCombination> memo;
  auto basis = [&](auto&& self, const BasisKey& key) -> LinearCombination {
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const PlanarTree t = tree_from_key(key);
    LinearCombination s;
    if (t.degree() == 0) {
      s = LinearCombination::basis(key);
    } else {
      s = -LinearCombination::basis(key);
      const long n = static_cast<long>(t.degree());
      for (long k = 1; k < n; ++k) {
        const auto left = self(self, tree_key(convex_subtree(t, 1, k)));
        s -= product(left, as_combination(convex_subtree(t, k + 1, n)));
      }
    }
    memo.emplace(key, s);
    return s;
  };
  LinearCombination out;
  for (const auto& [k, c] : v) out += basis(basis, k) * c;
  return out;
}

std::vector<PlanarTree::NodeId> leftmost_branch(const PlanarTree& w) {
  std::vector<PlanarTree::NodeId> out;
  if (w.degree() == 0) return {w.root()};
  // Post-order visits the leftmost leaf first.
  for (PlanarTree::NodeId v = 1; v != w.root(); v = w.parent(v)) out.push_back(v);
  out.push_back(w.root());
  return out;
}

LinearCombination dual_product(const PlanarTree& t, const PlanarTree& w) {
  LinearCombination out;
  const auto factors = irreducible_factors(t);
  const auto k = factors.size();
  if (k == 0) {
    out.add_term(tree_key(w), 1);
    return out;
  }
  if (w.degree() > 0 && t.labelled() != w.labelled())
    throw std::invalid_argument("dual product mixes labelling modes");
  // Runs are placed from the root down the branch: the first run lands
  // closest to the root so that t's nodes stay first in post order.
  auto branch = leftmost_branch(w);
  std::reverse(branch.begin(), branch.end());
  for (std::size_t runs = 1; runs <= k; ++runs) {
    for (const auto& bounds : run_boundaries(k, runs)) {
      std::vector<PlanarTree> groups;
      for (std::size_t r = 0; r < runs; ++r)
        groups.push_back(dot_all(factors, bounds[r], bounds[r + 1]));
      for (const auto& f : order_preserving_maps(runs, branch.size())) {
        std::vector<Graft> grafts;
        for (std::size_t r = 0; r < runs; ++r)
          grafts.push_back({branch[f.targets[r] - 1], groups[r]});
        out.add_term(tree_key(graft_all(w, grafts, Side::leftmost)), 1);
      }
    }
  }
  return out;
}

LinearCombination dual_product(const LinearCombination& a,
                               const LinearCombination& b) {
  static const LinearRule rule =
      extend_bilinear([](const BasisKey& x, const BasisKey& y) {
        return dual_product(tree_from_key(x), tree_from_key(y));
      });
  return rule(a, b);
}

TensorCombination dual_coproduct(const PlanarTree& t) {
  const auto factors = irreducible_factors(t);
  TensorCombination out;
  for (std::size_t i = 0; i <= factors.size(); ++i)
    out.add_term({tree_key(dot_all(factors, 0, i)),
                  tree_key(dot_all(factors, i, factors.size()))},
                 1);
  return out;
}

TensorCombination dual_coproduct(const LinearCombination& v) {
  return extend_linear(BasisCoMap([](const BasisKey& k) {
                         return dual_coproduct(tree_from_key(k));
                       }),
                       v);
}

Rational pairing(const LinearCombination& a, const LinearCombination& b) {
  std::set<std::string_view> spaces;
  for (const auto& [k, c] : a) spaces.insert(key_namespace(k));
  for (const auto& [k, c] : b) spaces.insert(key_namespace(k));
  check_single_namespace(spaces);
  Rational s = 0;
  for (const auto& [k, c] : a) s += c * b.coefficient(k);
  return s;
}

Rational pairing(const TensorCombination& a, const TensorCombination& b) {
  std::set<std::string_view> spaces;
  for (const auto& [k, c] : a)
    for (const auto& leg : k) spaces.insert(key_namespace(leg));
  for (const auto& [k, c] : b)
    for (const auto& leg : k) spaces.insert(key_namespace(leg));
  check_single_namespace(spaces);
  Rational s = 0;
  for (const auto& [k, c] : a) s += c * b.coefficient(k);
  return s;
}

}  // namespace hopftree
