#include "hopftree/permutations.hpp"

#include "hopftree/labelled.hpp"
#include "hopftree/planar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hopftree {

namespace {

constexpr std::string_view kWordPrefix = "word:";
constexpr std::string_view kPermPrefix = "perm:";

// Positions of the first and second occurrence of each letter (index by
// letter). Assumes a 2-permutation.
struct Occurrences {
  std::vector<std::size_t> first, second;
};

Occurrences occurrences(const Word& w) {
  const auto n = w.size() / 2;
  Occurrences occ{std::vector<std::size_t>(n + 1, w.size()),
                  std::vector<std::size_t>(n + 1, w.size())};
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto& f = occ.first[w[i]];
    if (f == w.size()) f = i;
    else occ.second[w[i]] = i;
  }
  return occ;
}

void require_two_permutation(const Word& w) {
  if (!is_two_permutation(w))
    throw std::invalid_argument("not a 2-permutation: " + render_word(w));
}

void require_treed(const Word& w) {
  if (!is_treed(w)) throw std::invalid_argument("not a treed permutation: " + render_word(w));
}

// Parses w[from, to) into the children of a node.
void build_forest(const Word& w, const Occurrences& occ, std::size_t from,
                  std::size_t to, std::vector<TreeNode>& out) {
  std::size_t i = from;
  while (i < to) {
    const auto letter = w[i];
    const auto close = occ.second[letter];
    TreeNode node;
    node.label = letter;
    build_forest(w, occ, i + 1, close, node.children);
    out.push_back(std::move(node));
    i = close + 1;
  }
}

void tour(const TreeNode& node, Word& out) {
  out.push_back(*node.label);
  for (const auto& c : node.children) tour(c, out);
  out.push_back(*node.label);
}

std::vector<std::vector<std::size_t>> compositions_as_cuts(std::size_t n,
                                                           std::size_t k) {
  // Cut tuples 0 = c0 < c1 < ... < ck = n, lexicographic.
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || k > n) return out;
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
  return out;
}

Word with_prefix_key(const BasisKey& key, std::string_view prefix) {
  if (key.compare(0, prefix.size(), prefix) != 0)
    throw std::invalid_argument("unexpected key: " + key);
  return parse_word(std::string_view(key).substr(prefix.size()));
}

}  // namespace

Word parse_word(std::string_view text) {
  Word out;
  const bool spaced = text.find_first_of(" \t") != std::string_view::npos;
  if (!spaced) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError("bad letter in word: " + std::string(text));
      out.push_back(static_cast<unsigned>(ch - '0'));
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    unsigned long value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      value = value * 10 + static_cast<unsigned long>(text[j] - '0');
      if (value > 1'000'000) throw ParseError("letter too large in word");
      ++j;
    }
    if (j == i || (j < text.size() && text[j] != ' ' && text[j] != '\t') || value == 0)
      throw ParseError("bad letter in word: " + std::string(text));
    out.push_back(static_cast<unsigned>(value));
    i = j;
  }
  return out;
}

std::string render_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

BasisKey word_key(const Word& w) { return std::string(kWordPrefix) + render_word(w); }
BasisKey perm_key(const Word& w) { return std::string(kPermPrefix) + render_word(w); }

Word word_from_key(const BasisKey& key) {
  if (key.compare(0, kPermPrefix.size(), kPermPrefix) == 0)
    return with_prefix_key(key, kPermPrefix);
  return with_prefix_key(key, kWordPrefix);
}

Word standardize_word(const Word& w) {
  Word letters = w;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  Word out;
  out.reserve(w.size());
  for (auto x : w)
    out.push_back(static_cast<unsigned>(
        std::lower_bound(letters.begin(), letters.end(), x) - letters.begin() + 1));
  return out;
}

Word shift_word(const Word& w, unsigned m) {
  Word out = w;
  for (auto& x : out) x += m;
  return out;
}

bool is_permutation(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (auto x : w) {
    if (x == 0 || x > w.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool is_two_permutation(const Word& w) {
  if (w.size() % 2) return false;
  const auto n = w.size() / 2;
  std::vector<int> count(n + 1, 0);
  for (auto x : w) {
    if (x == 0 || x > n || ++count[x] > 2) return false;
  }
  return true;
}

bool is_treed(const Word& w) {
  if (!is_two_permutation(w)) return false;
  // Non-crossing arcs: a stack of open letters must close in LIFO order.
  std::vector<bool> open(w.size() / 2 + 1, false);
  std::vector<unsigned> stack;
  for (auto x : w) {
    if (!open[x]) {
      open[x] = true;
      stack.push_back(x);
    } else {
      if (stack.empty() || stack.back() != x) return false;
      stack.pop_back();
    }
  }
  return true;
}

bool is_stirling(const Word& w) {
  if (!is_two_permutation(w)) return false;
  const auto occ = occurrences(w);
  for (unsigned k = 1; k < occ.first.size(); ++k)
    for (auto i = occ.first[k] + 1; i < occ.second[k]; ++i)
      if (w[i] < k) return false;
  return true;
}

Word euler_tour(const PlanarTree& t) {
  Word out;
  if (t.degree() == 0) return out;
  if (!t.labelled()) throw std::invalid_argument("euler tour needs a labelled tree");
  for (const auto& c : t.to_node().children) tour(c, out);
  return out;
}

PlanarTree euler_tour_inverse(const Word& w) {
  require_treed(w);
  TreeNode root;
  build_forest(w, occurrences(w), 0, w.size(), root.children);
  return PlanarTree(root);
}

std::vector<unsigned> second_occurrence_order(const Word& w) {
  require_two_permutation(w);
  std::vector<bool> seen(w.size() / 2 + 1, false);
  std::vector<unsigned> out;
  for (auto x : w) {
    if (seen[x]) out.push_back(x);
    seen[x] = true;
  }
  return out;
}

Word restrict_word(const Word& w, const std::vector<unsigned>& letters) {
  const unsigned top = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  std::vector<bool> keep(top + 1, false);
  for (auto x : letters)
    if (x <= top) keep[x] = true;
  Word out;
  for (auto x : w)
    if (keep[x]) out.push_back(x);
  return out;
}

std::vector<WordPartition> word_partitions(const Word& w, std::optional<std::size_t> k) {
  require_treed(w);
  const auto order = second_occurrence_order(w);
  const auto n = order.size();
  std::vector<WordPartition> out;
  std::size_t lo = 1, hi = n;
  if (k) lo = hi = *k;
  for (auto parts = lo; parts <= hi; ++parts) {
    for (auto& cuts : compositions_as_cuts(n, parts)) {
      WordPartition p;
      for (std::size_t b = 0; b + 1 < cuts.size(); ++b)
        p.blocks.push_back(restrict_word(
            w, std::vector<unsigned>(order.begin() + static_cast<long>(cuts[b]),
                                     order.begin() + static_cast<long>(cuts[b + 1]))));
      p.cuts = std::move(cuts);
      out.push_back(std::move(p));
    }
  }
  return out;
}

LinearCombination treed_product(const Word& u, const Word& w) {
  require_treed(u);
  require_treed(w);
  LinearCombination out;
  if (w.empty()) {
    out.add_term(word_key(u), 1);
    return out;
  }
  const auto m = static_cast<unsigned>(u.size() / 2);
  const auto order = second_occurrence_order(u);
  const auto occ = occurrences(u);
  auto parts = word_partitions(w);
  for (auto& p : parts)
    for (auto& blk : p.blocks) blk = shift_word(blk, m);
  for (const auto& p : parts) {
    for (const auto& f : order_preserving_maps(p.blocks.size(), m + 1)) {
      // before[pos] = block to emit right before position pos of u.
      std::vector<long> before(u.size() + 1, -1);
      for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const auto target = f.targets[b];
        const auto pos = target <= m ? occ.second[order[target - 1]] : u.size();
        before[pos] = static_cast<long>(b);
      }
      Word result;
      result.reserve(u.size() + w.size());
      for (std::size_t pos = 0; pos <= u.size(); ++pos) {
        if (before[pos] >= 0) {
          const auto& blk = p.blocks[static_cast<std::size_t>(before[pos])];
          result.insert(result.end(), blk.begin(), blk.end());
        }
        if (pos < u.size()) result.push_back(u[pos]);
      }
      out.add_term(word_key(result), 1);
    }
  }
  return out;
}

LinearCombination treed_product(const LinearCombination& a, const LinearCombination& b) {
  static const LinearRule rule =
      extend_bilinear([](const BasisKey& x, const BasisKey& y) {
        return treed_product(word_from_key(x), word_from_key(y));
      });
  return rule(a, b);
}

TensorCombination treed_product(const TensorCombination& x, const TensorCombination& y) {
  return componentwise(
      [](const BasisKey& a, const BasisKey& b) {
        return treed_product(word_from_key(a), word_from_key(b));
      },
      x, y);
}

TensorCombination treed_coproduct(const Word& u) {
  require_treed(u);
  const auto order = second_occurrence_order(u);
  TensorCombination out;
  for (std::size_t i = 0; i <= order.size(); ++i) {
    const std::vector<unsigned> left(order.begin(), order.begin() + static_cast<long>(i));
    const std::vector<unsigned> right(order.begin() + static_cast<long>(i), order.end());
    out.add_term({word_key(standardize_word(restrict_word(u, left))),
                  word_key(standardize_word(restrict_word(u, right)))},
                 1);
  }
  return out;
}

TensorCombination treed_coproduct(const LinearCombination& v) {
  return extend_linear(BasisCoMap([](const BasisKey& k) {
                         return treed_coproduct(word_from_key(k));
                       }),
                       v);
}

std::vector<Word> enumerate_stirling(std::size_t n) {
  std::vector<Word> level{Word{}};
  for (unsigned size = 1; size <= n; ++size) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        Word v = w;
        v.insert(v.begin() + static_cast<long>(pos), {size, size});
        next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<Word> enumerate_treed(std::size_t n) {
  Word w;
  for (unsigned x = 1; x <= n; ++x) w.insert(w.end(), {x, x});
  std::vector<Word> out;
  do {
    if (is_treed(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Word> enumerate_permutations(std::size_t n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1u);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Word sorted_to_permutation(const PlanarTree& t) {
  if (!is_member(Family::sorted, t))
    throw std::invalid_argument("not a sorted tree: " + render_tree(t));
  return Word(t.labels().begin(), t.labels().end());
}

PlanarTree permutation_to_sorted(const Word& u) {
  if (!is_permutation(u)) throw std::invalid_argument("not a permutation: " + render_word(u));
  if (u.empty()) return PlanarTree{};
  const auto n = static_cast<unsigned>(u.size());
  const auto at = static_cast<std::size_t>(std::find(u.begin(), u.end(), n) - u.begin());
  Word rest = u;
  rest.erase(rest.begin() + static_cast<long>(at));
  const PlanarTree smaller = permutation_to_sorted(rest);
  PlanarTree leaf = PlanarTree(TreeNode{std::nullopt, {TreeNode{n, {}}}});
  PlanarTree::NodeId host = smaller.root();
  if (at + 1 < u.size()) {
    const auto& labels = smaller.labels();
    host = static_cast<PlanarTree::NodeId>(
        std::find(labels.begin(), labels.end(), u[at + 1]) - labels.begin() + 1);
  }
  return graft(smaller, host, leaf, Side::rightmost);
}

LinearCombination mr_product(const Word& u, const Word& v) {
  if (!is_permutation(u) || !is_permutation(v))
    throw std::invalid_argument("mr_product needs permutations");
  const Word shifted = shift_word(v, static_cast<unsigned>(u.size()));
  const auto total = u.size() + v.size();
  // Choose the positions taken by u.
  std::vector<bool> mask(total, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(u.size()), true);
  LinearCombination out;
  do {
    Word w;
    w.reserve(total);
    std::size_t i = 0, j = 0;
    for (bool take_u : mask) w.push_back(take_u ? u[i++] : shifted[j++]);
    out.add_term(perm_key(w), 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

LinearCombination mr_product(const LinearCombination& a, const LinearCombination& b) {
  static const LinearRule rule =
      extend_bilinear([](const BasisKey& x, const BasisKey& y) {
        return mr_product(word_from_key(x), word_from_key(y));
      });
  return rule(a, b);
}

TensorCombination mr_product(const TensorCombination& x, const TensorCombination& y) {
  return componentwise(
      [](const BasisKey& a, const BasisKey& b) {
        return mr_product(word_from_key(a), word_from_key(b));
      },
      x, y);
}

TensorCombination mr_coproduct(const Word& u) {
  if (!is_permutation(u)) throw std::invalid_argument("mr_coproduct needs a permutation");
  TensorCombination out;
  for (std::size_t i = 0; i <= u.size(); ++i)
    out.add_term({perm_key(standardize_word(Word(u.begin(), u.begin() + static_cast<long>(i)))),
                  perm_key(standardize_word(Word(u.begin() + static_cast<long>(i), u.end())))},
                 1);
  return out;
}

TensorCombination mr_coproduct(const LinearCombination& v) {
  return extend_linear(BasisCoMap([](const BasisKey& k) {
                         return mr_coproduct(word_from_key(k));
                       }),
                       v);
}

}  // namespace hopftree
