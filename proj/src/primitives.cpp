#include "hopftree/primitives.hpp"

#include "hopftree/labelled.hpp"
#include "hopftree/planar.hpp"

#include <sstream>
#include <stdexcept>

namespace hopftree {

namespace {

TensorCombination full_coproduct(const BasisKey& key, MultMode mode) {
  const PlanarTree t = tree_from_key(key);
  return mode == MultMode::dot ? coproduct(t) : coproduct_std(t);
}

void require_augmented(const LinearCombination& v) {
  const auto unit = tree_key(PlanarTree{});
  if (v.coefficient(unit) != 0)
    throw std::invalid_argument("argument has a degree-0 component");
}

TensorCombination reduced_basis(const BasisKey& key, MultMode mode) {
  const auto unit = tree_key(PlanarTree{});
  if (key == unit) throw std::invalid_argument("argument has a degree-0 component");
  TensorCombination d = full_coproduct(key, mode);
  d.add_term({unit, key}, -1);
  d.add_term({key, unit}, -1);
  return d;
}

BasisRule multiplication(MultMode mode) {
  if (mode == MultMode::dot)
    return [](const BasisKey& x, const BasisKey& y) {
      return as_combination(dot(tree_from_key(x), tree_from_key(y)));
    };
  return [](const BasisKey& x, const BasisKey& y) {
    return as_combination(slash_product(tree_from_key(x), tree_from_key(y)));
  };
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

MultMode TreeFamily::mode() const {
  return kind == Kind::unlabelled || kind == Kind::labelled ? MultMode::dot
                                                            : MultMode::slash;
}

TreeFamily parse_tree_family(std::string_view name) {
  using K = TreeFamily::Kind;
  if (name == "tree" || name == "unlabelled") return {K::unlabelled, 0};
  if (name == "ntree") return {K::ntree, 0};
  if (name == "increasing") return {K::increasing, 0};
  if (name == "sorted") return {K::sorted, 0};
  constexpr std::string_view prefix = "labelled:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string digits(name.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 6)
      throw std::invalid_argument("bad alphabet size in " + std::string(name));
    const auto k = static_cast<Label>(std::stoul(digits));
    if (k == 0) throw std::invalid_argument("alphabet must be non-empty");
    return {K::labelled, k};
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string tree_family_name(const TreeFamily& f) {
  using K = TreeFamily::Kind;
  switch (f.kind) {
    case K::unlabelled: return "tree";
    case K::labelled: return "labelled:" + std::to_string(f.alphabet);
    case K::ntree: return "ntree";
    case K::increasing: return "increasing";
    case K::sorted: return "sorted";
  }
  return "tree";
}

std::vector<PlanarTree> family_trees(const TreeFamily& f, std::size_t n) {
  using K = TreeFamily::Kind;
  switch (f.kind) {
    case K::unlabelled: return enumerate_trees(n);
    case K::labelled: return enumerate_labelled_trees(n, f.alphabet);
    case K::ntree: return enumerate_family(Family::ntree, n);
    case K::increasing: return enumerate_family(Family::increasing, n);
    case K::sorted: return enumerate_family(Family::sorted, n);
  }
  return {};
}

bool is_family_irreducible(const TreeFamily& f, const PlanarTree& t) {
  return f.mode() == MultMode::dot ? is_irreducible(t) : is_slash_irreducible(t);
}

TensorCombination reduced_coproduct(const LinearCombination& v, MultMode mode) {
  require_augmented(v);
  return extend_linear(
      BasisCoMap([mode](const BasisKey& k) { return reduced_basis(k, mode); }), v);
}

TensorCombination iterated_reduced_coproduct(const LinearCombination& v,
                                             std::size_t n, MultMode mode) {
  require_augmented(v);
  TensorCombination acc = as_tensor(v);
  const BasisCoMap step = [mode](const BasisKey& k) { return reduced_basis(k, mode); };
  for (std::size_t i = 0; i < n && !acc.is_zero(); ++i) acc = apply_to_leg(acc, 0, step);
  return acc;
}

LinearCombination idempotent_e(const LinearCombination& v, MultMode mode) {
  require_augmented(v);
  const BasisRule mul = multiplication(mode);
  const BasisCoMap step = [mode](const BasisKey& k) { return reduced_basis(k, mode); };
  LinearCombination out;
  TensorCombination power = as_tensor(v);
  Rational sign = 1;
  // Each step strictly increases the number of legs of positive degree, so
  // the loop stops after at most deg(v) rounds.
  while (!power.is_zero()) {
    out += fold_legs(mul, power) * sign;
    power = apply_to_leg(power, 0, step);
    sign = -sign;
  }
  return out;
}

std::vector<LinearCombination> primitive_basis(const TreeFamily& f, std::size_t n,
                                               Exec exec) {
  if (n == 0) throw std::invalid_argument("primitive basis needs degree >= 1");
  std::vector<PlanarTree> irreducible;
  for (auto& t : family_trees(f, n))
    if (is_family_irreducible(f, t)) irreducible.push_back(std::move(t));
  const auto mode = f.mode();
  return parallel_map<LinearCombination>(
      irreducible.size(),
      [&](std::size_t i) { return idempotent_e(as_combination(irreducible[i]), mode); },
      exec);
}

Integer family_count(const TreeFamily& f, std::size_t n) {
  using K = TreeFamily::Kind;
  const Integer cat = binomial(2 * n, n) / (n + 1);
  switch (f.kind) {
    case K::unlabelled: return cat;
    case K::labelled: {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), f.alphabet, n);
      return p * cat;
    }
    case K::ntree: return factorial(n) * cat;
    case K::increasing: {
      Integer r = 1;
      for (std::size_t k = 1; k <= n; ++k) r *= 2 * k - 1;
      return r;
    }
    case K::sorted: return factorial(n);
  }
  return 0;
}

DimensionSeries prim_dimensions(const TreeFamily& f, std::size_t N) {
  if (N == 0) throw std::invalid_argument("series needs N >= 1");
  DimensionSeries s{f, {}, {}};
  for (std::size_t n = 0; n <= N; ++n) s.a.push_back(family_count(f, n));
  s.b.assign(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    Integer b = s.a[n];
    for (std::size_t k = 1; k < n; ++k) b -= s.a[k] * s.b[n - k];
    s.b[n] = b;
  }
  return s;
}

std::vector<std::size_t> prim_dimensions_by_rank(const TreeFamily& f,
                                                 std::size_t N, Exec exec) {
  std::vector<std::size_t> out(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) out[n] = rank_of(primitive_basis(f, n, exec));
  return out;
}

std::vector<Integer> tensor_algebra_dimensions(const std::vector<Integer>& b) {
  std::vector<Integer> c(b.size(), 0);
  if (c.empty()) return c;
  c[0] = 1;
  for (std::size_t n = 1; n < b.size(); ++n)
    for (std::size_t k = 1; k <= n; ++k) c[n] += b[k] * c[n - k];
  return c;
}

std::string render_series(const DimensionSeries& s) {
  std::ostringstream out;
  for (std::size_t n = 1; n < s.a.size(); ++n)
    out << n << '\t' << s.a[n] << '\t' << s.b[n] << '\n';
  return out.str();
}

}  // namespace hopftree
