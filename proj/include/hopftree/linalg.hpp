#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hopftree {

using Rational = mpq_class;
using Integer = mpz_class;

/// Basis keys are namespaced strings such as "tree:(()())", "word:2 1 1 2",
/// "perm:2 4 1 3" or "bin:((.,.),.)". A tensor key is the ordered list of
/// its legs.
using BasisKey = std::string;
using TensorKey = std::vector<BasisKey>;

std::string_view key_namespace(std::string_view key);

/// Finitely supported map from keys to exact rationals. No zero coefficient
/// is ever stored and iteration follows key order.
template <typename Key>
class FreeModule {
 public:
  using Terms = std::map<Key, Rational>;
  using const_iterator = typename Terms::const_iterator;

  FreeModule() = default;

  static FreeModule basis(Key key, const Rational& coeff = 1) {
    FreeModule m;
    m.add_term(std::move(key), coeff);
    return m;
  }

  void add_term(Key key, const Rational& coeff) {
    if (coeff == 0) return;
    // GMP arithmetic assumes canonical operands.
    Rational c = coeff;
    c.canonicalize();
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Sum of all coefficients; for products this counts addends.
  Rational coefficient_sum() const {
    Rational s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  FreeModule& operator+=(const FreeModule& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  FreeModule& operator-=(const FreeModule& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }
  FreeModule& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend FreeModule operator+(FreeModule a, const FreeModule& b) { return a += b; }
  friend FreeModule operator-(FreeModule a, const FreeModule& b) { return a -= b; }
  friend FreeModule operator-(FreeModule a) { return a *= Rational(-1); }
  friend FreeModule operator*(const Rational& s, FreeModule a) { return a *= s; }
  friend FreeModule operator*(FreeModule a, const Rational& s) { return a *= s; }
  bool operator==(const FreeModule&) const = default;

 private:
  Terms terms_;
};

using LinearCombination = FreeModule<BasisKey>;
using TensorCombination = FreeModule<TensorKey>;

LinearCombination add(const LinearCombination& a, const LinearCombination& b);
LinearCombination scale(const LinearCombination& a, const Rational& s);

/// a (x) b, bilinear.
TensorCombination tensor_of(const LinearCombination& a,
                            const LinearCombination& b);
/// Appends the legs of b after the legs of a.
TensorCombination tensor_of(const TensorCombination& a,
                            const LinearCombination& b);
TensorCombination tensor_of(const LinearCombination& a,
                            const TensorCombination& b);
/// Views a combination as a one-leg tensor.
TensorCombination as_tensor(const LinearCombination& a);

using BasisMap = std::function<LinearCombination(const BasisKey&)>;
using BasisCoMap = std::function<TensorCombination(const BasisKey&)>;
using BasisRule =
    std::function<LinearCombination(const BasisKey&, const BasisKey&)>;
using LinearRule = std::function<LinearCombination(const LinearCombination&,
                                                   const LinearCombination&)>;

LinearCombination extend_linear(const BasisMap& f, const LinearCombination& v);
TensorCombination extend_linear(const BasisCoMap& f,
                                const LinearCombination& v);

/// Bilinear extension of a rule given on basis pairs.
LinearRule extend_bilinear(BasisRule f);

/// Applies a linear map to leg `leg` of every tensor term, expanding the
/// result into additional legs when the map is a comultiplication.
TensorCombination apply_to_leg(const TensorCombination& v, std::size_t leg,
                               const BasisCoMap& f);
TensorCombination map_legs(const TensorCombination& v, const BasisMap& f);

/// Sum over terms of (x1 (.) y1) (x) ... (x) (xk (.) yk) for tensors of equal
/// arity.
TensorCombination componentwise(const BasisRule& f, const TensorCombination& x,
                                const TensorCombination& y);

/// Multiplies all legs of each term left to right.
LinearCombination fold_legs(const BasisRule& f, const TensorCombination& v);

/// "c*key + c*key" in key order; "0" for the zero combination.
std::string to_string(const LinearCombination& v);
/// Legs joined by " (x) ".
std::string to_string(const TensorCombination& v);
LinearCombination parse_combination(std::string_view text);
TensorCombination parse_tensor_combination(std::string_view text);

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_of(const std::vector<LinearCombination>& span);

}  // namespace hopftree
