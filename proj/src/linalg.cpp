#include "hopftree/linalg.hpp"

#include "hopftree/tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hopftree {

std::string_view key_namespace(std::string_view key) {
  const auto colon = key.find(':');
  return colon == std::string_view::npos ? std::string_view{} : key.substr(0, colon);
}

LinearCombination add(const LinearCombination& a, const LinearCombination& b) {
  return a + b;
}

LinearCombination scale(const LinearCombination& a, const Rational& s) {
  return a * s;
}

TensorCombination tensor_of(const LinearCombination& a,
                            const LinearCombination& b) {
  TensorCombination out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add_term({ka, kb}, ca * cb);
  return out;
}

TensorCombination tensor_of(const TensorCombination& a,
                            const LinearCombination& b) {
  TensorCombination out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      TensorKey key = ka;
      key.push_back(kb);
      out.add_term(std::move(key), ca * cb);
    }
  return out;
}

TensorCombination tensor_of(const LinearCombination& a,
                            const TensorCombination& b) {
  TensorCombination out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      TensorKey key{ka};
      key.insert(key.end(), kb.begin(), kb.end());
      out.add_term(std::move(key), ca * cb);
    }
  return out;
}

TensorCombination as_tensor(const LinearCombination& a) {
  TensorCombination out;
  for (const auto& [k, c] : a) out.add_term({k}, c);
  return out;
}

LinearCombination extend_linear(const BasisMap& f, const LinearCombination& v) {
  LinearCombination out;
  for (const auto& [k, c] : v) out += f(k) * c;
  return out;
}

TensorCombination extend_linear(const BasisCoMap& f,
                                const LinearCombination& v) {
  TensorCombination out;
  for (const auto& [k, c] : v) out += f(k) * c;
  return out;
}

LinearRule extend_bilinear(BasisRule f) {
  return [f = std::move(f)](const LinearCombination& a,
                            const LinearCombination& b) {
    LinearCombination out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) out += f(ka, kb) * (ca * cb);
    return out;
  };
}

TensorCombination apply_to_leg(const TensorCombination& v, std::size_t leg,
                               const BasisCoMap& f) {
  TensorCombination out;
  for (const auto& [key, c] : v) {
    if (leg >= key.size()) throw std::out_of_range("tensor leg out of range");
    for (const auto& [image, d] : f(key[leg])) {
      TensorKey k(key.begin(), key.begin() + static_cast<long>(leg));
      k.insert(k.end(), image.begin(), image.end());
      k.insert(k.end(), key.begin() + static_cast<long>(leg) + 1, key.end());
      out.add_term(std::move(k), c * d);
    }
  }
  return out;
}

TensorCombination map_legs(const TensorCombination& v, const BasisMap& f) {
  TensorCombination out;
  for (const auto& [key, c] : v) {
    TensorCombination partial = TensorCombination::basis({}, c);
    for (const auto& leg : key) partial = tensor_of(partial, f(leg));
    out += partial;
  }
  return out;
}

TensorCombination componentwise(const BasisRule& f, const TensorCombination& x,
                                const TensorCombination& y) {
  TensorCombination out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      if (kx.size() != ky.size())
        throw std::invalid_argument("tensor arity mismatch");
      TensorCombination partial = TensorCombination::basis({}, cx * cy);
      for (std::size_t i = 0; i < kx.size(); ++i)
        partial = tensor_of(partial, f(kx[i], ky[i]));
      out += partial;
    }
  return out;
}

LinearCombination fold_legs(const BasisRule& f, const TensorCombination& v) {
  const auto mul = extend_bilinear(f);
  LinearCombination out;
  for (const auto& [key, c] : v) {
    if (key.empty()) throw std::invalid_argument("cannot fold an empty tensor");
    LinearCombination acc = LinearCombination::basis(key.front(), c);
    for (std::size_t i = 1; i < key.size(); ++i)
      acc = mul(acc, LinearCombination::basis(key[i]));
    out += acc;
  }
  return out;
}

namespace {

template <typename Key, typename RenderKey>
std::string render_terms(const FreeModule<Key>& v, RenderKey render) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str();
    out += '*';
    out += render(k);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text,
                                    std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto at = text.find(sep, start);
    if (at == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, at - start));
    start = at + sep.size();
  }
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("combination: empty coefficient");
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw ParseError("combination: bad coefficient \"" + std::string(text) + "\"");
  try {
    Rational q(std::string(text), 10);
    if (q.get_den() == 0) throw ParseError("combination: zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("combination: bad coefficient \"" + std::string(text) + "\"");
  }
}

template <typename Key, typename ParseKey>
FreeModule<Key> parse_terms(std::string_view text, ParseKey parse_key) {
  FreeModule<Key> out;
  if (text == "0") return out;
  for (auto term : split(text, " + ")) {
    const auto star = term.find('*');
    if (star == std::string_view::npos)
      throw ParseError("combination: term without '*': \"" + std::string(term) + "\"");
    out.add_term(parse_key(term.substr(star + 1)),
                 parse_rational(term.substr(0, star)));
  }
  return out;
}

}  // namespace

std::string to_string(const LinearCombination& v) {
  return render_terms(v, [](const BasisKey& k) { return k; });
}

std::string to_string(const TensorCombination& v) {
  return render_terms(v, [](const TensorKey& k) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) s += " (x) ";
      s += k[i];
    }
    return s;
  });
}

LinearCombination parse_combination(std::string_view text) {
  return parse_terms<BasisKey>(text, [](std::string_view k) {
    if (key_namespace(k).empty())
      throw ParseError("combination: key without namespace: \"" + std::string(k) + "\"");
    return BasisKey(k);
  });
}

TensorCombination parse_tensor_combination(std::string_view text) {
  return parse_terms<TensorKey>(text, [](std::string_view k) {
    TensorKey key;
    for (auto leg : split(k, " (x) ")) {
      if (key_namespace(leg).empty())
        throw ParseError("combination: key without namespace: \"" + std::string(leg) + "\"");
      key.emplace_back(leg);
    }
    return key;
  });
}

std::size_t rank_of(const std::vector<LinearCombination>& span) {
  std::set<BasisKey> keys;
  for (const auto& v : span)
    for (const auto& [k, c] : v) keys.insert(k);
  if (keys.empty()) return 0;
  const std::vector<BasisKey> columns(keys.begin(), keys.end());

  // Integer rows: clear denominators per row.
  std::vector<std::vector<Integer>> rows;
  for (const auto& v : span) {
    if (v.is_zero()) continue;
    Integer lcm = 1;
    for (const auto& [k, c] : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> row(columns.size(), 0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const Rational c = v.coefficient(columns[j]);
      row[j] = c.get_num() * (lcm / c.get_den());
    }
    rows.push_back(std::move(row));
  }

  // Bareiss: every division below is exact.
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  const std::size_t ncols = columns.size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Integer& p = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Integer factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        Integer value = p * rows[r][c] - factor * rows[rank][c];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev_pivot.get_mpz_t());
        rows[r][c] = std::move(value);
      }
    }
    prev_pivot = rows[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace hopftree
