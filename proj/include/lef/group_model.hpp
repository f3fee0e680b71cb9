#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lef/errors.hpp"
#include "lef/mat_fp.hpp"
#include "lef/permutation.hpp"

namespace lef {

/// A group given by its operations on a value type with an injective
/// byte encoding.
template <class M>
concept GroupModel = requires(const M& m, const typename M::element_type& a) {
  typename M::element_type;
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.multiply(a, a) } -> std::convertible_to<typename M::element_type>;
  { m.inverse(a) } -> std::convertible_to<typename M::element_type>;
  { m.encode(a) } -> std::convertible_to<std::string>;
};

/// Subgroups of GL(d, F_p).
struct MatrixModel {
  using element_type = MatFp;

  std::size_t dim = 0;
  std::uint32_t p = 2;

  MatFp identity() const { return MatFp::identity(dim, p); }
  MatFp multiply(const MatFp& a, const MatFp& b) const { return a * b; }
  MatFp inverse(const MatFp& a) const { return lef::inverse(a); }
  std::string encode(const MatFp& a) const { return {a.data().begin(), a.data().end()}; }
};

/// Subgroups of Sym(degree).
struct PermutationModel {
  using element_type = Permutation;

  std::size_t degree = 0;

  Permutation identity() const { return Permutation::identity(degree); }
  Permutation multiply(const Permutation& a, const Permutation& b) const { return compose(a, b); }
  Permutation inverse(const Permutation& a) const { return lef::inverse(a); }
  std::string encode(const Permutation& a) const { return a.encode(); }
};

/// Residues modulo n under addition; small oracle groups.
struct CyclicModel {
  using element_type = std::uint64_t;

  std::uint64_t n = 1;

  std::uint64_t identity() const { return 0; }
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const { return (a + b) % n; }
  std::uint64_t inverse(std::uint64_t a) const { return (n - a) % n; }
  std::string encode(std::uint64_t a) const { return std::to_string(a); }
};

inline void append_encoded(std::string& out, const std::string& part) {
  const auto len = static_cast<std::uint32_t>(part.size());
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((len >> (8 * b)) & 0xff));
  out += part;
}

/// Finite truncation of a product of copies of one model kind; elements are
/// tuples, one entry per factor.
template <GroupModel M>
struct ProductModel {
  using element_type = std::vector<typename M::element_type>;

  std::vector<M> factors;

  element_type identity() const {
    element_type e;
    e.reserve(factors.size());
    for (const auto& f : factors) e.push_back(f.identity());
    return e;
  }
  element_type multiply(const element_type& a, const element_type& b) const {
    element_type c;
    c.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) c.push_back(factors[i].multiply(a[i], b[i]));
    return c;
  }
  element_type inverse(const element_type& a) const {
    element_type c;
    c.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) c.push_back(factors[i].inverse(a[i]));
    return c;
  }
  std::string encode(const element_type& a) const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) append_encoded(s, factors[i].encode(a[i]));
    return s;
  }
};

/// Direct product of two possibly different models.
template <GroupModel A, GroupModel B>
struct PairModel {
  using element_type = std::pair<typename A::element_type, typename B::element_type>;

  A first;
  B second;

  element_type identity() const { return {first.identity(), second.identity()}; }
  element_type multiply(const element_type& x, const element_type& y) const {
    return {first.multiply(x.first, y.first), second.multiply(x.second, y.second)};
  }
  element_type inverse(const element_type& x) const { return {first.inverse(x.first), second.inverse(x.second)}; }
  std::string encode(const element_type& x) const {
    std::string s;
    append_encoded(s, first.encode(x.first));
    append_encoded(s, second.encode(x.second));
    return s;
  }
};

}  // namespace lef
