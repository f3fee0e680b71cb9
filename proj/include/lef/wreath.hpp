#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lef/errors.hpp"
#include "lef/group_model.hpp"
#include "lef/marked_group.hpp"
#include "lef/markings.hpp"

namespace lef {

/// How the top group Z/2^k moves base coordinates. Right: (a.f)(x) = f(x + a),
/// so conjugating by u^a moves the value at slot a to slot 0. Left:
/// (a.f)(x) = f(x - a).
enum class WreathConvention { Right, Left };

std::string to_string(WreathConvention c);

/// (f, a) with f : Z/2^k -> G stored sparsely (identity values omitted).
template <class E>
struct WreathElement {
  std::map<std::uint64_t, E> base;
  std::uint64_t top = 0;
};

/// G wr Z/2^k with (f, a)(g, b) = (f . (a.g), a + b).
template <GroupModel M>
struct WreathModel {
  using base_element = typename M::element_type;
  using element_type = WreathElement<base_element>;

  M base;
  unsigned k = 2;
  WreathConvention convention = WreathConvention::Right;

  std::uint64_t modulus() const { return std::uint64_t{1} << k; }

  element_type identity() const { return {}; }

  /// Slot where a value of g at slot y lands in a.g.
  std::uint64_t moved(std::uint64_t y, std::uint64_t a) const {
    const auto mask = modulus() - 1;
    return convention == WreathConvention::Right ? (y - a) & mask : (y + a) & mask;
  }

  element_type multiply(const element_type& x, const element_type& y) const {
    element_type r;
    r.top = (x.top + y.top) & (modulus() - 1);
    r.base = x.base;
    for (const auto& [slot, v] : y.base) {
      const auto s = moved(slot, x.top);
      auto it = r.base.find(s);
      if (it == r.base.end()) r.base.emplace(s, v);
      else it->second = base.multiply(it->second, v);
    }
    prune(r);
    return r;
  }

  element_type inverse(const element_type& x) const {
    // (f, a)^{-1} = ((-a).f^{-1}, -a)
    element_type r;
    r.top = (modulus() - x.top) & (modulus() - 1);
    for (const auto& [slot, v] : x.base) r.base.emplace(moved(slot, r.top), base.inverse(v));
    return r;
  }

  std::string encode(const element_type& x) const {
    std::string s = std::to_string(x.top) + "|";
    for (const auto& [slot, v] : x.base) {
      s += std::to_string(slot) + ":";
      append_encoded(s, base.encode(v));
    }
    return s;
  }

  element_type lift(std::map<std::uint64_t, base_element> f, std::uint64_t top = 0) const {
    element_type r{std::move(f), top & (modulus() - 1)};
    for (auto& [slot, v] : r.base)
      if (slot >= modulus()) throw InvalidArgument("wreath: slot outside Z/2^k");
    prune(r);
    return r;
  }

  element_type shift(std::int64_t a = 1) const {
    element_type r;
    r.top = static_cast<std::uint64_t>(a) & (modulus() - 1);
    return r;
  }

  element_type power(element_type x, std::uint64_t e) const {
    element_type r;
    for (; e; e >>= 1) {
      if (e & 1) r = multiply(r, x);
      x = multiply(x, x);
    }
    return r;
  }

  element_type commutator(const element_type& x, const element_type& y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
  }

  /// u^a x u^{-a}.
  element_type conjugate_by_shift(const element_type& x, std::int64_t a) const {
    return multiply(multiply(shift(a), x), shift(-a));
  }

 private:
  void prune(element_type& r) const {
    const auto id = base.encode(base.identity());
    for (auto it = r.base.begin(); it != r.base.end();)
      it = base.encode(it->second) == id ? r.base.erase(it) : std::next(it);
  }
};

struct WreathMarkingParams {
  unsigned k = 20;
  std::size_t J = 9;
  WreathConvention convention = WreathConvention::Right;

  /// 2^j for j = 1..J, then 2^{j+J} for j = 1..J, reduced mod 2^k.
  std::vector<std::uint64_t> support_points() const;
};

struct SeparationReport {
  bool points_distinct = false;
  bool differences_distinct = false;
  bool sums_distinct = false;
  std::size_t points = 0;
  std::string failure;

  bool ok() const { return points_distinct && differences_distinct && sums_distinct; }
};

/// Exhaustive check over the support points: distinct points, distinct
/// differences s - s' (s != s'), distinct sums s + s' (s < s').
SeparationReport separation_check(const WreathMarkingParams& params);

using MatrixWreath = WreathModel<MatrixModel>;
using MatrixWreathElement = WreathElement<MatFp>;

/// (c, d) with c^{-1} d^{-1} c d = target, both verified. Identity gives
/// (I, I); a block-elementary e_{u,v}^X gives (e_{u,k}^X, e_{k,v}^1); a
/// block-monomial matrix with blocks 0, I, -I is handled by search over
/// det-1 signed permutation matrices on the blocks. Throws InvalidArgument
/// when no rule applies and ConsistencyError when the search is exhausted.
std::pair<MatFp, MatFp> find_commutator_pair(const MatFp& target, std::size_t n, std::size_t l);

struct WreathTwoMarking {
  MatrixWreath model;
  MatrixWreathElement w1, w2, u;
  /// (c_j, d_j) placed at 2^j and 2^{j+J}.
  std::vector<std::pair<MatFp, MatFp>> pairs;
  /// The commutators [c_j, d_j] (the first J nine-marking entries).
  std::vector<MatFp> targets;
};

/// w1 = (t1 at 0, t2 at 1), w2 = (c_j at 2^j, d_j at 2^{j+J}), u = (e, 1),
/// where (t1, t2) is the two-marking and [c_j, d_j] is the j-th nine-marking
/// generator, both realized in SL(N, F_p) with N = n l. The nine-marking
/// lives in the same dimension and J <= 9. Throws InvalidArgument when the
/// separation condition fails.
WreathTwoMarking build_two_marking_wreath(const MarkingBundle& two, const MarkingBundle& nine,
                                          const WreathMarkingParams& params);

/// [u^{2^j} w2 u^{-2^j}, u^{2^{j+J}} w2 u^{-2^{j+J}}] for j in 1..J; throws
/// ConsistencyError unless it is supported at 0 with value [c_j, d_j].
template <GroupModel M>
WreathElement<typename M::element_type> hall_extract(const WreathModel<M>& W,
                                                     const WreathElement<typename M::element_type>& w2, std::size_t j,
                                                     const WreathMarkingParams& params,
                                                     const typename M::element_type& expected) {
  if (j < 1 || j > params.J) throw InvalidArgument("hall_extract: j out of range");
  const auto a = static_cast<std::int64_t>(std::uint64_t{1} << j);
  const auto b = static_cast<std::int64_t>(std::uint64_t{1} << (j + params.J));
  const auto x = W.conjugate_by_shift(w2, a);
  const auto y = W.conjugate_by_shift(w2, b);
  const auto z = W.commutator(x, y);
  const auto want = W.lift({{0, expected}});
  if (W.encode(z) != W.encode(want)) {
    std::string slots;
    for (const auto& [s, v] : z.base) slots += " " + std::to_string(s);
    throw ConsistencyError("hall_extract: commutator is not the slot-0 target (support:" + slots + ")");
  }
  return z;
}

struct CoprimeExtraction {
  MatrixWreathElement slot0, slot1;
  std::uint64_t order0 = 0, order1 = 0;
  std::uint64_t exponent0 = 0, exponent1 = 0;
};

/// Powers of w1 = (t1 at 0, t2 at 1) isolating each slot: exponent0 is 1 mod
/// ord(t1) and 0 mod ord(t2), exponent1 the reverse. Throws InvalidArgument
/// when the orders are not coprime.
CoprimeExtraction coprime_extract(const MatrixWreath& W, const MatrixWreathElement& w1);

struct WreathGenerationResult {
  std::size_t order = 0;
  std::size_t full_order = 0;
  bool generated = false;
};

/// BFS order of <w, u> with w = (s_1 at 0, s_2 at 1, ...) from the base
/// marking, compared with |G|^{2^k} 2^k.
template <GroupModel M>
WreathGenerationResult wreath_generation_check(const MarkedGroup<M>& base, unsigned k, std::size_t cap = kDefaultCap) {
  WreathModel<M> W{base.model(), k, WreathConvention::Right};
  if (base.arity() > W.modulus()) throw InvalidArgument("wreath_generation_check: more generators than slots");
  std::map<std::uint64_t, typename M::element_type> f;
  for (std::size_t i = 0; i < base.arity(); ++i) f.emplace(i, base.generators()[i]);
  WreathGenerationResult r;
  const auto g = enumerate_subgroup(base, cap);
  unsigned __int128 full = W.modulus();
  for (std::uint64_t i = 0; i < W.modulus(); ++i) {
    full *= g;
    if (full > cap) throw CapExceeded("wreath_generation_check: |G wr Z/2^k| exceeds cap", cap);
  }
  r.full_order = static_cast<std::size_t>(full);
  r.order = enumerate_subgroup(W, {W.lift(f), W.shift(1)}, cap);
  r.generated = r.order == r.full_order;
  return r;
}

}  // namespace lef
