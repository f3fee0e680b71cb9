#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lef/errors.hpp"
#include "lef/group_model.hpp"

namespace lef {

/// Signed 1-based generator indices: +i is s_i, -i is s_i^{-1}.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultCap = 1'000'000;
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// A group model together with an ordered generator tuple.
template <GroupModel M>
class MarkedGroup {
 public:
  using model_type = M;
  using element_type = typename M::element_type;

  MarkedGroup(M model, std::vector<element_type> gens) : model_(std::move(model)), gens_(std::move(gens)) {
    inverses_.reserve(gens_.size());
    for (const auto& g : gens_) inverses_.push_back(model_.inverse(g));
    for (int i = 1; i <= static_cast<int>(gens_.size()); ++i) {
      alphabet_.push_back(i);
      alphabet_.push_back(-i);
    }
  }

  const M& model() const noexcept { return model_; }
  const std::vector<element_type>& generators() const noexcept { return gens_; }
  std::size_t arity() const noexcept { return gens_.size(); }
  /// Letters in the order +1, -1, +2, -2, ...
  const std::vector<int>& alphabet() const noexcept { return alphabet_; }

  const element_type& letter(int s) const {
    if (s == 0 || static_cast<std::size_t>(s < 0 ? -s : s) > gens_.size())
      throw InvalidArgument("word letter out of range: " + std::to_string(s));
    return s > 0 ? gens_[s - 1] : inverses_[-s - 1];
  }

  element_type eval(const Word& w) const {
    auto x = model_.identity();
    for (int s : w) x = model_.multiply(x, letter(s));
    return x;
  }

 private:
  M model_;
  std::vector<element_type> gens_;
  std::vector<element_type> inverses_;
  std::vector<int> alphabet_;
};

/// Elements within word distance `radius`, in BFS order. Within a layer the
/// order follows the lexicographically least geodesic witness.
template <class E>
struct Ball {
  std::size_t radius = 0;
  std::vector<E> elements;
  std::vector<std::uint32_t> lengths;
  std::vector<std::uint32_t> parent;  // parent[0] is unused
  std::vector<int> last_letter;       // element i = elements[parent[i]] * letter
  std::vector<std::size_t> layer_sizes;
  /// False when the BFS stopped at `radius` with a nonempty frontier.
  bool exhausted = false;

  std::size_t size() const noexcept { return elements.size(); }

  Word witness(std::size_t i) const {
    Word w;
    while (i != 0) {
      w.push_back(last_letter[i]);
      i = parent[i];
    }
    return {w.rbegin(), w.rend()};
  }
};

namespace detail {

/// Products frontier[i] * letters[j] with their encodings, computed in
/// parallel; index i * letters.size() + j.
template <GroupModel M>
void expand_layer(const M& model, const std::vector<typename M::element_type>& frontier,
                  const std::vector<typename M::element_type>& letters,
                  std::vector<typename M::element_type>& products, std::vector<std::string>& keys) {
  const std::size_t L = letters.size();
  const auto n = static_cast<std::int64_t>(frontier.size() * L);
  products.assign(static_cast<std::size_t>(n), {});
  keys.assign(static_cast<std::size_t>(n), {});
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 64) if (n >= 512)
  for (std::int64_t t = 0; t < n; ++t) {
    try {
      const auto i = static_cast<std::size_t>(t);
      products[i] = model.multiply(frontier[i / L], letters[i % L]);
      keys[i] = model.encode(products[i]);
    } catch (...) {
#pragma omp critical(lef_expand_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// All elements at word distance <= R with geodesic witnesses.
template <GroupModel M>
Ball<typename M::element_type> ball(const MarkedGroup<M>& g, std::size_t R, std::size_t cap = kDefaultCap) {
  using E = typename M::element_type;
  Ball<E> b;
  b.radius = R;
  std::vector<E> letters;
  for (int s : g.alphabet()) letters.push_back(g.letter(s));
  std::unordered_set<std::string> seen;
  b.elements.push_back(g.model().identity());
  b.lengths.push_back(0);
  b.parent.push_back(0);
  b.last_letter.push_back(0);
  b.layer_sizes.push_back(1);
  seen.insert(g.model().encode(b.elements[0]));
  std::size_t layer_begin = 0;
  std::vector<E> frontier{b.elements[0]}, products;
  std::vector<std::string> keys;
  for (std::size_t r = 1; r <= R; ++r) {
    detail::expand_layer(g.model(), frontier, letters, products, keys);
    std::vector<E> next;
    for (std::size_t t = 0; t < products.size(); ++t) {
      if (!seen.insert(std::move(keys[t])).second) continue;
      if (b.elements.size() >= cap) throw CapExceeded("ball", b.elements.size(), r);
      b.parent.push_back(static_cast<std::uint32_t>(layer_begin + t / letters.size()));
      b.last_letter.push_back(g.alphabet()[t % letters.size()]);
      b.lengths.push_back(static_cast<std::uint32_t>(r));
      b.elements.push_back(products[t]);
      next.push_back(std::move(products[t]));
    }
    layer_begin = b.elements.size() - next.size();
    if (next.empty()) {
      b.exhausted = true;
      b.radius = r - 1;
      return b;
    }
    b.layer_sizes.push_back(next.size());
    frontier = std::move(next);
  }
  return b;
}

/// Order of the subgroup generated by `gens`; throws CapExceeded past `cap`.
template <GroupModel M>
std::size_t enumerate_subgroup(const M& model, const std::vector<typename M::element_type>& gens,
                               std::size_t cap = kDefaultCap) {
  using E = typename M::element_type;
  std::unordered_set<std::string> seen;
  std::vector<E> letters;
  for (const auto& g : gens)
    if (seen.insert(model.encode(g)).second) letters.push_back(g);
  seen.clear();
  std::vector<E> frontier{model.identity()}, products;
  std::vector<std::string> keys;
  seen.insert(model.encode(frontier[0]));
  if (letters.empty()) return 1;
  for (std::size_t layer = 1; !frontier.empty(); ++layer) {
    detail::expand_layer(model, frontier, letters, products, keys);
    std::vector<E> next;
    for (std::size_t t = 0; t < products.size(); ++t) {
      if (!seen.insert(std::move(keys[t])).second) continue;
      if (seen.size() > cap) throw CapExceeded("enumerate_subgroup", seen.size() - 1, layer);
      next.push_back(std::move(products[t]));
    }
    frontier = std::move(next);
  }
  return seen.size();
}

template <GroupModel M>
std::size_t enumerate_subgroup(const MarkedGroup<M>& g, std::size_t cap = kDefaultCap) {
  return enumerate_subgroup(g.model(), g.generators(), cap);
}

struct AgreementResult {
  /// Largest R <= Rmax such that all words of length <= 2R+1 agree; -1
  /// when a single generator already separates the two groups.
  int radius = 0;
  /// Length of the shortest separating word, 0 if none within 2*Rmax+1.
  std::size_t separating_length = 0;
  Word separating_word;
};

/// Exact relation-agreement radius via BFS in the diagonal subgroup of
/// g1 x g2: a word separates iff its value has exactly one trivial coordinate.
template <GroupModel M1, GroupModel M2>
AgreementResult agreement(const MarkedGroup<M1>& g1, const MarkedGroup<M2>& g2, int Rmax,
                          std::size_t cap = kDefaultCap) {
  if (g1.arity() != g2.arity()) throw InvalidArgument("agreement_radius: marking arities differ");
  if (Rmax < 0) throw InvalidArgument("agreement_radius: Rmax must be nonnegative");
  using PM = PairModel<M1, M2>;
  std::vector<typename PM::element_type> gens;
  for (std::size_t i = 0; i < g1.arity(); ++i) gens.emplace_back(g1.generators()[i], g2.generators()[i]);
  MarkedGroup<PM> diag(PM{g1.model(), g2.model()}, std::move(gens));
  const auto id1 = g1.model().encode(g1.model().identity());
  const auto id2 = g2.model().encode(g2.model().identity());
  auto b = ball(diag, static_cast<std::size_t>(2 * Rmax + 1), cap);
  AgreementResult res;
  res.radius = Rmax;
  for (std::size_t i = 1; i < b.size(); ++i) {
    const bool t1 = g1.model().encode(b.elements[i].first) == id1;
    const bool t2 = g2.model().encode(b.elements[i].second) == id2;
    if (t1 != t2) {
      const auto L = static_cast<int>(b.lengths[i]);
      res.separating_length = static_cast<std::size_t>(L);
      res.separating_word = b.witness(i);
      res.radius = L >= 2 ? (L - 2) / 2 : -1;
      break;
    }
  }
  return res;
}

template <GroupModel M1, GroupModel M2>
int agreement_radius(const MarkedGroup<M1>& g1, const MarkedGroup<M2>& g2, int Rmax,
                     std::size_t cap = kDefaultCap) {
  return agreement(g1, g2, Rmax, cap).radius;
}

/// j-th generator is the tuple of the levels' j-th generators.
template <GroupModel M>
MarkedGroup<ProductModel<M>> diagonal_truncation(const std::vector<MarkedGroup<M>>& levels) {
  if (levels.empty()) throw InvalidArgument("diagonal_truncation: no levels");
  const auto k = levels.front().arity();
  ProductModel<M> pm;
  for (const auto& l : levels) {
    if (l.arity() != k) throw InvalidArgument("diagonal_truncation: arity mismatch");
    pm.factors.push_back(l.model());
  }
  std::vector<typename ProductModel<M>::element_type> gens(k);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& l : levels) gens[j].push_back(l.generators()[j]);
  return MarkedGroup<ProductModel<M>>(std::move(pm), std::move(gens));
}

struct MarkedIsoReport {
  bool isomorphic = false;
  std::size_t order1 = 0;
  std::size_t order2 = 0;
  std::string failure;
};

/// Decides whether s_i -> t_i extends to a homomorphism from the finite
/// marked group g1 onto g2: the map x -> (witness of x evaluated in g2) must
/// respect right multiplication by every generator. Returns the failure, or
/// an empty string; `order1` receives |g1|.
template <GroupModel M1, GroupModel M2>
std::string check_marked_quotient(const MarkedGroup<M1>& g1, const MarkedGroup<M2>& g2, std::size_t* order1 = nullptr,
                                  std::size_t cap = kDefaultCap) {
  if (g1.arity() != g2.arity()) return "arity mismatch";
  auto b = ball(g1, kUnbounded, cap);
  if (order1) *order1 = b.size();
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(b.size());
  for (std::uint32_t i = 0; i < b.size(); ++i) index.emplace(g1.model().encode(b.elements[i]), i);
  std::vector<std::string> phi(b.size());
  {
    std::vector<typename M2::element_type> img(b.size());
    img[0] = g2.model().identity();
    for (std::size_t i = 1; i < b.size(); ++i) img[i] = g2.model().multiply(img[b.parent[i]], g2.letter(b.last_letter[i]));
    for (std::size_t i = 0; i < b.size(); ++i) phi[i] = g2.model().encode(img[i]);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (int s = 1; s <= static_cast<int>(g1.arity()); ++s) {
        const auto y = index.at(g1.model().encode(g1.model().multiply(b.elements[i], g1.letter(s))));
        if (phi[y] != g2.model().encode(g2.model().multiply(img[i], g2.letter(s))))
          return "relation not transported at element " + std::to_string(i) + " generator " + std::to_string(s);
      }
  }
  return {};
}

/// Decides whether s_i -> t_i extends to an isomorphism of finite marked
/// groups: a well-defined homomorphism between groups of equal order.
template <GroupModel M1, GroupModel M2>
MarkedIsoReport check_marked_isomorphism(const MarkedGroup<M1>& g1, const MarkedGroup<M2>& g2,
                                         std::size_t cap = kDefaultCap) {
  MarkedIsoReport rep;
  rep.failure = check_marked_quotient(g1, g2, &rep.order1, cap);
  if (rep.failure == "arity mismatch") return rep;
  rep.order2 = enumerate_subgroup(g2, cap);
  if (rep.failure.empty() && rep.order1 != rep.order2) rep.failure = "orders differ";
  rep.isomorphic = rep.failure.empty();
  return rep;
}

}  // namespace lef
