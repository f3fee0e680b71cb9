#include "lef/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "lef/errors.hpp"

namespace lef {

void FiniteGroup::finish() {
  const auto n = table_.size();
  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidArgument("FiniteGroup: element without inverse");
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::uint32_t>> table) {
  const auto n = table.size();
  if (n == 0) throw InvalidArgument("FiniteGroup: empty table");
  for (std::uint32_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InvalidArgument("FiniteGroup: table is not square");
    std::vector<char> seen(n, 0);
    for (std::uint32_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw InvalidArgument("FiniteGroup: entry out of range");
      if (seen[table[a][b]]) throw InvalidArgument("FiniteGroup: row is not a permutation");
      seen[table[a][b]] = 1;
    }
    if (table[0][a] != a || table[a][0] != a) throw InvalidArgument("FiniteGroup: index 0 is not the identity");
  }
  if (n <= 256) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw InvalidArgument("FiniteGroup: table is not associative");
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic: order must be positive");
  std::vector<std::uint32_t> rot(n);
  for (std::uint32_t i = 0; i < n; ++i) rot[i] = static_cast<std::uint32_t>((i + 1) % n);
  FiniteGroup g;
  g.table_.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) g.table_[a][b] = static_cast<std::uint32_t>((a + b) % n);
  g.perms_.reserve(n);
  auto r = Permutation(rot);
  auto x = Permutation::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.perms_.push_back(x);
    x = compose(x, r);
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::dihedral(std::size_t order) {
  if (order < 4 || order % 2) throw InvalidArgument("dihedral: order must be even and >= 4");
  const auto m = static_cast<std::uint32_t>(order / 2);
  std::vector<std::uint32_t> s(m), sr(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    s[i] = (m - i) % m;
    sr[i] = (2 * m - i - 1) % m;  // s after rotation by one
  }
  return from_permutations({Permutation(s), Permutation(sr)});
}

std::pair<std::uint32_t, std::uint32_t> dihedral_reflections(const FiniteGroup& d) {
  if (d.order() < 4) throw InvalidArgument("dihedral_reflections: not a dihedral group");
  return {1u, 2u};
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  if (k == 0) throw InvalidArgument("symmetric: degree must be positive");
  if (k == 1) return from_permutations({Permutation::identity(1)});
  std::vector<std::uint32_t> cyc(k);
  for (std::uint32_t i = 0; i < k; ++i) cyc[i] = static_cast<std::uint32_t>((i + 1) % k);
  return from_permutations({Permutation::transposition(k, 0, 1), Permutation(cyc)});
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw InvalidArgument("from_permutations: no generators");
  const auto degree = gens.front().degree();
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_map<std::string, std::uint32_t> index{{elems[0].encode(), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      auto y = compose(elems[head], g);
      auto key = y.encode();
      if (index.emplace(key, static_cast<std::uint32_t>(elems.size())).second) elems.push_back(std::move(y));
    }
  }
  FiniteGroup out;
  const auto n = elems.size();
  out.table_.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) out.table_[a][b] = index.at(compose(elems[a], elems[b]).encode());
  out.perms_ = std::move(elems);
  out.finish();
  return out;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto na = a.order(), nb = b.order();
  FiniteGroup g;
  g.table_.assign(na * nb, std::vector<std::uint32_t>(na * nb));
  for (std::uint32_t x = 0; x < na * nb; ++x)
    for (std::uint32_t y = 0; y < na * nb; ++y)
      g.table_[x][y] = static_cast<std::uint32_t>(a.mul(static_cast<std::uint32_t>(x / nb), static_cast<std::uint32_t>(y / nb)) * nb +
                                                  b.mul(static_cast<std::uint32_t>(x % nb), static_cast<std::uint32_t>(y % nb)));
  g.finish();
  return g;
}

std::uint32_t FiniteGroup::power(std::uint32_t a, std::int64_t e) const {
  std::uint32_t base = e < 0 ? inv(a) : a;
  auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  std::uint32_t r = 0;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::uint64_t FiniteGroup::element_order(std::uint32_t a) const {
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::uint32_t> FiniteGroup::subgroup(std::span<const std::uint32_t> gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<std::uint32_t> elems{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto g : gens) {
      if (g >= order()) throw InvalidArgument("subgroup: generator index out of range");
      auto y = mul(elems[head], g);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool FiniteGroup::generated_by(std::span<const std::uint32_t> gens) const {
  return subgroup(gens).size() == order();
}

}  // namespace lef
