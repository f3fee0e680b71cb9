#pragma once

// Naive reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "lef/mat_fp.hpp"

namespace oracle {

using Rows = std::vector<std::vector<std::int64_t>>;

inline Rows rows_of(const lef::MatFp& m) {
  Rows r(m.dim(), std::vector<std::int64_t>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i][j] = m(i, j);
  return r;
}

/// Leibniz expansion over all permutations.
inline std::int64_t leibniz_det(const Rows& a, std::int64_t p) {
  const auto n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    std::int64_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]] % p;
    total = (total + term) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (total % p + p) % p;
}

inline Rows mul(const Rows& a, const Rows& b, std::int64_t p) {
  const auto n = a.size();
  Rows c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
      c[i][j] = ((s % p) + p) % p;
    }
  return c;
}

/// Closure order of matrices under multiplication using std::set.
inline std::size_t closure_order(const std::vector<Rows>& gens, std::int64_t p) {
  const auto n = gens.front().size();
  Rows id(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Rows> seen{id};
  std::vector<Rows> todo{id};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto y = mul(x, g, p);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

/// Closure of permutations given as image vectors, product x -> g(h(x)).
inline std::size_t perm_closure_order(const std::vector<std::vector<std::uint32_t>>& gens) {
  const auto n = gens.front().size();
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::vector<std::vector<std::uint32_t>> todo{id};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = x[g[i]];
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

}  // namespace oracle
