#include "lef/echelon.hpp"

#include "lef/errors.hpp"

namespace lef {

bool EchelonBasis::reduce(std::vector<std::uint8_t>& v) const {
  if (v.size() != n_) throw DimensionMismatch("EchelonBasis: vector length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint32_t c = v[pivots_[r]];
    if (!c) continue;
    const auto& row = rows_[r];
    const std::uint32_t f = p_ - c;
    for (std::size_t j = 0; j < n_; ++j)
      if (row[j]) v[j] = static_cast<std::uint8_t>((v[j] + f * row[j]) % p_);
  }
  for (auto x : v)
    if (x) return true;
  return false;
}

bool EchelonBasis::insert(std::vector<std::uint8_t> v) {
  if (!reduce(v)) return false;
  std::size_t piv = 0;
  while (v[piv] == 0) ++piv;
  const std::uint32_t inv = inv_mod_prime(v[piv], p_);
  for (auto& x : v) x = static_cast<std::uint8_t>(x * inv % p_);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool solve_combination(const std::vector<std::vector<std::uint8_t>>& basis, const std::vector<std::uint8_t>& target,
                       std::uint32_t p, std::vector<std::uint32_t>& coeffs) {
  // Gauss-Jordan on the augmented system [b_1 ... b_k | target].
  const std::size_t k = basis.size(), n = target.size();
  std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw DimensionMismatch("solve_combination: vector length");
    for (std::size_t i = 0; i < n; ++i) a[i][j] = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) a[i][k] = target[i];
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t r = row;
    while (r < n && a[r][col] == 0) ++r;
    if (r == n) continue;
    std::swap(a[r], a[row]);
    const auto inv = inv_mod_prime(a[row][col], p);
    for (auto& x : a[row]) x = x * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const auto f = p - a[i][col];
      for (std::size_t j = 0; j <= k; ++j) a[i][j] = (a[i][j] + f * a[row][j]) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][k]) return false;
  coeffs.assign(k, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) coeffs[pivot_col[r]] = a[r][k];
  return true;
}

}  // namespace lef
