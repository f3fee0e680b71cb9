#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lef/fp.hpp"

namespace lef {

/// Incremental row-echelon basis of a subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t n, std::uint32_t p) : n_(n), p_(p) {}

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces v against the basis in place; returns true when v is left nonzero.
  bool reduce(std::vector<std::uint8_t>& v) const;

  /// Adds v if it is independent; returns whether it was added.
  bool insert(std::vector<std::uint8_t> v);

  bool contains(std::vector<std::uint8_t> v) const { return !reduce(v); }

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint8_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves x_1 b_1 + ... + x_k b_k = target for given vectors b_i over F_p.
/// Returns false when target is not in their span.
bool solve_combination(const std::vector<std::vector<std::uint8_t>>& basis, const std::vector<std::uint8_t>& target,
                       std::uint32_t p, std::vector<std::uint32_t>& coeffs);

}  // namespace lef
