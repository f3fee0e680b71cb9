#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lef/permutation.hpp"

namespace lef {

/// Finite group given by its multiplication table. Index 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates closure, identity at index 0, inverses, and (up to order 256)
  /// associativity.
  static FiniteGroup from_table(std::vector<std::vector<std::uint32_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  /// Dihedral group of the given order (2m), built from two generating
  /// reflections of the m-gon, which sit at indices 1 and 2.
  static FiniteGroup dihedral(std::size_t order);
  static FiniteGroup symmetric(std::size_t k);
  /// Closure of permutation generators with product g*h = compose(g, h).
  /// Elements are listed in breadth-first order over the generators.
  static FiniteGroup from_permutations(const std::vector<Permutation>& gens);
  /// Index of (a, b) is a * |B| + b.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const noexcept { return table_.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t power(std::uint32_t a, std::int64_t e) const;
  std::uint64_t element_order(std::uint32_t a) const;

  /// Subgroup generated by the given indices, as a sorted index list.
  std::vector<std::uint32_t> subgroup(std::span<const std::uint32_t> gens) const;
  bool generated_by(std::span<const std::uint32_t> gens) const;

  /// Permutation realization, when the group was built from permutations.
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }

  const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return table_; }

 private:
  void finish();

  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<Permutation> perms_;
};

/// The two reflections s and s*r that generate FiniteGroup::dihedral(order).
std::pair<std::uint32_t, std::uint32_t> dihedral_reflections(const FiniteGroup& d);

}  // namespace lef
