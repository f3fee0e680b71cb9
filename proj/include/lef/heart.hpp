#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lef/mat_fp.hpp"
#include "lef/perm_groups.hpp"
#include "lef/ring.hpp"

namespace lef {

/// Basis of U = V / F_p 1, where V is the zero-sum subspace of F_p^L.
/// With v_i = delta_i - delta_0 (i = 1..#L-1) as basis of V, U has the
/// basis [v_1], ..., [v_{#L-2}]; since p | #L, [v_{#L-1}] = -sum of the others.
class HeartBasis {
 public:
  HeartBasis() = default;
  /// Requires p prime, p | set_size and set_size >= 3.
  HeartBasis(std::size_t set_size, std::uint32_t p);
  HeartBasis(const LabeledSet& L, std::uint32_t p) : HeartBasis(L.order(), p) {}

  std::size_t set_size() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return n_ - 2; }

 private:
  std::size_t n_ = 0;
  std::uint32_t p_ = 2;
};

/// Matrix of sigma acting on U by sigma . delta_h = delta_{sigma(h)}.
/// Multiplicative: heart_matrix(compose(s, t)) = heart_matrix(s) * heart_matrix(t).
MatFp heart_matrix(const Permutation& sigma, const HeartBasis& basis);

/// Dimension of the unital F_p-subalgebra generated by the matrices.
std::size_t algebra_span_dim(const std::vector<MatFp>& mats);

/// Burnside test: the heart images of gens span all of Mat_{#L-2}(F_p).
/// For #L <= 8 the generators are first checked to generate Sym(L).
bool is_irreducible_heart(const HeartBasis& basis, const std::vector<Permutation>& gens);

/// Linear extension of heart_matrix to F_p[G], where G carries a
/// permutation realization of degree #L.
MatFp heart_of_ring_elt(const GroupRingElement& a, const HeartBasis& basis);

}  // namespace lef
