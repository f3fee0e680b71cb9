#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lef/mat_fp.hpp"
#include "lef/ring.hpp"

namespace lef {

/// n x n matrix with entries in one of the supported rings.
class ElemMatrix {
 public:
  /// Zero matrix.
  ElemMatrix(std::size_t n, RingDescriptor ring);
  static ElemMatrix identity(std::size_t n, const RingDescriptor& ring);
  /// Inverse of `flatten`.
  static ElemMatrix unflatten(const MatFp& m, std::size_t n, const RingDescriptor& ring);

  std::size_t n() const noexcept { return n_; }
  const RingDescriptor& ring() const noexcept { return ring_; }

  /// 0-based entry access.
  const RingElement& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, RingElement r);

  ElemMatrix operator*(const ElemMatrix& rhs) const;
  bool is_identity() const;

  /// Block matrix over F_p of size n * rep_dim(ring), each entry replaced by
  /// its faithful matrix (row-major block order).
  MatFp flatten() const;

  friend bool operator==(const ElemMatrix& a, const ElemMatrix& b) { return a.entries_ == b.entries_ && a.n_ == b.n_; }

 private:
  std::size_t n_;
  RingDescriptor ring_;
  std::vector<RingElement> entries_;
};

ElemMatrix inverse(const ElemMatrix& a);
/// [a, b] = a^{-1} b^{-1} a b.
ElemMatrix commutator(const ElemMatrix& a, const ElemMatrix& b);
std::string to_string(const ElemMatrix& a);

/// e_{i,j}^r with 1-based i != j.
ElemMatrix elem(std::size_t i, std::size_t j, const RingElement& r, std::size_t n);

/// diag(r1, r2) padded with identity to n >= 2 blocks. Requires units.
ElemMatrix dmat(const RingElement& r1, const RingElement& r2, std::size_t n = 2);

/// e_{12}^r e_{21}^{-r^{-1}} e_{12}^r e_{12}^{-1} e_{21}^{1} e_{12}^{-1}; throws
/// ConsistencyError unless it equals dmat(r, r^{-1}).
ElemMatrix order2_word(const RingElement& r);

/// [e_{ij}^{r1}, e_{jk}^{r2}] checked against e_{ik}^{r1 r2} (1-based,
/// pairwise distinct). Throws ConsistencyError on mismatch.
ElemMatrix sharp_commutator(std::size_t i, std::size_t j, std::size_t k, const RingElement& r1,
                            const RingElement& r2, std::size_t n);

/// Cyclic shift e_k -> e_{k+1} with top-right entry -1 (signed) or +1,
/// entries scalar multiples of the ring identity. With require_sl the
/// flattened determinant must be 1.
ElemMatrix beta(std::size_t n, bool signed_corner, const RingDescriptor& ring, bool require_sl = true);
/// Sign choice giving determinant 1 over the scalars: signed iff n is even.
constexpr bool beta_signed_for(std::size_t n) { return n % 2 == 0; }

}  // namespace lef
