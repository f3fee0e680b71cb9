#include "lef/elementary.hpp"

#include <sstream>

#include "lef/errors.hpp"

namespace lef {

ElemMatrix::ElemMatrix(std::size_t n, RingDescriptor ring) : n_(n), ring_(std::move(ring)) {
  if (n == 0) throw InvalidArgument("ElemMatrix: dimension must be positive");
  entries_.assign(n * n, ring_zero(ring_));
}

ElemMatrix ElemMatrix::identity(std::size_t n, const RingDescriptor& ring) {
  ElemMatrix m(n, ring);
  const auto one = ring_one(ring);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = one;
  return m;
}

void ElemMatrix::set(std::size_t i, std::size_t j, RingElement r) {
  if (i >= n_ || j >= n_) throw InvalidArgument("ElemMatrix::set: index out of range");
  if (!same_ring(ring_, ring_of(r))) throw InvalidArgument("ElemMatrix::set: entry from another ring");
  entries_[i * n_ + j] = std::move(r);
}

ElemMatrix ElemMatrix::operator*(const ElemMatrix& rhs) const {
  if (n_ != rhs.n_ || !same_ring(ring_, rhs.ring_)) throw DimensionMismatch("ElemMatrix product: shape or ring mismatch");
  ElemMatrix c(n_, ring_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const auto& a = at(i, k);
      if (ring_is_zero(a)) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& b = rhs.at(k, j);
        if (ring_is_zero(b)) continue;
        c.entries_[i * n_ + j] = ring_add(c.entries_[i * n_ + j], ring_mul(a, b));
      }
    }
  }
  return c;
}

bool ElemMatrix::is_identity() const { return *this == identity(n_, ring_); }

MatFp ElemMatrix::flatten() const {
  const auto b = rep_dim(ring_);
  MatFp out(n_ * b, characteristic(ring_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (ring_is_zero(at(i, j))) continue;
      const auto m = regular_matrix(at(i, j));
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c) out.set(i * b + r, j * b + c, m(r, c));
    }
  return out;
}

ElemMatrix ElemMatrix::unflatten(const MatFp& m, std::size_t n, const RingDescriptor& ring) {
  const auto b = rep_dim(ring);
  if (m.dim() != n * b || m.modulus() != characteristic(ring)) throw DimensionMismatch("unflatten: shape mismatch");
  ElemMatrix out(n, ring);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint8_t> c;
      if (std::holds_alternative<GroupAlgebra>(ring)) {
        // column of delta_e in the left regular matrix is the element itself
        for (std::size_t r = 0; r < b; ++r) c.push_back(static_cast<std::uint8_t>(m(i * b + r, j * b)));
      } else {
        for (std::size_t r = 0; r < b; ++r)
          for (std::size_t s = 0; s < b; ++s) c.push_back(static_cast<std::uint8_t>(m(i * b + r, j * b + s)));
      }
      out.entries_[i * n + j] = from_coordinates(ring, c);
    }
  return out;
}

ElemMatrix inverse(const ElemMatrix& a) { return ElemMatrix::unflatten(inverse(a.flatten()), a.n(), a.ring()); }

ElemMatrix commutator(const ElemMatrix& a, const ElemMatrix& b) { return inverse(a) * inverse(b) * a * b; }

std::string to_string(const ElemMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.n(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < a.n(); ++j) os << (j ? ", " : "") << to_string(a.at(i, j));
    os << "]\n";
  }
  return os.str();
}

ElemMatrix elem(std::size_t i, std::size_t j, const RingElement& r, std::size_t n) {
  if (i == j) throw InvalidArgument("elem: i = j");
  if (i < 1 || j < 1 || i > n || j > n) throw InvalidArgument("elem: index out of range");
  auto m = ElemMatrix::identity(n, ring_of(r));
  m.set(i - 1, j - 1, r);
  return m;
}

ElemMatrix dmat(const RingElement& r1, const RingElement& r2, std::size_t n) {
  require_same_ring(r1, r2);
  if (n < 2) throw InvalidArgument("dmat: n must be at least 2");
  if (!ring_is_unit(r1) || !ring_is_unit(r2)) throw InvalidArgument("dmat: entries must be units");
  auto m = ElemMatrix::identity(n, ring_of(r1));
  m.set(0, 0, r1);
  m.set(1, 1, r2);
  return m;
}

ElemMatrix order2_word(const RingElement& r) {
  const auto R = ring_of(r);
  const auto one = ring_one(R);
  const auto rinv = ring_inverse(r);
  const auto w = elem(1, 2, r, 2) * elem(2, 1, ring_neg(rinv), 2) * elem(1, 2, r, 2) * elem(1, 2, ring_neg(one), 2) *
                 elem(2, 1, one, 2) * elem(1, 2, ring_neg(one), 2);
  if (!(w == dmat(r, rinv))) throw ConsistencyError("order2_word: product differs from D(r, r^{-1})");
  return w;
}

ElemMatrix sharp_commutator(std::size_t i, std::size_t j, std::size_t k, const RingElement& r1,
                            const RingElement& r2, std::size_t n) {
  if (i == j || j == k || i == k) throw InvalidArgument("sharp_commutator: indices must be distinct");
  require_same_ring(r1, r2);
  // [g1, g2] with g1^{-1} = e_{ij}^{-r1}, g2^{-1} = e_{jk}^{-r2}
  const auto g1 = elem(i, j, r1, n), g2 = elem(j, k, r2, n);
  const auto c = elem(i, j, ring_neg(r1), n) * elem(j, k, ring_neg(r2), n) * g1 * g2;
  if (!(c == elem(i, k, ring_mul(r1, r2), n))) throw ConsistencyError("sharp_commutator: relation fails");
  return c;
}

ElemMatrix beta(std::size_t n, bool signed_corner, const RingDescriptor& ring, bool require_sl) {
  if (n < 2) throw InvalidArgument("beta: n must be at least 2");
  ElemMatrix m(n, ring);
  const auto one = ring_one(ring);
  for (std::size_t k = 0; k + 1 < n; ++k) m.set(k + 1, k, one);
  m.set(0, n - 1, signed_corner ? ring_neg(one) : one);
  if (require_sl && determinant(m.flatten()) != 1)
    throw InvalidArgument("beta: corner sign " + std::string(signed_corner ? "-1" : "+1") + " at n = " +
                          std::to_string(n) + " gives determinant != 1");
  return m;
}

}  // namespace lef
