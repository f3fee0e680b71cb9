#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lef/fp.hpp"

namespace lef {

/// Dense square matrix over the prime field F_p, row-major, one byte per entry.
class MatFp {
 public:
  MatFp() = default;
  MatFp(std::size_t dim, std::uint32_t p);

  static MatFp identity(std::size_t dim, std::uint32_t p);
  static MatFp from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p);

  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    data_[i * dim_ + j] = static_cast<std::uint8_t>(reduce(v, p_));
  }

  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> data() noexcept { return data_; }

  bool is_identity() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  /// Injective byte encoding (dimension, modulus, entries).
  std::string encode() const;

  friend bool operator==(const MatFp&, const MatFp&) = default;

  MatFp operator*(const MatFp& rhs) const;
  MatFp operator+(const MatFp& rhs) const;
  MatFp operator-(const MatFp& rhs) const;
  MatFp operator-() const;
  MatFp scaled(std::int64_t c) const;
  MatFp transposed() const;

 private:
  std::size_t dim_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint8_t> data_;
};

/// Throws DimensionMismatch unless a and b have equal dimension and modulus.
void require_compatible(const MatFp& a, const MatFp& b);

std::uint32_t determinant(const MatFp& a);
/// Throws SingularMatrix when a is not invertible.
MatFp inverse(const MatFp& a);
bool is_invertible(const MatFp& a);
std::size_t rank(const MatFp& a);
MatFp power(const MatFp& a, std::int64_t e);

/// Multiplicative order of an invertible matrix; 0 if it exceeds `cap`.
std::uint64_t element_order(const MatFp& a, std::uint64_t cap = 1'000'000);

/// Block (bi, bj) of size b x b.
MatFp block(const MatFp& a, std::size_t bi, std::size_t bj, std::size_t b);

std::string to_string(const MatFp& a);

}  // namespace lef
