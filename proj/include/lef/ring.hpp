#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "lef/finite_group.hpp"
#include "lef/fp.hpp"
#include "lef/mat_fp.hpp"

namespace lef {

/// Element of F_p[G]: one coefficient per group index.
struct GroupRingElement {
  std::shared_ptr<const FiniteGroup> group;
  std::uint32_t p = 2;
  std::vector<std::uint8_t> coeffs;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.p == b.p && a.coeffs == b.coeffs &&
           (a.group == b.group || (a.group && b.group && a.group->table() == b.group->table()));
  }
};

/// Value in F_p, Mat_l(F_p) or F_p[G].
using RingElement = std::variant<FpScalar, MatFp, GroupRingElement>;

struct PrimeField {
  std::uint32_t p;
};
struct MatrixRing {
  std::size_t l;
  std::uint32_t p;
};
struct GroupAlgebra {
  std::shared_ptr<const FiniteGroup> group;
  std::uint32_t p;
};
using RingDescriptor = std::variant<PrimeField, MatrixRing, GroupAlgebra>;

RingDescriptor ring_of(const RingElement& x);
std::uint32_t characteristic(const RingDescriptor& r);
bool same_ring(const RingDescriptor& a, const RingDescriptor& b);
/// Throws InvalidArgument unless both values lie in one ring instance.
void require_same_ring(const RingElement& a, const RingElement& b);
std::string describe(const RingDescriptor& r);

RingElement ring_zero(const RingDescriptor& r);
RingElement ring_one(const RingDescriptor& r);
/// Image of the integer c under Z -> R.
RingElement ring_scalar(const RingDescriptor& r, std::int64_t c);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_scale(const RingElement& a, std::int64_t c);
/// Negative exponents require a unit.
RingElement ring_pow(const RingElement& a, std::int64_t e);

bool ring_is_zero(const RingElement& a);
bool ring_is_one(const RingElement& a);
bool ring_is_unit(const RingElement& a);
/// Throws SingularMatrix for non-units.
RingElement ring_inverse(const RingElement& a);

/// Dimension of the faithful F_p-representation used by `regular_matrix`.
std::size_t rep_dim(const RingDescriptor& r);
/// Faithful matrix of a: 1x1 for F_p, a itself for Mat_l, and the left
/// regular representation (column g = a * delta_g) for F_p[G].
MatFp regular_matrix(const RingElement& a);
/// Dimension of R as an F_p-vector space.
std::size_t vector_dim(const RingDescriptor& r);
/// Coordinates of a in the standard F_p-basis of R.
std::vector<std::uint8_t> coordinates(const RingElement& a);
RingElement from_coordinates(const RingDescriptor& r, const std::vector<std::uint8_t>& c);

RingElement random_element(const RingDescriptor& r, std::mt19937_64& rng);
RingElement random_unit(const RingDescriptor& r, std::mt19937_64& rng);

std::string to_string(const RingElement& a);
std::string encode(const RingElement& a);

/// delta_g in F_p[G].
GroupRingElement delta(std::shared_ptr<const FiniteGroup> group, std::uint32_t p, std::uint32_t g);
/// Convolution product; throws InvalidArgument on base-group mismatch.
GroupRingElement group_ring_product(const GroupRingElement& a, const GroupRingElement& b);

}  // namespace lef
