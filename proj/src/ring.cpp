#include "lef/ring.hpp"

#include <sstream>

#include "lef/errors.hpp"

namespace lef {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

FpScalar fp(std::int64_t v, std::uint32_t p) { return {reduce(v, p), p}; }

GroupRingElement gr_zero(std::shared_ptr<const FiniteGroup> g, std::uint32_t p) {
  GroupRingElement x;
  x.coeffs.assign(g->order(), 0);
  x.group = std::move(g);
  x.p = p;
  return x;
}

void require_same_group(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.p != b.p) throw InvalidArgument("group ring: modulus mismatch");
  if (a.group != b.group && (!a.group || !b.group || a.group->table() != b.group->table()))
    throw InvalidArgument("group ring: base-group mismatch");
}

}  // namespace

RingDescriptor ring_of(const RingElement& x) {
  return std::visit(overloaded{[](const FpScalar& a) -> RingDescriptor { return PrimeField{a.p}; },
                               [](const MatFp& a) -> RingDescriptor { return MatrixRing{a.dim(), a.modulus()}; },
                               [](const GroupRingElement& a) -> RingDescriptor {
                                 return GroupAlgebra{a.group, a.p};
                               }},
                    x);
}

std::uint32_t characteristic(const RingDescriptor& r) {
  return std::visit([](const auto& d) { return d.p; }, r);
}

bool same_ring(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.index() != b.index() || characteristic(a) != characteristic(b)) return false;
  if (auto* m = std::get_if<MatrixRing>(&a)) return m->l == std::get<MatrixRing>(b).l;
  if (auto* g = std::get_if<GroupAlgebra>(&a)) {
    const auto& h = std::get<GroupAlgebra>(b);
    return g->group == h.group || g->group->table() == h.group->table();
  }
  return true;
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!same_ring(ring_of(a), ring_of(b)))
    throw InvalidArgument("mixed rings: " + describe(ring_of(a)) + " vs " + describe(ring_of(b)));
}

std::string describe(const RingDescriptor& r) {
  return std::visit(overloaded{[](const PrimeField& d) { return "F_" + std::to_string(d.p); },
                               [](const MatrixRing& d) {
                                 return "Mat_" + std::to_string(d.l) + "(F_" + std::to_string(d.p) + ")";
                               },
                               [](const GroupAlgebra& d) {
                                 return "F_" + std::to_string(d.p) + "[G" + std::to_string(d.group->order()) + "]";
                               }},
                    r);
}

RingElement ring_zero(const RingDescriptor& r) { return ring_scalar(r, 0); }
RingElement ring_one(const RingDescriptor& r) { return ring_scalar(r, 1); }

RingElement ring_scalar(const RingDescriptor& r, std::int64_t c) {
  return std::visit(overloaded{[&](const PrimeField& d) -> RingElement {
                                 require_prime_modulus(d.p);
                                 return fp(c, d.p);
                               },
                               [&](const MatrixRing& d) -> RingElement {
                                 return MatFp::identity(d.l, d.p).scaled(c);
                               },
                               [&](const GroupAlgebra& d) -> RingElement {
                                 if (!d.group) throw InvalidArgument("group algebra without a group");
                                 auto x = gr_zero(d.group, d.p);
                                 x.coeffs[0] = static_cast<std::uint8_t>(reduce(c, d.p));
                                 return x;
                               }},
                    r);
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return std::visit(overloaded{[&](const FpScalar& x) -> RingElement {
                                 return fp(std::int64_t{x.value} + std::get<FpScalar>(b).value, x.p);
                               },
                               [&](const MatFp& x) -> RingElement { return x + std::get<MatFp>(b); },
                               [&](const GroupRingElement& x) -> RingElement {
                                 const auto& y = std::get<GroupRingElement>(b);
                                 auto z = x;
                                 for (std::size_t i = 0; i < z.coeffs.size(); ++i)
                                   z.coeffs[i] = static_cast<std::uint8_t>((z.coeffs[i] + y.coeffs[i]) % x.p);
                                 return z;
                               }},
                    a);
}

RingElement ring_neg(const RingElement& a) { return ring_scale(a, -1); }

RingElement ring_sub(const RingElement& a, const RingElement& b) { return ring_add(a, ring_neg(b)); }

RingElement ring_scale(const RingElement& a, std::int64_t c) {
  return std::visit(overloaded{[&](const FpScalar& x) -> RingElement {
                                 return fp(static_cast<std::int64_t>(x.value) * reduce(c, x.p), x.p);
                               },
                               [&](const MatFp& x) -> RingElement { return x.scaled(c); },
                               [&](const GroupRingElement& x) -> RingElement {
                                 auto z = x;
                                 const auto cc = reduce(c, x.p);
                                 for (auto& v : z.coeffs) v = static_cast<std::uint8_t>(v * cc % x.p);
                                 return z;
                               }},
                    a);
}

GroupRingElement delta(std::shared_ptr<const FiniteGroup> group, std::uint32_t p, std::uint32_t g) {
  require_prime_modulus(p);
  if (g >= group->order()) throw InvalidArgument("delta: group index out of range");
  auto x = gr_zero(std::move(group), p);
  x.coeffs[g] = 1;
  return x;
}

GroupRingElement group_ring_product(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a, b);
  const auto& G = *a.group;
  const auto n = G.order();
  std::vector<std::uint32_t> acc(n, 0);
  for (std::uint32_t g = 0; g < n; ++g) {
    if (!a.coeffs[g]) continue;
    const auto& row = G.table()[g];
    for (std::uint32_t h = 0; h < n; ++h) {
      if (!b.coeffs[h]) continue;
      auto& slot = acc[row[h]];
      slot = (slot + a.coeffs[g] * b.coeffs[h]) % a.p;
    }
  }
  auto z = gr_zero(a.group, a.p);
  for (std::size_t i = 0; i < n; ++i) z.coeffs[i] = static_cast<std::uint8_t>(acc[i]);
  return z;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return std::visit(overloaded{[&](const FpScalar& x) -> RingElement {
                                 return fp(static_cast<std::int64_t>(x.value) * std::get<FpScalar>(b).value, x.p);
                               },
                               [&](const MatFp& x) -> RingElement { return x * std::get<MatFp>(b); },
                               [&](const GroupRingElement& x) -> RingElement {
                                 return group_ring_product(x, std::get<GroupRingElement>(b));
                               }},
                    a);
}

RingElement ring_pow(const RingElement& a, std::int64_t e) {
  RingElement base = e < 0 ? ring_inverse(a) : a;
  auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  RingElement r = ring_one(ring_of(a));
  while (k) {
    if (k & 1) r = ring_mul(r, base);
    k >>= 1;
    if (k) base = ring_mul(base, base);
  }
  return r;
}

bool ring_is_zero(const RingElement& a) {
  return std::visit(overloaded{[](const FpScalar& x) { return x.value == 0; },
                               [](const MatFp& x) { return x.is_zero(); },
                               [](const GroupRingElement& x) {
                                 for (auto c : x.coeffs)
                                   if (c) return false;
                                 return true;
                               }},
                    a);
}
bool ring_is_one(const RingElement& a) { return a == ring_one(ring_of(a)); }

std::size_t rep_dim(const RingDescriptor& r) {
  return std::visit(overloaded{[](const PrimeField&) -> std::size_t { return 1; },
                               [](const MatrixRing& d) { return d.l; },
                               [](const GroupAlgebra& d) { return d.group->order(); }},
                    r);
}

std::size_t vector_dim(const RingDescriptor& r) {
  return std::visit(overloaded{[](const PrimeField&) -> std::size_t { return 1; },
                               [](const MatrixRing& d) { return d.l * d.l; },
                               [](const GroupAlgebra& d) { return d.group->order(); }},
                    r);
}

MatFp regular_matrix(const RingElement& a) {
  return std::visit(overloaded{[](const FpScalar& x) {
                                 MatFp m(1, x.p);
                                 m.set(0, 0, x.value);
                                 return m;
                               },
                               [](const MatFp& x) { return x; },
                               [](const GroupRingElement& x) {
                                 const auto& G = *x.group;
                                 const auto n = G.order();
                                 MatFp m(n, x.p);
                                 // column h holds a * delta_h = sum_g a_g delta_{gh}
                                 for (std::uint32_t g = 0; g < n; ++g) {
                                   if (!x.coeffs[g]) continue;
                                   for (std::uint32_t h = 0; h < n; ++h) {
                                     const auto row = G.mul(g, h);
                                     m.set(row, h, std::int64_t{m(row, h)} + x.coeffs[g]);
                                   }
                                 }
                                 return m;
                               }},
                    a);
}

bool ring_is_unit(const RingElement& a) { return is_invertible(regular_matrix(a)); }

RingElement ring_inverse(const RingElement& a) {
  return std::visit(overloaded{[](const FpScalar& x) -> RingElement {
                                 if (x.value == 0) throw SingularMatrix("inverse of zero in F_p");
                                 return FpScalar{inv_mod_prime(x.value, x.p), x.p};
                               },
                               [](const MatFp& x) -> RingElement { return inverse(x); },
                               [](const GroupRingElement& x) -> RingElement {
                                 // b = L(a)^{-1} delta_e solves a * b = 1
                                 const auto inv = inverse(regular_matrix(x));
                                 GroupRingElement b = gr_zero(x.group, x.p);
                                 for (std::size_t g = 0; g < b.coeffs.size(); ++g)
                                   b.coeffs[g] = static_cast<std::uint8_t>(inv(g, 0));
                                 return b;
                               }},
                    a);
}

std::vector<std::uint8_t> coordinates(const RingElement& a) {
  return std::visit(overloaded{[](const FpScalar& x) { return std::vector<std::uint8_t>{static_cast<std::uint8_t>(x.value)}; },
                               [](const MatFp& x) {
                                 return std::vector<std::uint8_t>(x.data().begin(), x.data().end());
                               },
                               [](const GroupRingElement& x) { return x.coeffs; }},
                    a);
}

RingElement from_coordinates(const RingDescriptor& r, const std::vector<std::uint8_t>& c) {
  if (c.size() != vector_dim(r)) throw DimensionMismatch("from_coordinates: wrong length");
  RingElement z = ring_zero(r);
  std::visit(overloaded{[&](FpScalar& x) { x.value = c[0] % x.p; },
                        [&](MatFp& x) {
                          for (std::size_t i = 0; i < c.size(); ++i) x.data()[i] = static_cast<std::uint8_t>(c[i] % x.modulus());
                        },
                        [&](GroupRingElement& x) {
                          for (std::size_t i = 0; i < c.size(); ++i) x.coeffs[i] = static_cast<std::uint8_t>(c[i] % x.p);
                        }},
             z);
  return z;
}

RingElement random_element(const RingDescriptor& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, characteristic(r) - 1);
  std::vector<std::uint8_t> c(vector_dim(r));
  for (auto& v : c) v = static_cast<std::uint8_t>(dist(rng));
  return from_coordinates(r, c);
}

RingElement random_unit(const RingDescriptor& r, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto x = random_element(r, rng);
    if (ring_is_unit(x)) return x;
  }
  throw ConsistencyError("random_unit: no unit found in " + describe(r));
}

std::string to_string(const RingElement& a) {
  return std::visit(overloaded{[](const FpScalar& x) { return std::to_string(x.value); },
                               [](const MatFp& x) { return lef::to_string(x); },
                               [](const GroupRingElement& x) {
                                 std::ostringstream os;
                                 bool first = true;
                                 for (std::size_t g = 0; g < x.coeffs.size(); ++g) {
                                   if (!x.coeffs[g]) continue;
                                   os << (first ? "" : " + ") << unsigned{x.coeffs[g]} << "*d" << g;
                                   first = false;
                                 }
                                 if (first) os << '0';
                                 return os.str();
                               }},
                    a);
}

std::string encode(const RingElement& a) {
  auto c = coordinates(a);
  std::string s(1, static_cast<char>(a.index()));
  s.append(c.begin(), c.end());
  return s;
}

}  // namespace lef
