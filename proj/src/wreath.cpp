#include "lef/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lef/certificate.hpp"

namespace lef {

std::string to_string(WreathConvention c) { return c == WreathConvention::Right ? "right" : "left"; }

std::vector<std::uint64_t> WreathMarkingParams::support_points() const {
  if (k < 1 || k > 62) throw InvalidArgument("wreath: k must be in 1..62");
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> pts;
  for (std::size_t j = 1; j <= J; ++j) pts.push_back(j < 64 ? (std::uint64_t{1} << j) & mask : 0);
  for (std::size_t j = 1; j <= J; ++j) pts.push_back(j + J < 64 ? (std::uint64_t{1} << (j + J)) & mask : 0);
  return pts;
}

SeparationReport separation_check(const WreathMarkingParams& params) {
  SeparationReport r;
  const auto pts = params.support_points();
  const std::uint64_t mask = (std::uint64_t{1} << params.k) - 1;
  r.points = pts.size();
  std::set<std::uint64_t> p(pts.begin(), pts.end());
  r.points_distinct = p.size() == pts.size() && !p.count(0);
  if (!r.points_distinct) r.failure = "support points collide or vanish mod 2^" + std::to_string(params.k);
  std::set<std::uint64_t> diffs, sums;
  std::size_t nd = 0, ns = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      diffs.insert((pts[i] - pts[j]) & mask);
      ++nd;
      if (i < j) {
        sums.insert((pts[i] + pts[j]) & mask);
        ++ns;
      }
    }
  r.differences_distinct = diffs.size() == nd && !diffs.count(0);
  r.sums_distinct = sums.size() == ns;
  if (r.failure.empty() && !r.differences_distinct) r.failure = "pairwise differences collide";
  if (r.failure.empty() && !r.sums_distinct) r.failure = "pairwise sums collide";
  return r;
}

namespace {

MatFp commutator_of(const MatFp& c, const MatFp& d) { return inverse(c) * inverse(d) * c * d; }

MatFp kron_identity(const MatFp& t, std::size_t l) {
  MatFp r(t.dim() * l, t.modulus());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (t(i, j))
        for (std::size_t a = 0; a < l; ++a) r.set(i * l + a, j * l + a, t(i, j));
  return r;
}

/// Cycle lengths with the product of entries along each cycle, sorted.
std::vector<std::pair<std::size_t, std::uint32_t>> signed_cycle_type(const MatFp& m) {
  const auto n = m.dim();
  std::vector<std::size_t> to(n);
  std::vector<std::uint32_t> val(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m(i, j)) to[j] = i, val[j] = m(i, j);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<std::size_t, std::uint32_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    std::uint64_t c = 1;
    for (std::size_t x = s; !seen[x]; x = to[x]) {
      seen[x] = 1;
      ++len;
      c = c * val[x] % m.modulus();
    }
    out.emplace_back(len, static_cast<std::uint32_t>(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Det-1 signed permutation matrices of size n over F_p.
std::vector<MatFp> signed_permutations_sl(std::size_t n, std::uint32_t p) {
  std::vector<MatFp> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t sign_masks = p == 2 ? 1 : std::size_t{1} << n;
  do {
    for (std::size_t mask = 0; mask < sign_masks; ++mask) {
      MatFp m(n, p);
      for (std::size_t j = 0; j < n; ++j) m.set(perm[j], j, (mask >> j) & 1 ? -1 : 1);
      if (determinant(m) == 1) out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Block matrix T with T(i, j) = c when block (i, j) of m is c I, if m is
/// block-scalar with entries in {0, 1, -1} and one nonzero block per row.
std::optional<MatFp> block_signed_permutation(const MatFp& m, std::size_t n, std::size_t l) {
  MatFp t(n, m.modulus());
  const auto minus = m.modulus() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = block(m, i, j, l);
      const auto c = b(0, 0);
      if (!(b == MatFp::identity(l, m.modulus()).scaled(c))) return std::nullopt;
      if (c != 0 && c != 1 && c != minus) return std::nullopt;
      if (c) ++nonzero;
      t.set(i, j, c);
    }
    if (nonzero != 1) return std::nullopt;
  }
  return t;
}

}  // namespace

std::pair<MatFp, MatFp> find_commutator_pair(const MatFp& target, std::size_t n, std::size_t l) {
  const auto p = target.modulus();
  if (target.dim() != n * l) throw DimensionMismatch("find_commutator_pair: shape");
  auto verified = [&](MatFp c, MatFp d) {
    if (!(commutator_of(c, d) == target)) throw ConsistencyError("find_commutator_pair: pair does not verify");
    return std::make_pair(std::move(c), std::move(d));
  };
  const auto I = MatFp::identity(n * l, p);
  if (target.is_identity()) return verified(I, I);
  if (const auto e = as_block_elementary(target, n, l)) {
    std::size_t k = 0;
    while (k == e->u || k == e->v) ++k;
    if (k >= n) throw InvalidArgument("find_commutator_pair: need at least 3 blocks");
    auto c = I, d = I;
    for (std::size_t a = 0; a < l; ++a) {
      for (std::size_t b = 0; b < l; ++b) c.set(e->u * l + a, k * l + b, e->entry(a, b));
      d.set(k * l + a, e->v * l + a, 1);
    }
    return verified(c, d);
  }
  const auto t = block_signed_permutation(target, n, l);
  if (!t) throw InvalidArgument("find_commutator_pair: target is neither elementary nor block-monomial");
  if (n > 7) throw CapExceeded("find_commutator_pair: signed permutation search", n);
  {
    // Commutators of signed permutations are even with entry product 1.
    std::size_t even_cycles = 0;
    std::uint64_t prod = 1;
    for (auto [len, c] : signed_cycle_type(*t)) {
      even_cycles += len % 2 == 0;
      prod = prod * c % p;
    }
    if (even_cycles % 2 != 0 || prod != 1)
      throw InvalidArgument("find_commutator_pair: block-monomial target is not a commutator of signed permutations"
                            " (odd permutation or entry product -1)");
  }
  const auto group = signed_permutations_sl(n, p);
  for (const auto& s : group) {
    const auto st = s * *t;
    if (signed_cycle_type(s) != signed_cycle_type(st)) continue;
    for (const auto& tau : group)
      if (s * tau == tau * st) return verified(kron_identity(s, l), kron_identity(tau, l));
  }
  throw ConsistencyError("find_commutator_pair: search exhausted");
}

WreathTwoMarking build_two_marking_wreath(const MarkingBundle& two, const MarkingBundle& nine,
                                          const WreathMarkingParams& params) {
  if (two.dim() != nine.dim() || two.p != nine.p) throw DimensionMismatch("build_two_marking_wreath: markings differ in shape");
  if (params.J < 1 || params.J > nine.mats.size()) throw InvalidArgument("build_two_marking_wreath: J must be in 1..9");
  const auto sep = separation_check(params);
  if (!sep.ok()) throw InvalidArgument("build_two_marking_wreath: " + sep.failure);
  WreathTwoMarking out{MatrixWreath{MatrixModel{two.dim(), two.p}, params.k, params.convention}, {}, {}, {}, {}, {}};
  const auto& W = out.model;
  out.w1 = W.lift({{0, two.mats[0]}, {1, two.mats[1]}});
  const auto pts = params.support_points();
  std::map<std::uint64_t, MatFp> f2;
  for (std::size_t j = 0; j < params.J; ++j) {
    out.targets.push_back(nine.mats[j]);
    out.pairs.push_back(find_commutator_pair(nine.mats[j], nine.n, nine.l));
    f2.emplace(pts[j], out.pairs.back().first);
    f2.emplace(pts[j + params.J], out.pairs.back().second);
  }
  out.w2 = W.lift(std::move(f2));
  out.u = W.shift(1);
  return out;
}

namespace {

/// x with x = 1 mod a and x = 0 mod b, for coprime a, b.
std::uint64_t crt_unit(std::uint64_t a, std::uint64_t b) {
  if (a == 1) return 0;
  // b * (b^{-1} mod a)
  std::int64_t r0 = static_cast<std::int64_t>(a), r1 = static_cast<std::int64_t>(b % a), s0 = 0, s1 = 1;
  while (r1) {
    const auto q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  const auto inv = static_cast<std::uint64_t>((s0 % static_cast<std::int64_t>(a) + static_cast<std::int64_t>(a)) %
                                              static_cast<std::int64_t>(a));
  return b * inv;
}

}  // namespace

CoprimeExtraction coprime_extract(const MatrixWreath& W, const MatrixWreathElement& w1) {
  for (const auto& [slot, v] : w1.base)
    if (slot > 1) throw InvalidArgument("coprime_extract: w1 must be supported on slots 0 and 1");
  if (w1.top != 0) throw InvalidArgument("coprime_extract: w1 must lie in the base");
  const auto id = W.base.identity();
  const auto t1 = w1.base.count(0) ? w1.base.at(0) : id;
  const auto t2 = w1.base.count(1) ? w1.base.at(1) : id;
  CoprimeExtraction r;
  r.order0 = element_order(t1);
  r.order1 = element_order(t2);
  if (!r.order0 || !r.order1) throw CapExceeded("coprime_extract: element order", 1'000'000);
  if (std::gcd(r.order0, r.order1) != 1)
    throw InvalidArgument("coprime_extract: slot orders " + std::to_string(r.order0) + " and " + std::to_string(r.order1) +
                          " are not coprime");
  r.exponent0 = crt_unit(r.order0, r.order1);
  r.exponent1 = crt_unit(r.order1, r.order0);
  r.slot0 = W.power(w1, r.exponent0);
  r.slot1 = W.power(w1, r.exponent1);
  if (W.encode(r.slot0) != W.encode(W.lift({{0, t1}})) || W.encode(r.slot1) != W.encode(W.lift({{1, t2}})))
    throw ConsistencyError("coprime_extract: powers do not isolate the slots");
  return r;
}

}  // namespace lef
