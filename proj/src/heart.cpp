#include "lef/heart.hpp"

#include <deque>

#include "lef/echelon.hpp"
#include "lef/errors.hpp"
#include "lef/marked_group.hpp"

namespace lef {

HeartBasis::HeartBasis(std::size_t set_size, std::uint32_t p) : n_(set_size), p_(p) {
  require_prime_modulus(p);
  if (set_size < 3) throw InvalidArgument("HeartBasis: #L must be at least 3");
  if (set_size % p != 0)
    throw InvalidArgument("HeartBasis: p = " + std::to_string(p) + " does not divide #L = " + std::to_string(set_size));
}

MatFp heart_matrix(const Permutation& sigma, const HeartBasis& basis) {
  const auto n = basis.set_size();
  if (sigma.degree() != n) throw DimensionMismatch("heart_matrix: degree differs from #L");
  const auto d = basis.dim();
  MatFp m(d, basis.p());
  // sigma . v_i = c with c_j = [sigma(i) = j] - [sigma(0) = j] for j >= 1;
  // its class has coordinates c_j - c_{n-1}.
  std::vector<std::int64_t> c(n);
  for (std::uint32_t i = 1; i <= d; ++i) {
    std::fill(c.begin(), c.end(), 0);
    c[sigma(i)] += 1;
    c[sigma(0)] -= 1;
    c[0] = 0;
    for (std::size_t j = 1; j <= d; ++j) m.set(j - 1, i - 1, c[j] - c[n - 1]);
  }
  return m;
}

std::size_t algebra_span_dim(const std::vector<MatFp>& mats) {
  if (mats.empty()) throw InvalidArgument("algebra_span_dim: empty input");
  const auto d = mats.front().dim();
  const auto p = mats.front().modulus();
  for (const auto& m : mats) require_compatible(m, mats.front());
  auto flat = [](const MatFp& m) { return std::vector<std::uint8_t>(m.data().begin(), m.data().end()); };
  EchelonBasis basis(d * d, p);
  std::deque<MatFp> work;
  const auto id = MatFp::identity(d, p);
  basis.insert(flat(id));
  work.push_back(id);
  // Words in the generators applied to 1 span the algebra, so closing the
  // span under left multiplication suffices.
  while (!work.empty() && basis.rank() < d * d) {
    auto b = std::move(work.front());
    work.pop_front();
    for (const auto& g : mats) {
      auto prod = g * b;
      if (basis.insert(flat(prod))) work.push_back(std::move(prod));
    }
  }
  return basis.rank();
}

bool is_irreducible_heart(const HeartBasis& basis, const std::vector<Permutation>& gens) {
  if (gens.empty()) throw InvalidArgument("is_irreducible_heart: no generators");
  const auto n = basis.set_size();
  if (n <= 8) {
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    if (enumerate_subgroup(PermutationModel{n}, gens) != fact)
      throw InvalidArgument("is_irreducible_heart: generators do not generate Sym(L)");
  }
  std::vector<MatFp> mats;
  for (const auto& g : gens) mats.push_back(heart_matrix(g, basis));
  return algebra_span_dim(mats) == basis.dim() * basis.dim();
}

MatFp heart_of_ring_elt(const GroupRingElement& a, const HeartBasis& basis) {
  if (a.p != basis.p()) throw InvalidArgument("heart_of_ring_elt: modulus mismatch");
  const auto& perms = a.group->permutations();
  if (perms.size() != a.group->order() || perms.front().degree() != basis.set_size())
    throw InvalidArgument("heart_of_ring_elt: base group is not realized on L");
  MatFp acc(basis.dim(), basis.p());
  for (std::size_t g = 0; g < a.coeffs.size(); ++g)
    if (a.coeffs[g]) acc = acc + heart_matrix(perms[g], basis).scaled(a.coeffs[g]);
  return acc;
}

}  // namespace lef
