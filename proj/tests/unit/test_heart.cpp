#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lef/errors.hpp"
#include "lef/heart.hpp"
#include "oracles.hpp"

using namespace lef;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

/// Heart action computed from scratch: act on a zero-sum vector, subtract a
/// multiple of the all-ones vector so the last coordinate vanishes, and
/// read coordinates 1..n-2 in the v_i basis.
MatFp heart_oracle(const Permutation& s, std::size_t n, std::uint32_t p) {
  MatFp m(n - 2, p);
  for (std::size_t i = 1; i <= n - 2; ++i) {
    std::vector<std::int64_t> x(n, 0);
    x[i] = 1;
    x[0] = -1;
    std::vector<std::int64_t> y(n, 0);
    for (std::size_t h = 0; h < n; ++h) y[s(static_cast<std::uint32_t>(h))] += x[h];
    const auto shift = y[n - 1];
    for (auto& v : y) v -= shift;
    for (std::size_t j = 1; j <= n - 2; ++j) m.set(j - 1, i - 1, y[j]);
  }
  return m;
}

}  // namespace

TEST(Heart, IdentityMatrix) {
  HeartBasis b(6, 3);
  EXPECT_TRUE(heart_matrix(Permutation::identity(6), b).is_identity());
}

TEST(Heart, OneDimensionalCase) {
  HeartBasis b(3, 3);
  EXPECT_EQ(b.dim(), 1u);
  EXPECT_EQ(heart_matrix(Permutation::transposition(3, 0, 1), b)(0, 0), 2u);
  EXPECT_EQ(heart_matrix(Permutation::transposition(3, 1, 2), b)(0, 0), 2u);
  EXPECT_EQ(heart_matrix(Permutation::cycle(3, {0, 1, 2}), b)(0, 0), 1u);
}

TEST(Heart, MatchesIndependentComputation) {
  std::mt19937_64 rng(5);
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{6, 3}, {9, 3}, {10, 5}, {8, 2}}) {
    HeartBasis b(n, p);
    for (int t = 0; t < 20; ++t) {
      auto s = random_perm(n, rng);
      EXPECT_EQ(heart_matrix(s, b), heart_oracle(s, n, p));
    }
  }
}

TEST(Heart, MultiplicativeOnRandomPairs) {
  std::mt19937_64 rng(7);
  HeartBasis b(6, 3);
  for (int t = 0; t < 200; ++t) {
    auto s = random_perm(6, rng), u = random_perm(6, rng);
    EXPECT_EQ(heart_matrix(compose(s, u), b), heart_matrix(s, b) * heart_matrix(u, b));
  }
}

TEST(Heart, RequiresPDividingSize) {
  EXPECT_THROW(HeartBasis(5, 3), InvalidArgument);
  EXPECT_THROW(HeartBasis(7, 3), InvalidArgument);
  HeartBasis b(6, 3);
  EXPECT_THROW(heart_matrix(Permutation::identity(5), b), DimensionMismatch);
}

TEST(Heart, DeterminantsAreSigns) {
  std::mt19937_64 rng(9);
  HeartBasis b(9, 3);
  for (int t = 0; t < 100; ++t) {
    auto s = random_perm(9, rng);
    const auto d = determinant(heart_matrix(s, b));
    EXPECT_TRUE(d == 1 || d == 2);
    if (sign(s) == 1) EXPECT_EQ(d, 1u);
  }
}

TEST(Heart, FaithfulExhaustive) {
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{5, 5}, {6, 2}, {6, 3}, {7, 7}, {8, 2}}) {
    HeartBasis b(n, p);
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    std::set<std::string> seen;
    std::size_t count = 0;
    do {
      ++count;
      EXPECT_TRUE(seen.insert(heart_matrix(Permutation(img), b).encode()).second);
    } while (std::next_permutation(img.begin(), img.end()));
    EXPECT_EQ(seen.size(), count);
  }
}

TEST(AlgebraSpan, Examples) {
  EXPECT_EQ(algebra_span_dim({MatFp::identity(4, 3)}), 1u);
  auto e12 = MatFp(3, 2);
  e12.set(0, 1, 1);
  auto cyc = MatFp(3, 2);
  cyc.set(1, 0, 1);
  cyc.set(2, 1, 1);
  cyc.set(0, 2, 1);
  EXPECT_EQ(algebra_span_dim({e12, cyc}), 9u);
  EXPECT_THROW(algebra_span_dim({}), InvalidArgument);
  // diagonal matrices only
  EXPECT_EQ(algebra_span_dim({MatFp::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}, 5)}), 3u);
}

TEST(AlgebraSpan, SixMarkingHeartIsFullMatrixAlgebra) {
  for (std::size_t n : {6u, 9u, 12u}) {
    const auto L = FiniteGroup::cyclic(n);
    HeartBasis b(L, 3);
    const auto gens = six_tuple(L, 1, 1, 1);
    std::vector<MatFp> mats;
    for (const auto& g : gens) mats.push_back(heart_matrix(g, b));
    EXPECT_EQ(algebra_span_dim(mats), (n - 2) * (n - 2)) << n;
  }
  const auto Z6 = FiniteGroup::cyclic(6);
  EXPECT_TRUE(is_irreducible_heart(HeartBasis(6, 3), six_tuple(Z6, 1, 2, 3)));
  EXPECT_TRUE(is_irreducible_heart(HeartBasis(3, 3), {Permutation::transposition(3, 0, 1), Permutation::cycle(3, {0, 1, 2})}));
}

TEST(AlgebraSpan, IdentityIsReducibleAndNonGeneratingRejected) {
  EXPECT_THROW(is_irreducible_heart(HeartBasis(6, 3), {Permutation::identity(6)}), InvalidArgument);
  std::vector<MatFp> mats{heart_matrix(Permutation::identity(6), HeartBasis(6, 3))};
  EXPECT_EQ(algebra_span_dim(mats), 1u);
}

TEST(Heart, RingElementIsHomomorphism) {
  auto G = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(6));
  HeartBasis b(6, 3);
  std::mt19937_64 rng(13);
  const RingDescriptor R = GroupAlgebra{G, 3};
  EXPECT_TRUE(heart_of_ring_elt(delta(G, 3, 0), b).is_identity());
  for (int t = 0; t < 100; ++t) {
    // sparse random elements keep the 720-term convolution cheap
    auto sparse = [&] {
      GroupRingElement x = std::get<GroupRingElement>(ring_zero(R));
      for (int k = 0; k < 3; ++k) x.coeffs[rng() % 720] = static_cast<std::uint8_t>(1 + rng() % 2);
      return x;
    };
    auto a = sparse(), c = sparse();
    EXPECT_EQ(heart_of_ring_elt(group_ring_product(a, c), b), heart_of_ring_elt(a, b) * heart_of_ring_elt(c, b));
  }
  auto s = delta(G, 3, 1);
  s.coeffs[2] = 1;
  EXPECT_EQ(heart_of_ring_elt(s, b), heart_matrix(G->permutations()[1], b) + heart_matrix(G->permutations()[2], b));
}
