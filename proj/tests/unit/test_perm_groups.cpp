#include <gtest/gtest.h>

#include <random>

#include "lef/errors.hpp"
#include "lef/perm_groups.hpp"
#include "oracles.hpp"

using namespace lef;

namespace {

/// Parity by counting inversions of the image array.
int parity_by_inversions(const Permutation& s) {
  int inv = 0;
  for (std::size_t i = 0; i < s.degree(); ++i)
    for (std::size_t j = i + 1; j < s.degree(); ++j) inv += s(static_cast<std::uint32_t>(i)) > s(static_cast<std::uint32_t>(j));
  return inv % 2 ? -1 : 1;
}

std::vector<FiniteGroup> small_groups() {
  return {FiniteGroup::cyclic(5),     FiniteGroup::cyclic(6),    FiniteGroup::symmetric(3),
          FiniteGroup::dihedral(8),   FiniteGroup::symmetric(4), FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(6)),
          FiniteGroup::dihedral(12)};
}

}  // namespace

TEST(Permutation, ComposeIsRightToLeft) {
  const auto s = Permutation::cycle(3, {0, 1});
  const auto t = Permutation::cycle(3, {1, 2});
  const auto st = compose(s, t);
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_EQ(st(x), s(t(x)));
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidArgument);
}

TEST(Permutation, OrderSignCycles) {
  const auto c = Permutation::cycle(6, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(order(c), 6u);
  EXPECT_EQ(sign(c), -1);
  EXPECT_EQ(to_string(c), "(0 1 2 3 4 5)");
  EXPECT_EQ(order(compose(Permutation::cycle(5, {0, 1}), Permutation::cycle(5, {2, 3, 4}))), 6u);
}

TEST(FiniteGroup, Constructors) {
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24u);
  EXPECT_EQ(FiniteGroup::dihedral(8).order(), 8u);
  const auto d8 = FiniteGroup::dihedral(8);
  auto [r1, r2] = dihedral_reflections(d8);
  EXPECT_EQ(d8.element_order(r1), 2u);
  EXPECT_EQ(d8.element_order(r2), 2u);
  const std::uint32_t gens[] = {r1, r2};
  EXPECT_TRUE(d8.generated_by(gens));
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidArgument);
  EXPECT_THROW(FiniteGroup::dihedral(7), InvalidArgument);
}

TEST(Chi, TranspositionOfIdentityAndG) {
  const auto Z3 = FiniteGroup::cyclic(3);
  EXPECT_EQ(chi(1, Z3), Permutation::transposition(3, 0, 1));
  const auto S3 = FiniteGroup::symmetric(3);
  for (std::uint32_t g = 1; g < 6; ++g) EXPECT_TRUE(compose(chi(g, S3), chi(g, S3)).is_identity());
  const auto Z6 = FiniteGroup::cyclic(6);
  EXPECT_EQ(chi(4, Z6), Permutation::transposition(6, 0, 4));
  EXPECT_EQ(parity_by_inversions(chi(4, Z6)), -1);
  EXPECT_EQ(sign(chi(4, Z6)), -1);
  EXPECT_THROW(chi(0, Z6), InvalidArgument);
}

TEST(Theta, RightMultiplication) {
  const auto Z6 = FiniteGroup::cyclic(6);
  EXPECT_TRUE(theta(0, Z6).is_identity());
  EXPECT_EQ(theta(1, Z6), Permutation::cycle(6, {0, 1, 2, 3, 4, 5}));
  const auto D8 = FiniteGroup::dihedral(8);
  for (std::uint32_t g = 0; g < 8; ++g) {
    // iterate composition until the identity
    auto x = theta(g, D8);
    std::uint64_t k = 1;
    while (!x.is_identity()) {
      x = compose(x, theta(g, D8));
      ++k;
    }
    EXPECT_EQ(k, D8.element_order(g));
    EXPECT_EQ(order(theta(g, D8)), D8.element_order(g));
  }
}

// x(gh) = (xg)h, so theta(gh) applies theta(g) first.
TEST(Theta, AntiHomomorphismExhaustive) {
  for (const auto& L : small_groups()) {
    ASSERT_LE(L.order(), 48u);
    for (std::uint32_t g = 0; g < L.order(); ++g)
      for (std::uint32_t h = 0; h < L.order(); ++h)
        EXPECT_EQ(theta(L.mul(g, h), L), compose(theta(h, L), theta(g, L)));
  }
}

// Conjugating chi_s by theta_g moves the transposition (e s) to (g sg).
TEST(Chi, ConjugationByThetaExhaustive) {
  for (const auto& L : small_groups()) {
    if (L.order() > 24) continue;
    for (std::uint32_t s = 1; s < L.order(); ++s)
      for (std::uint32_t g = 0; g < L.order(); ++g) {
        const auto th = theta(g, L);
        const auto conj = compose(compose(th, chi(s, L)), inverse(th));
        EXPECT_EQ(conj, Permutation::transposition(L.order(), g, L.mul(s, g)));
      }
  }
}

TEST(SymSixMarking, Z6GeneratesSym6) {
  const auto Z6 = FiniteGroup::cyclic(6);
  const auto m = sym_six_marking(Z6, 1, 2, 3);
  EXPECT_EQ(enumerate_subgroup(m), 720u);
  std::vector<std::vector<std::uint32_t>> imgs;
  for (const auto& g : m.generators()) imgs.push_back(g.images());
  EXPECT_EQ(oracle::perm_closure_order(imgs), 720u);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(order(m.generators()[j]), 2u);
}

TEST(SymSixMarking, ThetaOfZ2pGenerator) {
  // L = Z/2 x Z/6 with s3 the Z/6 generator, p = 3
  const auto L = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(6));
  const std::uint32_t s3 = 1;
  EXPECT_EQ(order(theta(s3, L)), 6u);
}

TEST(SymSixMarking, Errors) {
  const auto Z6 = FiniteGroup::cyclic(6);
  EXPECT_THROW(sym_six_marking(Z6, 2, 4, 2), InvalidArgument);
  EXPECT_THROW(sym_six_marking(FiniteGroup::cyclic(4), 1, 1, 1), InvalidArgument);
  EXPECT_THROW(sym_six_marking(Z6, 0, 1, 1), InvalidArgument);
}

TEST(SymSixMarking, ClosureIsFullSymmetricGroupExhaustive) {
  std::mt19937_64 rng(3);
  for (const auto& L : small_groups()) {
    if (L.order() < 5 || L.order() > 8) continue;
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= L.order(); ++k) fact *= k;
    int tried = 0;
    for (std::uint32_t a = 1; a < L.order() && tried < 6; ++a)
      for (std::uint32_t b = 1; b < L.order() && tried < 6; ++b)
        for (std::uint32_t c = 1; c < L.order() && tried < 6; ++c) {
          const std::uint32_t s[] = {a, b, c};
          if (!L.generated_by(s) || rng() % 3) continue;
          ++tried;
          EXPECT_EQ(enumerate_subgroup(sym_six_marking(L, a, b, c)), fact);
        }
    EXPECT_GT(tried, 0);
  }
}
