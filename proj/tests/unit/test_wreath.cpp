#include <gtest/gtest.h>

#include <random>

#include "lef/chain.hpp"
#include "lef/errors.hpp"
#include "lef/markings.hpp"
#include "lef/pipeline.hpp"
#include "lef/wreath.hpp"

using namespace lef;

namespace {

MatFp m2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t p) {
  return MatFp::from_rows({{a, b}, {c, d}}, p);
}

/// All of SL(2, 3) by BFS from two elementary matrices.
std::vector<MatFp> sl23() {
  MarkedGroup<MatrixModel> g(MatrixModel{2, 3}, {m2(1, 1, 0, 1, 3), m2(1, 0, 1, 1, 3)});
  return ball(g, kUnbounded).elements;
}

std::vector<Permutation> sym3() {
  MarkedGroup<PermutationModel> g(PermutationModel{3}, {Permutation::transposition(3, 0, 1), Permutation::cycle(3, {0, 1, 2})});
  return ball(g, kUnbounded).elements;
}

template <GroupModel M>
void check_hall(const M& base, const std::vector<typename M::element_type>& elts, unsigned k, std::size_t J,
                std::mt19937_64& rng) {
  WreathMarkingParams params{k, J, WreathConvention::Right};
  ASSERT_TRUE(separation_check(params).ok());
  WreathModel<M> W{base, k, params.convention};
  const auto pts = params.support_points();
  std::map<std::uint64_t, typename M::element_type> f;
  std::vector<typename M::element_type> expected;
  for (std::size_t j = 0; j < J; ++j) {
    const auto& c = elts[rng() % elts.size()];
    const auto& d = elts[rng() % elts.size()];
    f.emplace(pts[j], c);
    f.emplace(pts[j + J], d);
    expected.push_back(base.multiply(base.multiply(base.inverse(c), base.inverse(d)), base.multiply(c, d)));
  }
  const auto w2 = W.lift(f);
  for (std::size_t j = 1; j <= J; ++j) {
    const auto z = hall_extract(W, w2, j, params, expected[j - 1]);
    for (const auto& [slot, v] : z.base) EXPECT_EQ(slot, 0u);
  }
}

}  // namespace

TEST(Wreath, GroupLaw) {
  MatrixWreath W{MatrixModel{2, 3}, 3, WreathConvention::Right};
  EXPECT_EQ(W.encode(W.multiply(W.identity(), W.identity())), W.encode(W.identity()));
  EXPECT_EQ(W.encode(W.power(W.shift(1), 8)), W.encode(W.identity()));
  EXPECT_NE(W.encode(W.power(W.shift(1), 4)), W.encode(W.identity()));
  const auto x = W.lift({{2, m2(1, 1, 0, 1, 3)}});
  const auto c = W.conjugate_by_shift(x, 1);
  ASSERT_EQ(c.base.size(), 1u);
  EXPECT_EQ(c.base.begin()->first, 1u);
  MatrixWreath L{MatrixModel{2, 3}, 3, WreathConvention::Left};
  EXPECT_EQ(L.conjugate_by_shift(x, 1).base.begin()->first, 3u);
  std::mt19937_64 rng(5);
  const auto g = sl23();
  for (int t = 0; t < 50; ++t) {
    auto rnd = [&] {
      std::map<std::uint64_t, MatFp> f;
      for (int s = 0; s < 3; ++s) f.emplace(rng() % 8, g[rng() % g.size()]);
      return W.lift(f, rng() % 8);
    };
    const auto a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ(W.encode(W.multiply(W.multiply(a, b), d)), W.encode(W.multiply(a, W.multiply(b, d))));
    EXPECT_EQ(W.encode(W.multiply(a, W.inverse(a))), W.encode(W.identity()));
    EXPECT_EQ(W.encode(L.multiply(L.multiply(a, b), d)), W.encode(L.multiply(a, L.multiply(b, d))));
    EXPECT_EQ(L.encode(L.multiply(L.inverse(a), a)), L.encode(L.identity()));
  }
}

TEST(Wreath, Separation) {
  EXPECT_TRUE(separation_check({20, 9}).ok());
  EXPECT_EQ(separation_check({20, 9}).points, 18u);
  EXPECT_TRUE(separation_check({6, 2}).ok());
  EXPECT_TRUE(separation_check({8, 3}).ok());
  EXPECT_TRUE(separation_check({3, 1}).ok());
  EXPECT_FALSE(separation_check({4, 2}).ok());
  for (unsigned k = 3; k <= 24; ++k)
    for (std::size_t J = 1; 2 * J < k; ++J) EXPECT_TRUE(separation_check({k, J}).ok()) << k << " " << J;
}

TEST(Wreath, HallExtractExact) {
  std::mt19937_64 rng(11);
  const auto g = sl23();
  const auto s = sym3();
  for (auto [k, J] : {std::pair<unsigned, std::size_t>{6, 2}, {8, 3}}) {
    check_hall(MatrixModel{2, 3}, g, k, J, rng);
    check_hall(PermutationModel{3}, s, k, J, rng);
  }
  // Trivial base group.
  WreathModel<CyclicModel> T{CyclicModel{1}, 6, WreathConvention::Right};
  WreathMarkingParams params{6, 2};
  EXPECT_TRUE(hall_extract(T, T.identity(), 1, params, 0).base.empty());
}

TEST(Wreath, HallExtractPinsRightConvention) {
  const auto g = sl23();
  WreathMarkingParams params{6, 2, WreathConvention::Left};
  MatrixWreath W{MatrixModel{2, 3}, 6, WreathConvention::Left};
  const auto pts = params.support_points();
  const auto c = m2(1, 1, 0, 1, 3), d = m2(1, 0, 1, 1, 3);
  const auto w2 = W.lift({{pts[0], c}, {pts[2], d}});
  const auto want = inverse(c) * inverse(d) * c * d;
  EXPECT_THROW(hall_extract(W, w2, 1, params, want), ConsistencyError);
}

TEST(Wreath, CommutatorPairs) {
  const RingDescriptor F3 = PrimeField{3};
  const auto t = elem(1, 2, ring_scalar(F3, 2), 3).flatten();
  auto [c, d] = find_commutator_pair(t, 3, 1);
  EXPECT_EQ(c, elem(1, 3, ring_scalar(F3, 2), 3).flatten());
  EXPECT_EQ(d, elem(3, 2, ring_one(F3), 3).flatten());
  auto [c0, d0] = find_commutator_pair(MatFp::identity(4, 3), 2, 2);
  EXPECT_TRUE(c0.is_identity() && d0.is_identity());
  MatFp cyc5(5, 3);
  for (std::size_t j = 0; j < 5; ++j) cyc5.set((j + 1) % 5, j, 1);
  auto [c5, d5] = find_commutator_pair(cyc5, 5, 1);
  EXPECT_EQ(inverse(c5) * inverse(d5) * c5 * d5, cyc5);
  for (std::size_t n : {3, 5, 7}) {
    const auto b = beta(n, beta_signed_for(n), MatrixRing{2, 3}).flatten();
    auto [cb, db] = find_commutator_pair(b, n, 2);
    EXPECT_EQ(inverse(cb) * inverse(db) * cb * db, b);
  }
  EXPECT_THROW(find_commutator_pair(MatFp::from_rows({{1, 1}, {1, 2}}, 3), 2, 1), InvalidArgument);
  // -I is not a commutator in the abelian group of det-1 signed 2x2 permutations.
  EXPECT_THROW(find_commutator_pair(MatFp::from_rows({{2, 0}, {0, 2}}, 3), 2, 1), ConsistencyError);
  // Signed beta for even n is an odd permutation with entry product -1.
  EXPECT_THROW(find_commutator_pair(beta(4, true, PrimeField{3}).flatten(), 4, 1), InvalidArgument);
}

TEST(Wreath, TwoMarkingSupports) {
  const char* trivial = "p 3\nn 3\ndepth 1\nquotient 0 degree 2\ns1 1 0\ns2 1 0\nxi1 a\nxi2 a\nxi3 a\nxi4 a\n";
  const auto spec = parse_chain(trivial);
  const auto lv = build_level(spec, 0);
  auto small = build_two_marking_wreath(lv.two, lv.nine, {3, 1});
  std::vector<std::uint64_t> s2, s1;
  for (const auto& [k, v] : small.w2.base) s2.push_back(k);
  for (const auto& [k, v] : small.w1.base) s1.push_back(k);
  EXPECT_EQ(s2, (std::vector<std::uint64_t>{2, 4}));
  EXPECT_EQ(s1, (std::vector<std::uint64_t>{0, 1}));
  WreathMarkingParams wide{20, 9};
  auto big = build_two_marking_wreath(lv.two, lv.nine, wide);
  std::vector<std::uint64_t> support;
  for (const auto& [k, v] : big.w2.base) support.push_back(k);
  std::vector<std::uint64_t> want;
  for (unsigned j = 1; j <= 18; ++j) want.push_back(std::uint64_t{1} << j);
  EXPECT_EQ(support, want);
  for (std::size_t j = 1; j <= 9; ++j) hall_extract(big.model, big.w2, j, wide, big.targets[j - 1]);
  EXPECT_THROW(build_two_marking_wreath(lv.two, lv.nine, {4, 2}), InvalidArgument);
}

TEST(Wreath, CoprimeExtract) {
  MatrixWreath W{MatrixModel{50, 3}, 4, WreathConvention::Right};
  const auto two = amenable_two_marking(50, 3);
  const auto r = coprime_extract(W, W.lift({{0, two.mats[0]}, {1, two.mats[1]}}));
  EXPECT_EQ(r.order0, 3u);
  EXPECT_EQ(r.order1, 100u);
  EXPECT_EQ(r.exponent0, 100u);
  EXPECT_EQ(r.exponent1, 201u);
  MatrixWreath W30{MatrixModel{30, 3}, 4, WreathConvention::Right};
  const auto bad = amenable_two_marking(30, 3);
  EXPECT_THROW(coprime_extract(W30, W30.lift({{0, bad.mats[0]}, {1, bad.mats[1]}})), InvalidArgument);
  // One trivial slot: w1 is already isolated.
  const auto only = coprime_extract(W, W.lift({{0, two.mats[0]}}));
  EXPECT_EQ(only.exponent0, 1u);
}

TEST(Wreath, CoprimeExtractRandomPairs) {
  std::mt19937_64 rng(13);
  MarkedGroup<MatrixModel> g(MatrixModel{3, 5}, {MatFp::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, 5),
                                                 MatFp::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 5)});
  const auto elts = ball(g, 6).elements;
  MatrixWreath W{MatrixModel{3, 5}, 2, WreathConvention::Right};
  int done = 0;
  while (done < 50) {
    const auto& a = elts[rng() % elts.size()];
    const auto& b = elts[rng() % elts.size()];
    if (std::gcd(element_order(a), element_order(b)) != 1) continue;
    const auto r = coprime_extract(W, W.lift({{0, a}, {1, b}}));
    EXPECT_LE(r.slot0.base.size(), 1u);
    EXPECT_LE(r.slot1.base.size(), 1u);
    ++done;
  }
}

TEST(Wreath, GenerationCheck) {
  MarkedGroup<CyclicModel> trivial(CyclicModel{1}, {0});
  auto t = wreath_generation_check(trivial, 3);
  EXPECT_EQ(t.order, 8u);
  EXPECT_TRUE(t.generated);
  MarkedGroup<CyclicModel> z3(CyclicModel{3}, {1, 1});
  auto z = wreath_generation_check(z3, 2);
  EXPECT_EQ(z.full_order, 324u);
  EXPECT_FALSE(z.generated);
  EXPECT_EQ(z.full_order % z.order, 0u);
  MarkedGroup<MatrixModel> sl(MatrixModel{2, 3}, {m2(1, 1, 0, 1, 3), m2(1, 0, 1, 1, 3)});
  auto s = wreath_generation_check(sl, 1);
  EXPECT_EQ(s.full_order, 1152u);
  EXPECT_GT(s.order, 0u);
}
