#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lef/certificate.hpp"
#include "lef/errors.hpp"
#include "lef/limit_model.hpp"
#include "lef/marked_group.hpp"
#include "lef/markings.hpp"
#include "lef/perm_groups.hpp"

using namespace lef;

namespace {

MarkedGroup<CyclicModel> cyc(std::uint64_t n) { return {CyclicModel{n}, {1 % n}}; }

MarkedGroup<MatrixModel> matrix_group(const MarkingBundle& b) { return {MatrixModel{b.dim(), b.p}, b.mats}; }

}  // namespace

TEST(Ball, SmallGroups) {
  auto b = ball(cyc(5), 2);
  EXPECT_EQ(b.size(), 5u);
  EXPECT_EQ(ball(cyc(5), 0).size(), 1u);
  MarkedGroup<PermutationModel> s3(PermutationModel{3}, {Permutation::transposition(3, 0, 1), Permutation::cycle(3, {0, 1, 2})});
  auto b1 = ball(s3, 1);
  EXPECT_EQ(b1.size(), 4u);
  for (std::size_t i = 0; i < b1.size(); ++i) EXPECT_EQ(s3.eval(b1.witness(i)), b1.elements[i]);
  EXPECT_EQ(ball(s3, 5).size(), 6u);
  EXPECT_TRUE(ball(s3, 5).exhausted);
}

TEST(Ball, NestedAndDeterministic) {
  auto g = matrix_group(mu_images(1, 3, 2));
  auto b2 = ball(g, 2), b3 = ball(g, 3), again = ball(g, 3);
  EXPECT_EQ(b3.layer_sizes, again.layer_sizes);
  for (std::size_t i = 0; i < b2.size(); ++i) EXPECT_EQ(b2.elements[i], b3.elements[i]);
  for (std::size_t i = 0; i < b3.size(); ++i) {
    EXPECT_EQ(g.eval(b3.witness(i)), b3.elements[i]);
    EXPECT_EQ(b3.witness(i).size(), b3.lengths[i]);
  }
}

TEST(Ball, CapReportsLayer) {
  auto g = matrix_group(mu_images(1, 3, 2));
  try {
    ball(g, 10, 50);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_GT(e.layer(), 0u);
  }
}

TEST(Enumerate, Orders) {
  EXPECT_EQ(enumerate_subgroup(MatrixModel{3, 2}, {MatFp::identity(3, 2)}), 1u);
  const auto e12 = MatFp::from_rows({{1, 1}, {0, 1}}, 3), e21 = MatFp::from_rows({{1, 0}, {1, 1}}, 3);
  EXPECT_EQ(enumerate_subgroup(MatrixModel{2, 3}, {e12, e21}), 24u);
  EXPECT_EQ(enumerate_subgroup(matrix_group(mu_images(1, 3, 2))), 168u);
  EXPECT_THROW(enumerate_subgroup(matrix_group(mu_images(1, 3, 2)), 100), CapExceeded);
}

TEST(Agreement, CyclicExamples) {
  EXPECT_EQ(agreement_radius(cyc(4), cyc(8), 3), 1);
  EXPECT_EQ(agreement_radius(cyc(8), cyc(4), 3), 1);
  EXPECT_EQ(agreement_radius(cyc(2), cyc(3), 3), 0);
  auto r = agreement(cyc(4), cyc(8), 3);
  EXPECT_EQ(r.separating_length, 4u);
  for (int R = 0; R <= 4; ++R) EXPECT_EQ(agreement_radius(cyc(6), cyc(6), R), R);
  auto g = matrix_group(mu_images(1, 3, 2));
  for (int R = 0; R <= 3; ++R) EXPECT_EQ(agreement_radius(g, g, R), R);
}

TEST(Agreement, PermutingOneMarkingCannotIncrease) {
  std::mt19937_64 rng(7);
  const std::vector<MarkingBundle> pool = {mu_images(1, 3, 2), mu_images(1, 3, 3), amenable_two_marking(3, 2),
                                           amenable_two_marking(4, 3), amenable_two_marking(5, 3)};
  for (int t = 0; t < 20; ++t) {
    const auto& a = pool[rng() % pool.size()];
    std::vector<MarkingBundle> same;
    for (const auto& b : pool)
      if (b.mats.size() == a.mats.size()) same.push_back(b);
    const auto& b = same[rng() % same.size()];
    auto perm = b.mats;
    std::shuffle(perm.begin(), perm.end(), rng);
    const int base = agreement_radius(matrix_group(a), matrix_group(a), 2);
    MarkedGroup<MatrixModel> shuffled(MatrixModel{b.dim(), b.p}, perm);
    EXPECT_LE(agreement_radius(matrix_group(a), shuffled, 2), base);
  }
}

TEST(Agreement, AmenableFamilyShadowsConvergence) {
  // N = 3 is excluded: t2^3 = e already separates at length 3.
  const std::vector<std::size_t> Ns = {5, 7, 9};
  int prev = -2;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    int worst = 100;
    for (std::size_t j = i; j < Ns.size(); ++j) {
      if (i == j) continue;
      const int r = agreement_radius(matrix_group(amenable_two_marking(Ns[i], 3)),
                                     matrix_group(amenable_two_marking(Ns[j], 3)), 3);
      EXPECT_GE(r, 1);
      worst = std::min(worst, r);
    }
    if (worst != 100) {
      EXPECT_GE(worst, prev);
      prev = worst;
    }
  }
  EXPECT_EQ(agreement_radius(matrix_group(amenable_two_marking(3, 3)), matrix_group(amenable_two_marking(5, 3)), 3), 0);
}

TEST(Diagonal, Truncations) {
  std::vector<MarkedGroup<CyclicModel>> one{cyc(5)};
  EXPECT_EQ(enumerate_subgroup(diagonal_truncation(one)), 5u);
  std::vector<MarkedGroup<CyclicModel>> two{cyc(2), cyc(3)};
  auto d = diagonal_truncation(two);
  EXPECT_EQ(enumerate_subgroup(d), 6u);
  EXPECT_EQ(d.generators()[0][0], 1u);
  EXPECT_EQ(d.generators()[0][1], 1u);
  std::vector<MarkedGroup<CyclicModel>> dup{cyc(2), cyc(2)};
  EXPECT_EQ(enumerate_subgroup(diagonal_truncation(dup)), 2u);
  std::vector<MarkedGroup<CyclicModel>> bad{cyc(2), MarkedGroup<CyclicModel>(CyclicModel{3}, {1, 2})};
  EXPECT_THROW(diagonal_truncation(bad), InvalidArgument);
}

TEST(MarkedIso, DetectsRelations) {
  auto c4 = cyc(4);
  MarkedGroup<CyclicModel> c4b(CyclicModel{4}, {3});
  EXPECT_TRUE(check_marked_isomorphism(c4, c4b).isomorphic);
  auto rep = check_marked_isomorphism(cyc(4), cyc(8));
  EXPECT_FALSE(rep.isomorphic);
  EXPECT_EQ(rep.order1, 4u);
}

TEST(LimitModel, GroupLaw) {
  LimitModel m{3, 64};
  auto g = limit_model_marked(3);
  const auto& x = g.generators()[0];
  const auto& t = g.generators()[1];
  EXPECT_EQ(m.multiply(t, m.inverse(t)), m.identity());
  EXPECT_EQ(m.multiply(x, m.inverse(x)), m.identity());
  for (int k = -3; k <= 3; ++k) {
    LimitElement tk;
    tk.shift = k;
    auto c = m.multiply(m.multiply(tk, x), m.inverse(tk));
    EXPECT_EQ(c.shift, 0);
    ASSERT_EQ(c.lower.size(), 1u);
    const std::pair<std::int64_t, std::int64_t> want{1 + k, k};
    EXPECT_EQ(c.lower.begin()->first, want);
  }
  EXPECT_EQ(g.eval({1, 1, 1}), m.identity());
  std::mt19937_64 rng(3);
  for (int t2 = 0; t2 < 50; ++t2) {
    Word w;
    for (int i = 0; i < 12; ++i) w.push_back(g.alphabet()[rng() % 4]);
    auto a = g.eval(w), b = g.eval({2, 1, -2});
    auto c = g.eval({1, 2, -1, 2});
    EXPECT_EQ(m.multiply(m.multiply(a, b), c), m.multiply(a, m.multiply(b, c)));
    EXPECT_EQ(m.multiply(a, m.inverse(a)), m.identity());
  }
}

TEST(LimitModel, WindowEnforced) {
  auto g = limit_model_marked(3, 2);
  EXPECT_THROW(g.eval({2, 2, 2, 1}), WindowExceeded);
}

TEST(LimitModel, LocallyMatchesTwoMarking) {
  auto lim = ball(limit_model_marked(3), 2);
  auto fin = ball(matrix_group(amenable_two_marking(9, 3)), 2);
  EXPECT_EQ(lim.layer_sizes, fin.layer_sizes);
  EXPECT_EQ(agreement_radius(limit_model_marked(3), matrix_group(amenable_two_marking(9, 3)), 2), 2);
}

TEST(LimitModel, AmenableRadiiNonDecreasing) {
  int prev = -1;
  for (std::size_t N : {10, 16, 22}) {
    const int r = agreement_radius(limit_model_marked(3), matrix_group(amenable_two_marking(N, 3)), 3);
    EXPECT_GE(r, prev);
    prev = r;
  }
  EXPECT_GE(prev, 1);
}

TEST(Certificate, TwoMarking) {
  auto c = generation_certificate(amenable_two_marking(4, 3));
  ASSERT_TRUE(c.success) << c.failure;
  EXPECT_EQ(c.targets.size(), 12u);
}

TEST(Certificate, MuTwoBlocksOverF3) {
  auto b = mu_images(2, 3, 3);
  auto c = generation_certificate(b);
  ASSERT_TRUE(c.success) << c.failure;
  EXPECT_EQ(c.targets.size(), 24u);
  MarkedGroup<MatrixModel> g(MatrixModel{b.dim(), b.p}, b.mats);
  for (std::size_t s = 0; s < c.steps.size(); ++s) {
    const auto w = expand_step(c, s);
    const auto v = g.eval(w);
    if (c.steps[s].op == SlpStep::Op::Generator) EXPECT_EQ(v, b.mats[c.steps[s].a]);
  }
  // Each target evaluates to the matrix unit at its block.
  for (const auto& t : c.targets) {
    auto m = MatFp::identity(b.dim(), b.p);
    for (auto [s, e] : t.factors) m = m * power(g.eval(expand_step(c, s)), e);
    auto want = MatFp::identity(b.dim(), b.p);
    want.set(t.u * b.l + t.a, t.v * b.l + t.b, 1);
    EXPECT_EQ(m, want);
  }
}

TEST(Certificate, NineMarkingMatchesBfs) {
  const RingDescriptor F2 = PrimeField{2};
  RingAssignment x;
  for (const char* k : {"x1", "x2", "x3", "x4", "x5", "x6"}) x[k] = ring_one(F2);
  auto b = nine_marking_images(x, 3);
  auto c = generation_certificate(b);
  ASSERT_TRUE(c.success) << c.failure;
  EXPECT_EQ(c.targets.size(), 6u);
  EXPECT_EQ(enumerate_subgroup(matrix_group(b)), 168u);
}

TEST(Certificate, IdentitiesFail) {
  MarkingBundle b;
  b.tag = MarkingTag::FourMarkingMu;
  b.n = 3;
  b.l = 1;
  b.p = 3;
  b.mats.assign(4, MatFp::identity(3, 3));
  auto c = generation_certificate(b);
  EXPECT_FALSE(c.success);
  EXPECT_FALSE(c.failure.empty());
}

TEST(Certificate, BlockCap) {
  CertificateOptions o;
  o.max_block = 1;
  auto c = generation_certificate(mu_images(2, 3, 2), o);
  EXPECT_FALSE(c.success);
  EXPECT_NE(c.failure.find("cap"), std::string::npos);
}
