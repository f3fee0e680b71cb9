#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "lef/errors.hpp"
#include "lef/markings.hpp"
#include "lef/spectral.hpp"

using namespace lef;

namespace {

/// Second eigenvalue by dense decomposition.
double dense_lambda2(const SchreierGraph& g) {
  const auto n = g.vertices;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  const double w = 1.0 / static_cast<double>(g.degree());
  for (std::size_t j = 0; j < g.forward.size(); ++j)
    for (std::size_t v = 0; v < n; ++v) {
      A(v, g.forward[j][v]) += w;
      A(v, g.backward[j][v]) += w;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  return es.eigenvalues()[n - 2];
}

MatFp m2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t p) {
  return MatFp::from_rows({{a, b}, {c, d}}, p);
}

}  // namespace

TEST(Spectral, CycleClosedForm) {
  for (std::size_t n : {4, 8, 16, 64}) {
    const auto est = spectral_gap(cycle_graph(n));
    EXPECT_TRUE(est.converged);
    EXPECT_NEAR(est.gap, 1.0 - std::cos(2.0 * std::numbers::pi / static_cast<double>(n)), 1e-8) << n;
  }
}

TEST(Spectral, ProjectiveLineSl23) {
  auto g = schreier_graph({m2(1, 1, 0, 1, 3), m2(1, 0, 1, 1, 3)});
  EXPECT_EQ(g.vertices, 4u);
  EXPECT_TRUE(g.connected());
  EXPECT_EQ(g.degree(), 4u);
  EXPECT_NEAR(spectral_gap(g).lambda2, dense_lambda2(g), 1e-9);
  auto v = schreier_graph({m2(1, 1, 0, 1, 3), m2(1, 0, 1, 1, 3)}, ActionKind::NonzeroVectors);
  EXPECT_EQ(v.vertices, 8u);
}

TEST(Spectral, MatchesDenseOnSmallActions) {
  for (auto b : {mu_images(1, 3, 3), amenable_two_marking(4, 3), mu_images(2, 2, 2)}) {
    auto g = schreier_graph(b.mats);
    ASSERT_LE(g.vertices, 200u);
    EXPECT_NEAR(spectral_gap(g).lambda2, dense_lambda2(g), 1e-8);
  }
}

TEST(Spectral, DisconnectedReportsZero) {
  auto g = schreier_graph({MatFp::identity(3, 3)});
  EXPECT_FALSE(g.connected());
  const auto est = spectral_gap(g);
  EXPECT_FALSE(est.connected);
  EXPECT_EQ(est.gap, 0.0);
}

TEST(Spectral, InvariantUnderPermutationAndInversion) {
  auto b = mu_images(1, 3, 3);
  const auto base = spectral_gap(schreier_graph(b.mats)).lambda2;
  auto rev = b.mats;
  std::reverse(rev.begin(), rev.end());
  EXPECT_NEAR(spectral_gap(schreier_graph(rev)).lambda2, base, 1e-9);
  auto inv = b.mats;
  for (auto& m : inv) m = inverse(m);
  EXPECT_NEAR(spectral_gap(schreier_graph(inv)).lambda2, base, 1e-9);
}

TEST(Spectral, Errors) {
  EXPECT_THROW(schreier_graph({MatFp(2, 3)}), InvalidArgument);
  EXPECT_THROW(schreier_graph(amenable_two_marking(14, 3).mats, ActionKind::ProjectivePoints, 1000), CapExceeded);
  EXPECT_EQ(action_size(ActionKind::ProjectivePoints, 12, 3), 265720u);
}

TEST(Spectral, GapSeriesReportsCaps) {
  std::vector<std::pair<std::string, std::vector<MatFp>>> ms = {{"a", amenable_two_marking(4, 3).mats},
                                                                 {"b", amenable_two_marking(30, 3).mats}};
  auto s = gap_series(ms, ActionKind::ProjectivePoints, 10'000);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s[0].estimate.has_value());
  EXPECT_FALSE(s[1].estimate.has_value());
  const auto again = gap_series(ms, ActionKind::ProjectivePoints, 10'000);
  EXPECT_EQ(again[0].estimate->lambda2, s[0].estimate->lambda2);
}
