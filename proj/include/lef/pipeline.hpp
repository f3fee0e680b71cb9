#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lef/certificate.hpp"
#include "lef/chain.hpp"
#include "lef/density.hpp"
#include "lef/finite_group.hpp"
#include "lef/heart.hpp"
#include "lef/markings.hpp"
#include "lef/report.hpp"
#include "lef/ring_expr.hpp"

namespace lef {

/// Everything built for one level m of a chain: L_m = Q_m x Z/2p with its
/// 3-marking, the six-marking of Sym(L_m), the heart module of dimension
/// l = #L_m - 2, and the two- and nine-markings in SL(n l, F_p).
struct LevelData {
  std::size_t m = 0;
  FiniteGroup Q;
  std::uint32_t q1 = 0, q2 = 0;  // s1, s2 in Q
  LabeledSet L;
  std::uint32_t s1 = 0, s2 = 0, s3 = 0;  // (s1, 0), (s2, 0), (e, 1) in L
  std::vector<Permutation> six;
  HeartBasis heart;
  std::size_t l = 0;
  RingAssignment x;
  MarkingBundle two;
  MarkingBundle nine;

  std::size_t set_size() const { return L.order(); }
  std::size_t dim() const { return two.dim(); }
};

LevelData build_level(const ChainSpec& spec, std::size_t m);

/// Index in Q of the element a word over (s1, s2) evaluates to.
std::uint32_t eval_in_quotient(const LevelData& level, const Word& w);

struct EmbeddingReport {
  std::size_t m = 0;
  std::size_t order_sym = 0;  // |<theta_xi>| in Sym(L_m)
  std::size_t order_sl = 0;   // |<D(heart(theta_xi), heart(theta_xi))>|
  bool isomorphic = false;
  std::string failure;
};

/// Compares <theta_{xi_i}> in Sym(L_m) with the D(h, h) images of their
/// heart matrices, padded to n blocks, as 4-marked groups.
EmbeddingReport verify_embedding(const LevelData& level, const ChainSpec& spec, std::size_t cap = 1'000'000);

/// Agreement radius of each level's two-marking against the limit model;
/// nullopt for levels above `dim_cap`.
std::vector<std::optional<int>> compare_amenable_limit(const std::vector<LevelData>& levels, std::uint32_t p,
                                                       int Rmax, std::size_t dim_cap = 256);

struct PipelineOptions {
  int rmax_two = 2;
  int rmax_nine = 1;
  std::size_t agreement_dim_cap = 256;
  std::size_t closure_cap = 1'000'000;
  std::size_t bfs_cap = 200'000;
  CertificateOptions certificate;
  std::uint64_t seed = 0;
};

/// Builds every level and records per-level data, determinant checks,
/// relation checks, embedding reports, surjectivity evidence, density
/// verdicts for both families, and agreement-radius series.
Report run_main_theorem(const ChainSpec& spec, const PipelineOptions& opts = {});

}  // namespace lef
