#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lef/mat_fp.hpp"
#include "lef/permutation.hpp"

namespace lef {

enum class ActionKind { ProjectivePoints, NonzeroVectors };

std::string to_string(ActionKind a);

/// A finite G-set with the vertex permutation of each generator.
struct SchreierGraph {
  std::size_t vertices = 0;
  std::vector<std::vector<std::uint32_t>> forward;
  std::vector<std::vector<std::uint32_t>> backward;
  std::size_t components = 0;
  std::string action;

  bool connected() const noexcept { return components == 1; }
  std::size_t degree() const noexcept { return 2 * forward.size(); }
};

/// Number of vertices the action would have, or nullopt past 2^63.
std::optional<std::uint64_t> action_size(ActionKind a, std::size_t d, std::uint32_t p);

/// Action of invertible d x d matrices on projective points (default) or on
/// nonzero vectors of F_p^d. Throws CapExceeded above `cap` vertices and
/// InvalidArgument for a singular generator.
SchreierGraph schreier_graph(const std::vector<MatFp>& gens, ActionKind action = ActionKind::ProjectivePoints,
                             std::size_t cap = 1'000'000);

/// Schreier graph of permutations given explicitly (e.g. on cosets).
SchreierGraph schreier_graph(const std::vector<Permutation>& gens, const std::string& action = "permutation");

/// Z/n with generator +1.
SchreierGraph cycle_graph(std::size_t n);

struct SpectrumEstimate {
  /// Largest eigenvalue of the normalized adjacency on the complement of
  /// the constants.
  double lambda2 = 1.0;
  /// Smallest eigenvalue on the same space.
  double lambda_min = -1.0;
  /// 1 - lambda2; 0 for disconnected graphs.
  double gap = 0.0;
  /// max(|lambda2|, |lambda_min|).
  double slem = 1.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
  bool connected = true;
  std::uint64_t seed = 0;
};

struct LanczosOptions {
  double tol = 1e-10;
  std::size_t max_iterations = 3000;
  std::uint64_t seed = 20240601;
  /// Full reorthogonalization while vertices * iterations stays below this.
  std::size_t reorth_budget = 20'000'000;
};

/// Lanczos on A = (1/2k) sum_j (P_j + P_j^{-1}) with the constant vector
/// deflated. A disconnected graph returns gap 0 with connected = false.
SpectrumEstimate spectral_gap(const SchreierGraph& g, const LanczosOptions& opts = {});

struct GapEntry {
  std::string label;
  std::size_t dim = 0;
  std::uint64_t vertices = 0;
  std::optional<SpectrumEstimate> estimate;  // nullopt when over the vertex cap
};

/// One estimate per marking, each on the given action; markings over the
/// vertex cap are reported without an estimate.
std::vector<GapEntry> gap_series(const std::vector<std::pair<std::string, std::vector<MatFp>>>& markings,
                                 ActionKind action, std::size_t cap, const LanczosOptions& opts = {});

}  // namespace lef
