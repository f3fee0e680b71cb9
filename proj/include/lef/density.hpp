#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lef/certificate.hpp"
#include "lef/markings.hpp"

namespace lef {

/// Parameters of a factor SL(d, F_p).
struct SlLabel {
  std::size_t d = 0;
  std::uint32_t p = 0;
  friend bool operator==(const SlLabel&, const SlLabel&) = default;
};

std::string to_string(const SlLabel& x);

/// |SL(d, F_p)| when it fits in 64 bits.
std::optional<std::uint64_t> sl_order(std::size_t d, std::uint32_t p);

enum class Surjectivity { Verified, Fails, Unverifiable };

struct FactorEvidence {
  SlLabel label;
  Surjectivity status = Surjectivity::Unverifiable;
  std::string method;  // "bfs" or "certificate"
  std::string detail;
};

/// Decides whether the marking generates all of SL(dim, F_p): exhaustive BFS
/// when |SL| <= bfs_cap, otherwise a generation certificate.
FactorEvidence factor_surjectivity(const MarkingBundle& b, std::size_t bfs_cap = 200'000,
                                   const CertificateOptions& opts = {});

enum class DensityVerdict { Dense, NotGuaranteed, Unverifiable };

std::string to_string(DensityVerdict v);

struct DensityReport {
  DensityVerdict verdict = DensityVerdict::Unverifiable;
  std::vector<std::string> reasons;
};

/// Name of the unique nonabelian simple quotient of SL(d, F_p), with the
/// exceptional isomorphism PSL(3,2) = PSL(2,7) identified; empty when
/// SL(d, F_p) has none (d = 1, or d = 2 with p <= 3).
std::string simple_quotient_name(const SlLabel& x);

/// Dense iff every projection is verified onto and the factors share no
/// simple quotient (all d >= 3, labels pairwise distinct). A failing or
/// shared factor gives NotGuaranteed; missing evidence gives Unverifiable.
DensityReport density_check(const std::vector<FactorEvidence>& factors);

}  // namespace lef
