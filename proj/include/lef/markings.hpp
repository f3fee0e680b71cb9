#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lef/elementary.hpp"
#include "lef/mat_fp.hpp"
#include "lef/ring_expr.hpp"

namespace lef {

enum class MarkingTag { TwoMarking, NineMarking, FourMarkingMu, ThirteenMarking, SigmaMarking, Wreath, InvolutionEmbedding };

std::string tag_name(MarkingTag t);
/// Tuple length required by the tag (0 when unconstrained).
std::size_t tag_arity(MarkingTag t);

/// Ordered generator tuple of flattened matrices in SL(n * l, F_p): n blocks
/// of size l.
struct MarkingBundle {
  MarkingTag tag = MarkingTag::TwoMarking;
  std::vector<MatFp> mats;
  std::size_t n = 0;
  std::size_t l = 1;
  std::uint32_t p = 2;

  std::size_t dim() const noexcept { return n * l; }
};

/// Checks arity, shapes and determinant 1; throws RelationViolation.
void validate_bundle(const MarkingBundle& b);

/// Images of e_{12}^1, e_{12}^y, e_{12}^z and beta under y -> E_{12},
/// z -> cyclic permutation matrix of Mat_i(F_p) (both 1 when i = 1).
/// beta is signed for even n unless overridden.
MarkingBundle mu_images(std::size_t i, std::size_t n, std::uint32_t p,
                        std::optional<bool> signed_override = std::nullopt);

/// (e_{12}^1, beta) in SL(N, F_p), beta signed for even N unless overridden.
MarkingBundle amenable_two_marking(std::size_t N, std::uint32_t p,
                                   std::optional<bool> signed_override = std::nullopt);

/// Keys "x1".."x6". Requires x1^2 = x2^2 = x3^2 = 1, x6^{2p} = 1 and x4, x5
/// units; throws RelationViolation otherwise.
MarkingBundle nine_marking_images(const RingAssignment& x, std::size_t n,
                                  std::optional<bool> signed_override = std::nullopt);

/// Nine-tuple in slots 1-9 and identities in 10-13 when `nine` is given;
/// identities in 1-9 and the four-tuple in 10-13 when `four` is given.
MarkingBundle thirteen_marking(std::size_t i, const MarkingBundle* nine, const MarkingBundle* four);

/// For odd n: (alpha1, alpha2, e, e) at even i and (e, e, alpha1, alpha2')
/// at odd i, all in SL(n i, F_p).
MarkingBundle sigma_marking(std::size_t i, std::size_t n, std::uint32_t p);

/// {D(w, w)} padded to n blocks; each w must satisfy w^2 = 1.
MarkingBundle embed_involution_group(const std::vector<RingElement>& omega, std::size_t n);

/// E_{12} and the cyclic permutation matrix in Mat_i(F_p).
MatFp mu_y(std::size_t i, std::uint32_t p);
MatFp mu_z(std::size_t i, std::uint32_t p);

}  // namespace lef
