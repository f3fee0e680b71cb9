#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lef/marked_group.hpp"
#include "lef/markings.hpp"

namespace lef {

/// One step of a straight-line program over a generator tuple.
struct SlpStep {
  enum class Op { Generator, Inverse, Product, Commutator, Conjugate };
  Op op = Op::Generator;
  /// Generator index for Generator; operand steps otherwise. Conjugate(a, b)
  /// is b a b^{-1}; Commutator(a, b) is a^{-1} b^{-1} a b.
  std::size_t a = 0;
  std::size_t b = 0;
};

/// x = I + X placed in block (u, v), 0-based, u != v.
struct BlockElementary {
  std::size_t u = 0;
  std::size_t v = 0;
  MatFp entry;
};

/// Block-elementary form of m (n blocks of size l), if it has one.
std::optional<BlockElementary> as_block_elementary(const MatFp& m, std::size_t n, std::size_t l);

/// e_{u,v}^{E_ab} as a product of powers of certificate steps.
struct CertificateTarget {
  std::size_t u = 0, v = 0, a = 0, b = 0;
  std::vector<std::pair<std::size_t, std::uint32_t>> factors;  // (step, exponent)
};

struct GenerationCertificate {
  bool success = false;
  std::string failure;
  std::size_t n = 0, l = 0;
  std::uint32_t p = 0;
  std::vector<SlpStep> steps;
  std::vector<CertificateTarget> targets;
  /// Steps whose value was recomputed by matrix multiplication and matched.
  std::size_t verified_steps = 0;
  /// Ring-level sums checked for the targets.
  std::size_t verified_targets = 0;
};

struct CertificateOptions {
  std::size_t max_block = 32;
  std::size_t max_blocks = 128;
  std::size_t max_dim = 128;
};

/// Builds words in the bundle producing e_{u,v}^{E_ab} for every block
/// position u != v and every matrix unit E_ab of Mat_l(F_p):
///  1. elementary generators and their conjugates by the other generators,
///     then commutators of pairs whose entry product is a scalar unit, saturated
///     until every position holds a scalar-unit elementary element;
///  2. the F_p-span at position (1,2) closed under left multiplication by the
///     seed entries via [e_{1,3}^x, e_{3,2}^b] = e_{1,2}^{xb};
///  3. transport of that basis to every position.
GenerationCertificate generation_certificate(const MarkingBundle& bundle, const CertificateOptions& opts = {});

/// Expands step `i` into a word over the bundle's generators; throws
/// CapExceeded when the word would exceed max_length.
Word expand_step(const GenerationCertificate& c, std::size_t i, std::size_t max_length = 1'000'000);

}  // namespace lef
