#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version that
// reduces after every multiply-accumulate, and an OpenMP version that is the
// one the library calls. Tests pin the two to bit-identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lef::kernels {

/// C = A * B mod p for d x d row-major byte matrices.
void matmul_serial(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                   std::span<std::uint8_t> c, std::size_t d, std::uint32_t p);
void matmul_parallel(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                     std::span<std::uint8_t> c, std::size_t d, std::uint32_t p);

/// Image of every projective point of F_p^d under the d x d matrix g.
/// Points are indexed by `codes`, the base-p code of the normalized
/// representative (first nonzero coordinate 1); `index_of_code` inverts it.
void projective_action_serial(std::span<const std::uint8_t> g, std::size_t d, std::uint32_t p,
                              std::span<const std::uint64_t> codes,
                              std::span<const std::uint32_t> index_of_code,
                              std::span<std::uint32_t> out);
void projective_action_parallel(std::span<const std::uint8_t> g, std::size_t d, std::uint32_t p,
                                std::span<const std::uint64_t> codes,
                                std::span<const std::uint32_t> index_of_code,
                                std::span<std::uint32_t> out);

/// y = (1 / (2k)) * sum_j (P_j + P_j^{-1}) x, where forward[j][v] is the
/// image of vertex v under generator j and backward[j] its inverse.
void adjacency_apply_serial(const std::vector<std::vector<std::uint32_t>>& forward,
                            const std::vector<std::vector<std::uint32_t>>& backward,
                            std::span<const double> x, std::span<double> y);
void adjacency_apply_parallel(const std::vector<std::vector<std::uint32_t>>& forward,
                              const std::vector<std::vector<std::uint32_t>>& backward,
                              std::span<const double> x, std::span<double> y);

}  // namespace lef::kernels
