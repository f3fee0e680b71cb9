#include "lef/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace lef::kernels {

void matmul_serial(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                   std::span<std::uint8_t> c, std::size_t d, std::uint32_t p) {
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::uint32_t acc = 0;
      for (std::size_t k = 0; k < d; ++k)
        acc = (acc + static_cast<std::uint32_t>(a[i * d + k]) * b[k * d + j]) % p;
      c[i * d + j] = static_cast<std::uint8_t>(acc);
    }
  }
}

namespace {

inline void axpy_row(const std::uint8_t* arow, const std::uint8_t* b, std::uint8_t* crow,
                     std::uint32_t* acc, std::size_t d, std::uint32_t p) {
  std::fill(acc, acc + d, 0u);
  for (std::size_t k = 0; k < d; ++k) {
    const std::uint32_t aik = arow[k];
    if (aik == 0) continue;
    const std::uint8_t* brow = b + k * d;
    for (std::size_t j = 0; j < d; ++j) acc[j] += aik * brow[j];
  }
  for (std::size_t j = 0; j < d; ++j) crow[j] = static_cast<std::uint8_t>(acc[j] % p);
}

constexpr std::size_t kParallelMatmulDim = 96;

}  // namespace

void matmul_parallel(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                     std::span<std::uint8_t> c, std::size_t d, std::uint32_t p) {
  // Row-axpy form with a 32-bit accumulator; d * (p-1)^2 must fit.
  assert(static_cast<std::uint64_t>(d) * (p - 1) * (p - 1) <
         std::numeric_limits<std::uint32_t>::max());
  if (d < kParallelMatmulDim) {
    std::uint32_t acc[kParallelMatmulDim];
    for (std::size_t i = 0; i < d; ++i) axpy_row(a.data() + i * d, b.data(), c.data() + i * d, acc, d, p);
    return;
  }
  const auto n = static_cast<std::int64_t>(d);
#pragma omp parallel
  {
    std::vector<std::uint32_t> acc(d);
#pragma omp for schedule(static)
    for (std::int64_t ii = 0; ii < n; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      axpy_row(a.data() + i * d, b.data(), c.data() + i * d, acc.data(), d, p);
    }
  }
}

namespace {

inline std::uint32_t act_on_point(std::span<const std::uint8_t> g, std::size_t d, std::uint32_t p,
                                  std::uint64_t code,
                                  std::span<const std::uint32_t> index_of_code,
                                  std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& w) {
  for (std::size_t i = 0; i < d; ++i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::uint32_t acc = 0;
    const std::uint8_t* row = g.data() + i * d;
    for (std::size_t k = 0; k < d; ++k) acc += row[k] * v[k];
    w[i] = acc % p;
  }
  // Normalize so that the first nonzero coordinate (lowest index) is 1.
  std::size_t lead = 0;
  while (lead < d && w[lead] == 0) ++lead;
  assert(lead < d);
  std::uint32_t inv = 1;
  {
    std::uint64_t base = w[lead], e = p - 2, r = 1;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    inv = static_cast<std::uint32_t>(r);
  }
  std::uint64_t out = 0;
  for (std::size_t i = d; i-- > 0;) out = out * p + (w[i] * inv) % p;
  return index_of_code[out];
}

}  // namespace

void projective_action_serial(std::span<const std::uint8_t> g, std::size_t d, std::uint32_t p,
                              std::span<const std::uint64_t> codes,
                              std::span<const std::uint32_t> index_of_code,
                              std::span<std::uint32_t> out) {
  std::vector<std::uint32_t> v(d), w(d);
  for (std::size_t x = 0; x < codes.size(); ++x)
    out[x] = act_on_point(g, d, p, codes[x], index_of_code, v, w);
}

void projective_action_parallel(std::span<const std::uint8_t> g, std::size_t d, std::uint32_t p,
                                std::span<const std::uint64_t> codes,
                                std::span<const std::uint32_t> index_of_code,
                                std::span<std::uint32_t> out) {
  const auto n = static_cast<std::int64_t>(codes.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> v(d), w(d);
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < n; ++x)
      out[static_cast<std::size_t>(x)] =
          act_on_point(g, d, p, codes[static_cast<std::size_t>(x)], index_of_code, v, w);
  }
}

void adjacency_apply_serial(const std::vector<std::vector<std::uint32_t>>& forward,
                            const std::vector<std::vector<std::uint32_t>>& backward,
                            std::span<const double> x, std::span<double> y) {
  const double scale = 1.0 / (2.0 * static_cast<double>(forward.size()));
  for (std::size_t v = 0; v < x.size(); ++v) {
    double s = 0.0;
    for (std::size_t j = 0; j < forward.size(); ++j) s += x[forward[j][v]] + x[backward[j][v]];
    y[v] = s * scale;
  }
}

void adjacency_apply_parallel(const std::vector<std::vector<std::uint32_t>>& forward,
                              const std::vector<std::vector<std::uint32_t>>& backward,
                              std::span<const double> x, std::span<double> y) {
  const double scale = 1.0 / (2.0 * static_cast<double>(forward.size()));
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static) if (n >= 4096)
  for (std::int64_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<std::size_t>(vi);
    double s = 0.0;
    for (std::size_t j = 0; j < forward.size(); ++j) s += x[forward[j][v]] + x[backward[j][v]];
    y[v] = s * scale;
  }
}

}  // namespace lef::kernels
