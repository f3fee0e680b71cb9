// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lef/kernels.hpp"
#include "lef/spectral.hpp"

namespace {

std::vector<std::uint8_t> random_matrix(std::size_t d, std::uint32_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> m(d * d);
  for (auto& x : m) x = static_cast<std::uint8_t>(rng() % p);
  return m;
}

template <bool Parallel>
void BM_Matmul(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::uint32_t p = 3;
  const auto a = random_matrix(d, p, 1), b = random_matrix(d, p, 2);
  std::vector<std::uint8_t> c(d * d);
  for (auto _ : state) {
    if constexpr (Parallel)
      lef::kernels::matmul_parallel(a, b, c, d, p);
    else
      lef::kernels::matmul_serial(a, b, c, d, p);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d * d * d));
}

// Normalized representatives of P^{d-1}(F_p): first nonzero coordinate 1.
struct Points {
  std::vector<std::uint64_t> codes;
  std::vector<std::uint32_t> index_of_code;
};

Points projective_points(std::size_t d, std::uint32_t p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  Points pts;
  pts.index_of_code.assign(total, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    while (c % p == 0) c /= p;
    if (c % p != 1) continue;
    pts.index_of_code[code] = static_cast<std::uint32_t>(pts.codes.size());
    pts.codes.push_back(code);
  }
  return pts;
}

template <bool Parallel>
void BM_ProjectiveAction(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::uint32_t p = 3;
  const auto pts = projective_points(d, p);
  // A unipotent matrix: identity plus the superdiagonal.
  std::vector<std::uint8_t> g(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) g[i * d + i] = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) g[i * d + i + 1] = 1;
  std::vector<std::uint32_t> out(pts.codes.size());
  for (auto _ : state) {
    if constexpr (Parallel)
      lef::kernels::projective_action_parallel(g, d, p, pts.codes, pts.index_of_code, out);
    else
      lef::kernels::projective_action_serial(g, d, p, pts.codes, pts.index_of_code, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.codes.size()));
}

template <bool Parallel>
void BM_Adjacency(benchmark::State& state) {
  const auto g = lef::cycle_graph(static_cast<std::size_t>(state.range(0)));
  std::vector<double> x(g.vertices), y(g.vertices);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& v : x) v = u(rng);
  for (auto _ : state) {
    if constexpr (Parallel)
      lef::kernels::adjacency_apply_parallel(g.forward, g.backward, x, y);
    else
      lef::kernels::adjacency_apply_serial(g.forward, g.backward, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.vertices));
}

}  // namespace

BENCHMARK(BM_Matmul<false>)->Name("matmul/serial")->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_Matmul<true>)->Name("matmul/parallel")->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_ProjectiveAction<false>)->Name("projective_action/serial")->Arg(8)->Arg(12);
BENCHMARK(BM_ProjectiveAction<true>)->Name("projective_action/parallel")->Arg(8)->Arg(12);
BENCHMARK(BM_Adjacency<false>)->Name("adjacency/serial")->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(BM_Adjacency<true>)->Name("adjacency/parallel")->Arg(1 << 12)->Arg(1 << 20);

BENCHMARK_MAIN();
