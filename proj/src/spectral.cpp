#include "lef/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <random>

#include "lef/errors.hpp"
#include "lef/kernels.hpp"

namespace lef {

std::string to_string(ActionKind a) { return a == ActionKind::ProjectivePoints ? "projective" : "vectors"; }

std::optional<std::uint64_t> action_size(ActionKind a, std::size_t d, std::uint32_t p) {
  unsigned __int128 q = 1;
  for (std::size_t i = 0; i < d; ++i) {
    q *= p;
    if (q > (static_cast<unsigned __int128>(1) << 63)) return std::nullopt;
  }
  const auto all = static_cast<std::uint64_t>(q) - 1;
  return a == ActionKind::ProjectivePoints ? all / (p - 1) : all;
}

namespace {

std::size_t count_components(std::size_t n, const std::vector<std::vector<std::uint32_t>>& forward) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = n;
  for (const auto& f : forward)
    for (std::uint32_t v = 0; v < n; ++v) {
      const auto a = find(v), b = find(f[v]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --comps;
      }
    }
  return comps;
}

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t>& f) {
  std::vector<std::uint32_t> b(f.size());
  for (std::uint32_t v = 0; v < f.size(); ++v) b[f[v]] = v;
  return b;
}

}  // namespace

SchreierGraph schreier_graph(const std::vector<MatFp>& gens, ActionKind action, std::size_t cap) {
  if (gens.empty()) throw InvalidArgument("schreier_graph: no generators");
  const auto d = gens[0].dim();
  const auto p = gens[0].modulus();
  for (const auto& g : gens) {
    if (g.dim() != d || g.modulus() != p) throw DimensionMismatch("schreier_graph: generators differ in shape");
    if (!is_invertible(g)) throw InvalidArgument("schreier_graph: singular generator");
  }
  const auto size = action_size(action, d, p);
  if (!size || *size > cap) throw CapExceeded("schreier_graph: vertex count", size ? *size : cap);
  const auto total = *size;
  std::uint64_t codes_total = 1;
  for (std::size_t i = 0; i < d; ++i) codes_total *= p;
  SchreierGraph g;
  g.vertices = total;
  g.action = to_string(action);
  std::vector<std::uint64_t> codes;
  codes.reserve(total);
  std::vector<std::uint32_t> index_of_code(codes_total, UINT32_MAX);
  for (std::uint64_t c = 1; c < codes_total; ++c) {
    if (action == ActionKind::ProjectivePoints) {
      // Lowest nonzero digit must be 1.
      std::uint64_t x = c;
      while (x % p == 0) x /= p;
      if (x % p != 1) continue;
    }
    index_of_code[c] = static_cast<std::uint32_t>(codes.size());
    codes.push_back(c);
  }
  for (const auto& m : gens) {
    std::vector<std::uint32_t> out(total);
    if (action == ActionKind::ProjectivePoints) {
      kernels::projective_action_parallel(m.data(), d, p, codes, index_of_code, out);
    } else {
      std::vector<std::uint32_t> v(d);
      for (std::size_t x = 0; x < total; ++x) {
        auto code = codes[x];
        for (std::size_t i = 0; i < d; ++i, code /= p) v[i] = static_cast<std::uint32_t>(code % p);
        std::uint64_t img = 0;
        for (std::size_t i = d; i-- > 0;) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < d; ++k) acc += static_cast<std::uint64_t>(m(i, k)) * v[k];
          img = img * p + acc % p;
        }
        out[x] = index_of_code[img];
      }
    }
    g.backward.push_back(invert(out));
    g.forward.push_back(std::move(out));
  }
  g.components = count_components(total, g.forward);
  return g;
}

SchreierGraph schreier_graph(const std::vector<Permutation>& gens, const std::string& action) {
  if (gens.empty()) throw InvalidArgument("schreier_graph: no generators");
  SchreierGraph g;
  g.vertices = gens[0].degree();
  g.action = action;
  for (const auto& s : gens) {
    if (s.degree() != g.vertices) throw DimensionMismatch("schreier_graph: permutation degrees differ");
    std::vector<std::uint32_t> f(g.vertices);
    for (std::uint32_t v = 0; v < g.vertices; ++v) f[v] = s(v);
    g.backward.push_back(invert(f));
    g.forward.push_back(std::move(f));
  }
  g.components = count_components(g.vertices, g.forward);
  return g;
}

SchreierGraph cycle_graph(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return schreier_graph({Permutation(img)}, "cycle");
}

namespace {

void deflate(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (auto& v : x) v -= mean;
}

double norm(const std::vector<double>& x) { return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0)); }

}  // namespace

SpectrumEstimate spectral_gap(const SchreierGraph& g, const LanczosOptions& opts) {
  SpectrumEstimate est;
  est.seed = opts.seed;
  est.connected = g.connected();
  const auto n = g.vertices;
  if (!est.connected) {
    est.gap = 0.0;
    est.lambda2 = 1.0;
    est.slem = 1.0;
    est.converged = true;
    return est;
  }
  if (n == 1) {
    est.lambda2 = est.lambda_min = 0.0;
    est.gap = 1.0;
    est.slem = 0.0;
    est.converged = true;
    return est;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> q(n), q_prev(n, 0.0), w(n);
  for (auto& v : q) v = unif(rng);
  deflate(q);
  {
    const double s = norm(q);
    for (auto& v : q) v /= s;
  }
  const std::size_t max_m = std::min<std::size_t>(opts.max_iterations, n - 1);
  const bool full_reorth = n * max_m <= opts.reorth_budget;
  std::vector<std::vector<double>> basis;
  std::vector<double> alpha, beta;
  double beta_prev = 0.0;
  auto evaluate = [&] {
    const auto m = alpha.size();
    Eigen::VectorXd diag(m), sub(m > 1 ? m - 1 : 1);
    for (std::size_t i = 0; i < m; ++i) diag[i] = alpha[i];
    for (std::size_t i = 0; i + 1 < m; ++i) sub[i] = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(m > 1 ? m - 1 : 0), Eigen::ComputeEigenvectors);
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();
    const double b = beta.size() >= m ? beta[m - 1] : 0.0;
    const double r_top = std::abs(b * vecs(m - 1, m - 1));
    const double r_bot = std::abs(b * vecs(m - 1, 0));
    est.lambda2 = vals[m - 1];
    est.lambda_min = vals[0];
    est.residual = std::max(r_top, r_bot);
    est.iterations = m;
    est.converged = est.residual <= opts.tol;
  };
  for (std::size_t it = 0; it < max_m; ++it) {
    kernels::adjacency_apply_parallel(g.forward, g.backward, q, w);
    const double a = std::inner_product(w.begin(), w.end(), q.begin(), 0.0);
    for (std::size_t i = 0; i < n; ++i) w[i] -= a * q[i] + beta_prev * q_prev[i];
    deflate(w);
    if (full_reorth) {
      basis.push_back(q);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& v : basis) {
          const double c = std::inner_product(w.begin(), w.end(), v.begin(), 0.0);
          for (std::size_t i = 0; i < n; ++i) w[i] -= c * v[i];
        }
    }
    const double b = norm(w);
    alpha.push_back(a);
    beta.push_back(b);
    const bool breakdown = b < 1e-12;
    if (breakdown || it + 1 == max_m || (it + 1) % 10 == 0) {
      evaluate();
      if (breakdown) est.residual = 0.0, est.converged = true;
      if (est.converged) break;
    }
    q_prev.swap(q);
    for (std::size_t i = 0; i < n; ++i) q[i] = w[i] / b;
    beta_prev = b;
  }
  if (alpha.size() == max_m && max_m == n - 1) {
    // The Krylov space exhausted the complement of the constants.
    est.converged = true;
  }
  est.gap = 1.0 - est.lambda2;
  est.slem = std::max(std::abs(est.lambda2), std::abs(est.lambda_min));
  return est;
}

std::vector<GapEntry> gap_series(const std::vector<std::pair<std::string, std::vector<MatFp>>>& markings,
                                 ActionKind action, std::size_t cap, const LanczosOptions& opts) {
  std::vector<GapEntry> out;
  for (const auto& [label, gens] : markings) {
    GapEntry e;
    e.label = label;
    e.dim = gens.empty() ? 0 : gens[0].dim();
    const auto size = action_size(action, e.dim, gens.empty() ? 2 : gens[0].modulus());
    e.vertices = size ? *size : UINT64_MAX;
    if (size && *size <= cap) e.estimate = spectral_gap(schreier_graph(gens, action, cap), opts);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace lef
