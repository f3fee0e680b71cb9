#include "lef/density.hpp"

#include <map>

#include "lef/errors.hpp"
#include "lef/marked_group.hpp"

namespace lef {

std::string to_string(const SlLabel& x) { return "SL(" + std::to_string(x.d) + "," + std::to_string(x.p) + ")"; }

std::optional<std::uint64_t> sl_order(std::size_t d, std::uint32_t p) {
  // p^{d(d-1)/2} prod_{i=2}^{d} (p^i - 1)
  unsigned __int128 total = 1;
  const unsigned __int128 limit = ~std::uint64_t{0};
  for (std::size_t i = 0; i < d * (d - 1) / 2; ++i) {
    total *= p;
    if (total > limit) return std::nullopt;
  }
  for (std::size_t i = 2; i <= d; ++i) {
    unsigned __int128 q = 1;
    for (std::size_t k = 0; k < i; ++k) {
      q *= p;
      if (q > limit) return std::nullopt;
    }
    total *= q - 1;
    if (total > limit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

FactorEvidence factor_surjectivity(const MarkingBundle& b, std::size_t bfs_cap, const CertificateOptions& opts) {
  FactorEvidence ev;
  ev.label = {b.dim(), b.p};
  const auto full = sl_order(b.dim(), b.p);
  if (full && *full <= bfs_cap) {
    ev.method = "bfs";
    const auto order = enumerate_subgroup(MatrixModel{b.dim(), b.p}, b.mats, bfs_cap);
    ev.status = order == *full ? Surjectivity::Verified : Surjectivity::Fails;
    ev.detail = "order=" + std::to_string(order) + "/" + std::to_string(*full);
    return ev;
  }
  ev.method = "certificate";
  const auto c = generation_certificate(b, opts);
  if (c.success) {
    ev.status = Surjectivity::Verified;
    ev.detail = "targets=" + std::to_string(c.targets.size()) + ",steps=" + std::to_string(c.steps.size());
  } else {
    const bool capped = c.failure.rfind("cap", 0) == 0;
    ev.status = capped ? Surjectivity::Unverifiable : Surjectivity::Fails;
    ev.detail = c.failure;
  }
  return ev;
}

std::string to_string(DensityVerdict v) {
  switch (v) {
    case DensityVerdict::Dense: return "dense";
    case DensityVerdict::NotGuaranteed: return "not-guaranteed";
    case DensityVerdict::Unverifiable: return "unverifiable";
  }
  return "?";
}

std::string simple_quotient_name(const SlLabel& x) {
  if (x.d < 2 || (x.d == 2 && x.p <= 3)) return {};
  if ((x.d == 3 && x.p == 2) || (x.d == 2 && x.p == 7)) return "PSL(2,7)";
  return "PSL(" + std::to_string(x.d) + "," + std::to_string(x.p) + ")";
}

DensityReport density_check(const std::vector<FactorEvidence>& factors) {
  DensityReport r;
  if (factors.empty()) throw InvalidArgument("density_check: no factors");
  bool shared = false, failed = false, unknown = false;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    const auto name = to_string(f.label);
    if (f.status == Surjectivity::Fails) {
      failed = true;
      r.reasons.push_back("factor " + std::to_string(i) + " " + name + " not onto: " + f.detail);
    } else if (f.status == Surjectivity::Unverifiable) {
      unknown = true;
      r.reasons.push_back("factor " + std::to_string(i) + " " + name + " unverified: " + f.detail);
    }
    if (f.label.d < 3) {
      shared = true;
      r.reasons.push_back("factor " + std::to_string(i) + " " + name + " has d < 3");
    }
    const auto q = simple_quotient_name(f.label);
    if (q.empty()) continue;
    auto [it, fresh] = seen.emplace(q, i);
    if (!fresh) {
      shared = true;
      r.reasons.push_back("factors " + std::to_string(it->second) + " and " + std::to_string(i) + " share quotient " + q);
    }
  }
  if (shared || failed) r.verdict = DensityVerdict::NotGuaranteed;
  else if (unknown) r.verdict = DensityVerdict::Unverifiable;
  else r.verdict = DensityVerdict::Dense;
  return r;
}

}  // namespace lef
