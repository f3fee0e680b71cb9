#include "lef/pipeline.hpp"

#include <map>
#include <numeric>

#include "lef/errors.hpp"
#include "lef/limit_model.hpp"
#include "lef/perm_groups.hpp"

namespace lef {

namespace {

std::uint32_t index_of(const FiniteGroup& g, const Permutation& x) {
  const auto& perms = g.permutations();
  for (std::uint32_t i = 0; i < perms.size(); ++i)
    if (perms[i] == x) return i;
  throw ConsistencyError("permutation not in its own closure");
}

MarkedGroup<MatrixModel> as_marked(const MarkingBundle& b) { return {MatrixModel{b.dim(), b.p}, b.mats}; }

std::string sl_name(const LevelData& lv) { return "SL(" + std::to_string(lv.dim()) + "," + std::to_string(lv.two.p) + ")"; }

}  // namespace

LevelData build_level(const ChainSpec& spec, std::size_t m) {
  if (m >= spec.depth()) throw InvalidArgument("build_level: level " + std::to_string(m) + " beyond depth");
  const auto& q = spec.quotients[m];
  LevelData lv;
  lv.m = m;
  lv.Q = FiniteGroup::from_permutations({q.s1, q.s2});
  lv.q1 = index_of(lv.Q, q.s1);
  lv.q2 = index_of(lv.Q, q.s2);
  const std::uint32_t c = 2 * spec.p;
  lv.L = FiniteGroup::direct_product(lv.Q, FiniteGroup::cyclic(c));
  lv.s1 = lv.q1 * c;
  lv.s2 = lv.q2 * c;
  lv.s3 = 1;
  lv.six = sym_six_marking(lv.L, lv.s1, lv.s2, lv.s3).generators();
  lv.heart = HeartBasis(lv.L, spec.p);
  lv.l = lv.heart.dim();
  const char* keys[] = {"x1", "x2", "x3", "x4", "x5", "x6"};
  for (std::size_t i = 0; i < 6; ++i) lv.x[keys[i]] = heart_matrix(lv.six[i], lv.heart);
  lv.nine = nine_marking_images(lv.x, spec.n);
  lv.two = amenable_two_marking(spec.n * lv.l, spec.p);
  return lv;
}

std::uint32_t eval_in_quotient(const LevelData& level, const Word& w) {
  std::uint32_t x = 0;
  for (int s : w) {
    const auto g = std::abs(s) == 1 ? level.q1 : level.q2;
    x = level.Q.mul(x, s > 0 ? g : level.Q.inv(g));
  }
  return x;
}

EmbeddingReport verify_embedding(const LevelData& level, const ChainSpec& spec, std::size_t cap) {
  EmbeddingReport rep;
  rep.m = level.m;
  const std::uint32_t c = 2 * spec.p;
  std::vector<Permutation> thetas;
  std::vector<MatFp> images;
  for (const auto& w : spec.xi) {
    const auto t = theta(eval_in_quotient(level, w) * c, level.L);
    const RingElement h = heart_matrix(t, level.heart);
    thetas.push_back(t);
    images.push_back(dmat(h, h, spec.n).flatten());
  }
  MarkedGroup<PermutationModel> sym(PermutationModel{level.set_size()}, thetas);
  MarkedGroup<MatrixModel> sl(MatrixModel{level.dim(), spec.p}, images);
  try {
    const auto iso = check_marked_isomorphism(sym, sl, cap);
    rep.order_sym = iso.order1;
    rep.order_sl = iso.order2;
    rep.isomorphic = iso.isomorphic;
    rep.failure = iso.failure;
  } catch (const CapExceeded& e) {
    rep.failure = e.what();
  }
  return rep;
}

std::vector<std::optional<int>> compare_amenable_limit(const std::vector<LevelData>& levels, std::uint32_t p, int Rmax,
                                                       std::size_t dim_cap) {
  std::vector<std::optional<int>> out;
  const auto lim = limit_model_marked(p, 4 * Rmax + 8);
  for (const auto& lv : levels) {
    if (lv.dim() > dim_cap) {
      out.emplace_back();
      continue;
    }
    out.push_back(agreement_radius(lim, as_marked(lv.two), Rmax));
  }
  return out;
}

namespace {

std::string join_series(const std::vector<std::optional<int>>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + (xs[i] ? std::to_string(*xs[i]) : std::string("cap"));
  return s;
}

bool non_decreasing(const std::vector<std::optional<int>>& xs) {
  std::optional<int> prev;
  for (const auto& x : xs) {
    if (!x) continue;
    if (prev && *x < *prev) return false;
    prev = x;
  }
  return true;
}

void bundle_checks(Report& r, const std::string& lvl, const std::string& family, const MarkingBundle& b) {
  ReportRecord rec{lvl, "det-" + family, "ok", "dim=" + std::to_string(b.dim()) + ",gens=" + std::to_string(b.mats.size())};
  rec.hard = true;
  try {
    validate_bundle(b);
  } catch (const Error& e) {
    rec.verdict = "fail";
    rec.ok = false;
    rec.payload += "," + std::string(e.what());
  }
  r.add(rec);
}

}  // namespace

Report run_main_theorem(const ChainSpec& spec, const PipelineOptions& opts) {
  Report r;
  add_standard_meta(r, opts.seed);
  r.meta("p", std::to_string(spec.p));
  r.meta("n", std::to_string(spec.n));
  r.meta("depth", std::to_string(spec.depth()));
  std::vector<LevelData> levels;
  for (std::size_t m = 0; m < spec.depth(); ++m) {
    const auto lvl = std::to_string(m);
    try {
      levels.push_back(build_level(spec, m));
    } catch (const Error& e) {
      r.add({lvl, "build", "fail", e.what(), "none", true, false});
      continue;
    }
    const auto& lv = levels.back();
    r.add({lvl, "arith", "ok",
           "#Q=" + std::to_string(lv.Q.order()) + ",#L=" + std::to_string(lv.set_size()) + ",l=" + std::to_string(lv.l) +
               ",N=" + std::to_string(lv.dim()) + ",G=" + sl_name(lv),
           "none", true, lv.l + 2 == lv.set_size() && lv.set_size() == 2 * spec.p * lv.Q.order()});
    bundle_checks(r, lvl, "two", lv.two);
    bundle_checks(r, lvl, "nine", lv.nine);
    {
      // Relations of the free factors, re-checked on the assignment.
      const auto& x = lv.x;
      auto m_of = [&](const char* k) { return std::get<MatFp>(x.at(k)); };
      const auto I = MatFp::identity(lv.l, spec.p);
      const bool ok = (m_of("x1") * m_of("x1")).is_identity() && (m_of("x2") * m_of("x2")).is_identity() &&
                      (m_of("x3") * m_of("x3")).is_identity() && power(m_of("x6"), 2 * spec.p) == I &&
                      is_invertible(m_of("x4")) && is_invertible(m_of("x5"));
      r.add({lvl, "nine-relations", ok ? "ok" : "fail", "x6-order=" + std::to_string(element_order(m_of("x6"))), "none",
             true, ok});
    }
    {
      const auto o1 = element_order(lv.two.mats[0]);
      const auto o2 = element_order(lv.two.mats[1]);
      const bool ok = o1 != 0 && o2 != 0 && std::gcd(o1, o2) == 1;
      r.add({lvl, "two-orders-coprime", ok ? "ok" : "fail",
             "order(t1)=" + std::to_string(o1) + ",order(t2)=" + std::to_string(o2), "none", false, ok});
    }
    {
      const bool wreath_ok = spec.n % 2 == 1 && spec.n >= 5 && spec.n % spec.p != 0;
      r.add({lvl, "hypotheses", wreath_ok ? "in-range" : "outside",
             "wreath-variant-needs:n-odd>=5,p-not-dividing-n", "none", false, true});
    }
    {
      const auto e = verify_embedding(lv, spec, opts.closure_cap);
      r.add({lvl, "embedding", e.isomorphic ? "isomorphic" : "not-isomorphic",
             "order-sym=" + std::to_string(e.order_sym) + ",order-sl=" + std::to_string(e.order_sl) +
                 (e.failure.empty() ? "" : "," + e.failure),
             "closure=" + std::to_string(opts.closure_cap), true, e.isomorphic});
    }
  }
  if (levels.empty()) return r;
  // Divisibility of embedding orders along the chain.
  {
    std::vector<std::size_t> orders;
    for (const auto& rec : r.records())
      if (rec.check == "embedding") orders.push_back(std::stoul(rec.payload.substr(rec.payload.find('=') + 1)));
    bool ok = true;
    std::string s;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      s += (i ? "," : "") + std::to_string(orders[i]);
      if (i && (orders[i - 1] == 0 || orders[i] % orders[i - 1] != 0)) ok = false;
    }
    r.add({"all", "embedding-divisibility", ok ? "ok" : "fail", "orders=" + s, "none", true, ok});
  }
  {
    bool ok = true;
    std::string s;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      s += (i ? "," : "") + std::to_string(levels[i].l);
      if (levels[i].l % 2 != 0 || (i && levels[i].l <= levels[i - 1].l)) ok = false;
    }
    r.add({"all", "l-increasing-even", ok ? "ok" : "fail", "l=" + s, "none", true, ok});
  }
  // Surjectivity per factor and density per family.
  for (const char* family : {"two", "nine"}) {
    std::vector<FactorEvidence> ev;
    for (const auto& lv : levels) {
      const auto& b = std::string(family) == "two" ? lv.two : lv.nine;
      ev.push_back(factor_surjectivity(b, opts.bfs_cap, opts.certificate));
      const auto& f = ev.back();
      const char* verdict = f.status == Surjectivity::Verified ? "onto" : f.status == Surjectivity::Fails ? "not-onto" : "unverifiable";
      r.add({std::to_string(lv.m), std::string("surjective-") + family, verdict, f.method + ":" + f.detail,
             "block<=" + std::to_string(opts.certificate.max_block), true, f.status != Surjectivity::Fails});
    }
    const auto d = density_check(ev);
    std::string why;
    for (const auto& x : d.reasons) why += (why.empty() ? "" : ";") + x;
    std::string labels;
    for (const auto& f : ev) labels += (labels.empty() ? "" : ",") + to_string(f.label);
    r.add({"all", std::string("density-") + family, to_string(d.verdict), "labels=" + labels + (why.empty() ? "" : ";" + why),
           "none", true, d.verdict != DensityVerdict::NotGuaranteed});
  }
  {
    const auto radii = compare_amenable_limit(levels, spec.p, opts.rmax_two, opts.agreement_dim_cap);
    r.add({"all", "agreement-two-vs-limit", non_decreasing(radii) ? "non-decreasing" : "decreasing",
           "Rmax=" + std::to_string(opts.rmax_two) + ",radii=" + join_series(radii),
           "dim<=" + std::to_string(opts.agreement_dim_cap), false, true});
  }
  {
    std::vector<std::optional<int>> radii;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
      if (std::max(levels[i].dim(), levels[i + 1].dim()) > opts.agreement_dim_cap) {
        radii.emplace_back();
        continue;
      }
      radii.push_back(agreement_radius(as_marked(levels[i].nine), as_marked(levels[i + 1].nine), opts.rmax_nine));
    }
    r.add({"all", "agreement-nine-consecutive", non_decreasing(radii) ? "non-decreasing" : "decreasing",
           "Rmax=" + std::to_string(opts.rmax_nine) + ",radii=" + join_series(radii),
           "dim<=" + std::to_string(opts.agreement_dim_cap), false, true});
  }
  return r;
}

}  // namespace lef
