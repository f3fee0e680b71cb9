#include "lef/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "lef/certificate.hpp"
#include "lef/chain.hpp"
#include "lef/density.hpp"
#include "lef/elementary.hpp"
#include "lef/errors.hpp"
#include "lef/heart.hpp"
#include "lef/limit_model.hpp"
#include "lef/markings.hpp"
#include "lef/matrix_io.hpp"
#include "lef/perm_groups.hpp"
#include "lef/pipeline.hpp"
#include "lef/report.hpp"
#include "lef/spectral.hpp"
#include "lef/wreath.hpp"

namespace lef {
namespace {

struct Options {
  RunConfig cfg;
  // verify-identities
  std::uint32_t p = 3;
  std::size_t n = 3;
  std::size_t samples = 100;
  // run-chain
  int rmax_nine = 1;
  std::size_t bfs_cap = 200'000;
  // agreement
  std::string family = "amenable";
  std::vector<std::uint64_t> orders;
  // density
  std::vector<std::string> labels;
  // irreducible
  std::size_t size = 6;
  std::uint32_t s1 = 1, s2 = 1, s3 = 1;
  // wreath
  unsigned k = 20;
  std::size_t J = 9;
  std::string convention = "right";
  // spectral
  std::vector<std::size_t> cycles;
  std::vector<std::size_t> amenable;
  std::vector<std::size_t> nine;
  std::string action = "projective";
  // export
  std::size_t level = 0;
  std::string what = "two";
  std::string matrices;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8g", x);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  return s.str();
}

std::string caps_string(const RunConfig& c) {
  return "ball=" + std::to_string(c.ball_cap) + ",closure=" + std::to_string(c.closure_cap) +
         ",vertices=" + std::to_string(c.vertex_cap) + ",word=" + std::to_string(c.word_cap);
}

ReportRecord rec(std::string level, std::string check, bool ok, std::string payload, std::string caps = "none") {
  return {std::move(level), std::move(check), ok ? "pass" : "fail", std::move(payload), std::move(caps), true, ok};
}

ReportRecord info(std::string level, std::string check, std::string verdict, std::string payload,
                  std::string caps = "none") {
  return {std::move(level), std::move(check), std::move(verdict), std::move(payload), std::move(caps), false, true};
}

MarkedGroup<MatrixModel> as_group(const MarkingBundle& b) { return {MatrixModel{b.dim(), b.p}, b.mats}; }

ChainSpec load_chain(const RunConfig& c) { return parse_chain(read_file(c.input)); }

// ---------------------------------------------------------------------------

std::vector<RingDescriptor> identity_rings(std::uint32_t p) {
  auto S3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(3));
  return {PrimeField{p}, MatrixRing{2, p}, MatrixRing{3, 2}, GroupAlgebra{S3, p}};
}

Report verify_identities(const Options& o) {
  if (o.n < 3) throw InvalidArgument("--n must be at least 3");
  Report r;
  std::mt19937_64 rng(o.cfg.seed);
  for (const auto& R : identity_rings(o.p)) {
    const auto name = describe(R);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < o.samples; ++t) {
      const auto u = random_unit(R, rng);
      if (!(order2_word(u) == dmat(u, ring_inverse(u)))) ++bad;
    }
    r.add(rec(name, "order2-word", bad == 0, "samples=" + std::to_string(o.samples) + ",mismatches=" + std::to_string(bad)));

    bad = 0;
    std::size_t checked = 0;
    for (std::size_t t = 0; t < o.samples; ++t) {
      const auto a = random_element(R, rng), b = random_element(R, rng);
      for (std::size_t i = 1; i <= o.n; ++i)
        for (std::size_t j = 1; j <= o.n; ++j)
          for (std::size_t k = 1; k <= o.n; ++k) {
            if (i == j || j == k || i == k) continue;
            ++checked;
            if (!(commutator(elem(i, j, a, o.n), elem(j, k, b, o.n)) == elem(i, k, ring_mul(a, b), o.n))) ++bad;
          }
    }
    r.add(rec(name, "sharp-relation", bad == 0,
              "n=" + std::to_string(o.n) + ",checked=" + std::to_string(checked) + ",mismatches=" + std::to_string(bad)));

    const bool sgn = beta_signed_for(o.n) && characteristic(R) != 2;
    const auto b = beta(o.n, sgn, R);
    const auto bi = inverse(b);
    bad = 0;
    checked = 0;
    for (std::size_t t = 0; t < o.samples; ++t) {
      const auto x = random_element(R, rng);
      for (std::size_t i = 1; i <= o.n; ++i)
        for (std::size_t j = 1; j <= o.n; ++j) {
          if (i == j) continue;
          ++checked;
          const bool flip = sgn && ((i == o.n) != (j == o.n));
          const auto want = elem(i % o.n + 1, j % o.n + 1, flip ? ring_neg(x) : x, o.n);
          if (!(b * elem(i, j, x, o.n) * bi == want)) ++bad;
        }
    }
    r.add(rec(name, "beta-conjugation", bad == 0,
              "n=" + std::to_string(o.n) + ",signed=" + (sgn ? "yes" : "no") + ",checked=" + std::to_string(checked) +
                  ",mismatches=" + std::to_string(bad)));
  }

  for (std::size_t i : {1u, 2u}) {
    const auto bundle = mu_images(i, o.n, o.p);
    const auto c = generation_certificate(bundle);
    std::size_t longest = 0;
    bool words_ok = c.success;
    if (c.success) {
      const auto g = as_group(bundle);
      for (std::size_t s = 0; s < c.steps.size() && words_ok; ++s) {
        Word w;
        try {
          w = expand_step(c, s, o.cfg.word_cap);
        } catch (const CapExceeded&) {
          continue;  // long words are covered by the matrix-level verification
        }
        longest = std::max(longest, w.size());
        if (c.steps[s].op == SlpStep::Op::Generator && !(g.eval(w) == bundle.mats[c.steps[s].a])) words_ok = false;
      }
    }
    const std::string ring = "Mat_" + std::to_string(i) + "(F_" + std::to_string(o.p) + ")";
    r.add(rec(ring, "certificate", c.success && c.verified_steps && c.verified_targets && words_ok,
              c.success ? "steps=" + std::to_string(c.steps.size()) + ",targets=" + std::to_string(c.targets.size()) +
                              ",longest_word=" + std::to_string(longest)
                        : c.failure,
              "word=" + std::to_string(o.cfg.word_cap)));
  }
  r.meta("p", std::to_string(o.p));
  r.meta("n", std::to_string(o.n));
  r.meta("samples", std::to_string(o.samples));
  return r;
}

Report run_chain(const Options& o) {
  const auto spec = load_chain(o.cfg);
  PipelineOptions po;
  po.rmax_two = o.cfg.rmax;
  po.rmax_nine = o.rmax_nine;
  po.closure_cap = o.cfg.closure_cap;
  po.bfs_cap = o.bfs_cap;
  po.seed = o.cfg.seed;
  return run_main_theorem(spec, po);
}

Report agreement_cmd(const Options& o) {
  Report r;
  const int R = o.cfg.rmax;
  const std::string caps = "ball=" + std::to_string(o.cfg.ball_cap);
  if (o.family == "cyclic") {
    if (o.orders.size() < 2) throw InvalidArgument("--orders needs at least two values for the cyclic family");
    for (std::size_t i = 0; i + 1 < o.orders.size(); ++i) {
      const auto a = o.orders[i], b = o.orders[i + 1];
      if (a == 0 || b == 0) throw InvalidArgument("--orders must be positive");
      MarkedGroup<CyclicModel> g1(CyclicModel{a}, {1 % a}), g2(CyclicModel{b}, {1 % b});
      const auto res = agreement(g1, g2, R, o.cfg.ball_cap);
      r.add(info(std::to_string(i), "agreement-radius", std::to_string(res.radius),
                 "Z/" + std::to_string(a) + "_vs_Z/" + std::to_string(b) + ",separating_length=" +
                     std::to_string(res.separating_length),
                 caps));
    }
    return r;
  }
  if (o.family != "amenable") throw InvalidArgument("--family must be 'amenable' or 'cyclic'");
  const std::uint32_t p = o.p;
  auto orders = o.orders;
  if (orders.empty()) orders = {10, 16, 22};
  const auto lim = limit_model_marked(p, 4 * R + 8);
  std::vector<int> radii;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const auto res = agreement(lim, as_group(amenable_two_marking(orders[i], p)), R, o.cfg.ball_cap);
    radii.push_back(res.radius);
    r.add(info(std::to_string(i), "agreement-vs-limit", std::to_string(res.radius),
               "N=" + std::to_string(orders[i]) + ",p=" + std::to_string(p) + ",separating_length=" +
                   std::to_string(res.separating_length),
               caps));
  }
  bool mono = true;
  for (std::size_t i = 1; i < radii.size(); ++i) mono = mono && radii[i] >= radii[i - 1];
  r.add(rec("all", "radii-non-decreasing", mono, "Rmax=" + std::to_string(R) + ",radii=" + join(radii)));
  r.meta("rmax", std::to_string(R));
  return r;
}

SlLabel parse_label(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InvalidArgument("label '" + s + "' is not of the form d:p");
  try {
    std::size_t used = 0;
    const auto d = std::stoul(s.substr(0, colon), &used);
    if (used != colon) throw InvalidArgument("label '" + s + "'");
    const auto p = std::stoul(s.substr(colon + 1), &used);
    if (used != s.size() - colon - 1) throw InvalidArgument("label '" + s + "'");
    return {d, static_cast<std::uint32_t>(p)};
  } catch (const std::logic_error&) {
    throw InvalidArgument("label '" + s + "' is not of the form d:p");
  }
}

Report density_cmd(const Options& o) {
  Report r;
  std::vector<FactorEvidence> ev;
  if (!o.cfg.input.empty()) {
    const auto spec = load_chain(o.cfg);
    for (std::size_t m = 0; m < spec.depth(); ++m) ev.push_back(factor_surjectivity(build_level(spec, m).two, o.bfs_cap));
  } else {
    if (o.labels.empty()) throw InvalidArgument("density needs a chain file or --labels");
    for (const auto& s : o.labels) {
      const auto lab = parse_label(s);
      ev.push_back(factor_surjectivity(amenable_two_marking(lab.d, lab.p), o.bfs_cap));
    }
  }
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const auto& f = ev[i];
    const char* v = f.status == Surjectivity::Verified ? "onto" : f.status == Surjectivity::Fails ? "not-onto" : "unverifiable";
    r.add(info(std::to_string(i), "factor", v, to_string(f.label) + "," + f.method + ":" + f.detail,
               "bfs=" + std::to_string(o.bfs_cap)));
  }
  const auto d = density_check(ev);
  std::string why;
  for (const auto& x : d.reasons) why += (why.empty() ? "" : ";") + x;
  ReportRecord out{"all", "density", to_string(d.verdict), why, "none", true, d.verdict != DensityVerdict::NotGuaranteed};
  r.add(out);
  return r;
}

Report irreducible_cmd(const Options& o) {
  if (o.size < 3) throw InvalidArgument("--size must be at least 3");
  Report r;
  const auto L = FiniteGroup::cyclic(o.size);
  if (o.s1 >= o.size || o.s2 >= o.size || o.s3 >= o.size) throw InvalidArgument("s1, s2, s3 must lie in Z/size");
  const auto six = six_tuple(L, o.s1, o.s2, o.s3);
  const HeartBasis hb(L, o.p);
  std::vector<MatFp> mats;
  for (const auto& g : six) mats.push_back(heart_matrix(g, hb));
  const auto span = algebra_span_dim(mats);
  const auto want = (o.size - 2) * (o.size - 2);
  const std::string tag = "#L=" + std::to_string(o.size) + ",p=" + std::to_string(o.p);
  r.add(rec("all", "algebra-span", span == want, tag + ",span=" + std::to_string(span) + ",full=" + std::to_string(want)));
  bool irr = false;
  std::string why = "irreducible";
  try {
    irr = is_irreducible_heart(hb, six);
    if (!irr) why = "reducible";
  } catch (const InvalidArgument& e) {
    why = e.what();
  }
  r.add(rec("all", "irreducible", irr, tag + "," + why));
  std::mt19937_64 rng(o.cfg.seed);
  std::size_t bad = 0;
  for (std::size_t t = 0; t < o.samples; ++t) {
    std::vector<std::uint32_t> a(o.size), b(o.size);
    for (std::uint32_t i = 0; i < o.size; ++i) a[i] = b[i] = i;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation s(a), u(b);
    if (!(heart_matrix(compose(s, u), hb) == heart_matrix(s, hb) * heart_matrix(u, hb))) ++bad;
  }
  r.add(rec("all", "multiplicative", bad == 0,
            tag + ",samples=" + std::to_string(o.samples) + ",mismatches=" + std::to_string(bad)));
  return r;
}

Report wreath_cmd(const Options& o) {
  Report r;
  WreathMarkingParams params{o.k, o.J, WreathConvention::Right};
  if (o.convention == "left")
    params.convention = WreathConvention::Left;
  else if (o.convention != "right")
    throw InvalidArgument("--convention must be 'right' or 'left'");
  const auto sep = separation_check(params);
  r.add(rec("all", "separation", sep.ok(),
            "k=" + std::to_string(o.k) + ",J=" + std::to_string(o.J) + ",points=" + std::to_string(sep.points) +
                (sep.failure.empty() ? "" : "," + sep.failure)));
  r.meta("semidirect", to_string(params.convention));

  if (!o.cfg.input.empty()) {
    const auto spec = load_chain(o.cfg);
    for (std::size_t m = 0; m < spec.depth(); ++m) {
      const auto lv = build_level(spec, m);
      const auto lvl = std::to_string(m);
      if (!sep.ok()) break;
      const auto tm = build_two_marking_wreath(lv.two, lv.nine, params);
      std::size_t good = 0;
      std::string fail;
      for (std::size_t j = 1; j <= o.J; ++j) {
        try {
          hall_extract(tm.model, tm.w2, j, params, tm.targets[j - 1]);
          ++good;
        } catch (const ConsistencyError& e) {
          if (fail.empty()) fail = "j=" + std::to_string(j) + ":" + e.what();
        }
      }
      r.add(rec(lvl, "hall-extract", good == o.J,
                "N=" + std::to_string(lv.dim()) + ",extracted=" + std::to_string(good) + "/" + std::to_string(o.J) +
                    (fail.empty() ? "" : "," + fail)));
      try {
        const auto c = coprime_extract(tm.model, tm.w1);
        const bool isolated = c.slot0.base.size() <= 1 && c.slot1.base.size() <= 1;
        r.add(rec(lvl, "coprime-extract", isolated,
                  "orders=" + std::to_string(c.order0) + "," + std::to_string(c.order1) +
                      ",exponents=" + std::to_string(c.exponent0) + "," + std::to_string(c.exponent1)));
      } catch (const InvalidArgument& e) {
        r.add(info(lvl, "coprime-extract", "not-coprime", e.what()));
      }
    }
    return r;
  }

  // Without a chain: single-slot extraction over SL(2,3) and the (3,5,12) coprime instance.
  if (sep.ok()) {
    MarkedGroup<MatrixModel> sl(MatrixModel{2, 3}, {MatFp::from_rows({{1, 1}, {0, 1}}, 3), MatFp::from_rows({{1, 0}, {1, 1}}, 3)});
    const auto elts = ball(sl, kUnbounded).elements;
    MatrixWreath W{MatrixModel{2, 3}, o.k, params.convention};
    std::mt19937_64 rng(o.cfg.seed);
    const auto pts = params.support_points();
    std::map<std::uint64_t, MatFp> f;
    std::vector<MatFp> want;
    for (std::size_t j = 0; j < o.J; ++j) {
      const auto& c = elts[rng() % elts.size()];
      const auto& d = elts[rng() % elts.size()];
      f.emplace(pts[j], c);
      f.emplace(pts[j + o.J], d);
      want.push_back(inverse(c) * inverse(d) * c * d);
    }
    const auto w2 = W.lift(f);
    std::size_t good = 0;
    std::string fail;
    for (std::size_t j = 1; j <= o.J; ++j) {
      try {
        hall_extract(W, w2, j, params, want[j - 1]);
        ++good;
      } catch (const ConsistencyError& e) {
        if (fail.empty()) fail = "j=" + std::to_string(j) + ":" + e.what();
      }
    }
    r.add(rec("SL(2,3)", "hall-extract", good == o.J,
              "extracted=" + std::to_string(good) + "/" + std::to_string(o.J) + (fail.empty() ? "" : "," + fail)));
  }
  const auto two = amenable_two_marking(50, 3);
  MatrixWreath W{MatrixModel{50, 3}, 4, WreathConvention::Right};
  const auto c = coprime_extract(W, W.lift({{0, two.mats[0]}, {1, two.mats[1]}}));
  const bool isolated = c.slot0.base.size() == 1 && c.slot0.base.begin()->first == 0 && c.slot1.base.size() == 1 &&
                        c.slot1.base.begin()->first == 1;
  r.add(rec("SL(50,3)", "coprime-extract", isolated,
            "orders=" + std::to_string(c.order0) + "," + std::to_string(c.order1) + ",exponents=" +
                std::to_string(c.exponent0) + "," + std::to_string(c.exponent1)));
  return r;
}

ActionKind parse_action(const std::string& s) {
  if (s == "projective") return ActionKind::ProjectivePoints;
  if (s == "vectors") return ActionKind::NonzeroVectors;
  throw InvalidArgument("--action must be 'projective' or 'vectors'");
}

void add_gap(Report& r, const std::string& level, const GapEntry& e, std::size_t cap) {
  const std::string caps = "vertices=" + std::to_string(cap);
  const std::string head = e.label + ",dim=" + std::to_string(e.dim) + ",vertices=" + std::to_string(e.vertices);
  if (!e.estimate) {
    r.add({level, "gap-" + e.label, "over-cap", head, caps, true, false});
    return;
  }
  const auto& s = *e.estimate;
  r.add({level, "gap-" + e.label, s.converged ? fmt(s.gap) : "unconverged",
         head + ",lambda2=" + fmt(s.lambda2) + ",slem=" + fmt(s.slem) + ",connected=" + (s.connected ? "yes" : "no") +
             ",iterations=" + std::to_string(s.iterations),
         caps, true, s.converged});
}

Report spectral_cmd(const Options& o) {
  Report r;
  const auto action = parse_action(o.action);
  LanczosOptions lo;
  lo.seed = o.cfg.seed;
  for (auto n : o.cycles) {
    if (n < 3) throw InvalidArgument("cycle length must be at least 3");
    const auto est = spectral_gap(cycle_graph(n), lo);
    const double want = 1.0 - std::cos(2.0 * std::numbers::pi / static_cast<double>(n));
    const double err = std::abs(est.gap - want);
    r.add(rec(std::to_string(n), "cycle-gap", err <= 1e-8,
              "gap=" + fmt(est.gap) + ",exact=" + fmt(want) + ",error=" + fmt(err), "tol=1e-8"));
  }
  std::vector<std::pair<std::string, std::vector<MatFp>>> fam;
  for (auto N : o.amenable) fam.emplace_back("two-N" + std::to_string(N), amenable_two_marking(N, o.p).mats);
  for (auto n : o.nine) {
    RingAssignment x;
    for (const char* key : {"x1", "x2", "x3", "x4", "x5", "x6"}) x[key] = ring_one(PrimeField{o.p});
    fam.emplace_back("nine-n" + std::to_string(n), nine_marking_images(x, n).mats);
  }
  for (const auto& e : gap_series(fam, action, o.cfg.vertex_cap, lo)) add_gap(r, "family", e, o.cfg.vertex_cap);
  if (!o.cfg.input.empty()) {
    const auto spec = load_chain(o.cfg);
    for (std::size_t m = 0; m < spec.depth(); ++m) {
      const auto lv = build_level(spec, m);
      const std::vector<std::pair<std::string, std::vector<MatFp>>> pair{{"two", lv.two.mats}, {"nine", lv.nine.mats}};
      for (const auto& e : gap_series(pair, action, o.cfg.vertex_cap, lo)) add_gap(r, std::to_string(m), e, o.cfg.vertex_cap);
    }
  }
  r.meta("action", o.action);
  return r;
}

Report export_cmd(const Options& o) {
  if (o.matrices.empty()) throw InvalidArgument("export needs --matrices <path>");
  const auto spec = load_chain(o.cfg);
  const auto lv = build_level(spec, o.level);
  std::vector<MatFp> mats;
  if (o.what == "two")
    mats = lv.two.mats;
  else if (o.what == "nine")
    mats = lv.nine.mats;
  else if (o.what == "heart")
    for (const auto& g : lv.six) mats.push_back(heart_matrix(g, lv.heart));
  else
    throw InvalidArgument("--what must be one of two, nine, heart");
  const auto text = write_matrices(mats);
  {
    std::ofstream f(o.matrices, std::ios::binary);
    if (!f || !(f << text)) throw Error("cannot write '" + o.matrices + "'");
  }
  const bool round_trip = read_matrices(read_file(o.matrices)) == mats;
  Report r;
  r.add(rec(std::to_string(o.level), "export-" + o.what, round_trip,
            "blocks=" + std::to_string(mats.size()) + ",d=" + std::to_string(mats.front().dim()) + ",p=" +
                std::to_string(spec.p) + ",digest=" + hex64(fnv1a(text))));
  return r;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  auto& c = o.cfg;
  CLI::App app{"Verification driver for SL(N, F_p) marked-group constructions", "lefctl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", c.seed, "RNG seed recorded in every report");
  app.add_option("--rmax", c.rmax, "Agreement radius bound Rmax")->check(CLI::NonNegativeNumber);
  app.add_option("--ball-cap", c.ball_cap, "Maximum elements per ball")->check(CLI::PositiveNumber);
  app.add_option("--closure-cap", c.closure_cap, "Maximum subgroup closure size")->check(CLI::PositiveNumber);
  app.add_option("--vertex-cap", c.vertex_cap, "Maximum Schreier graph vertices")->check(CLI::PositiveNumber);
  app.add_option("--word-cap", c.word_cap, "Maximum expanded word length")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "Report path (default stdout)");

  auto* vi = app.add_subcommand("verify-identities", "Order-2 word, (#) relation, beta conjugation, certificates");
  vi->add_option("--p", o.p, "Characteristic")->check(CLI::Range(2u, 251u));
  vi->add_option("--n", o.n, "Matrix size over the ring")->check(CLI::Range(3u, 12u));
  vi->add_option("--samples", o.samples, "Random samples per ring family")->check(CLI::PositiveNumber);

  auto* rc = app.add_subcommand("run-chain", "Full verification of a chain file");
  rc->add_option("chain", c.input, "Chain file")->required();
  rc->add_option("--rmax-nine", o.rmax_nine, "Rmax for consecutive nine-markings")->check(CLI::NonNegativeNumber);
  rc->add_option("--bfs-cap", o.bfs_cap, "Largest |SL| decided by BFS")->check(CLI::PositiveNumber);

  auto* ag = app.add_subcommand("agreement", "Agreement radii");
  ag->add_option("--family", o.family, "amenable (against the limit model) or cyclic");
  ag->add_option("--orders", o.orders, "N values (amenable) or cyclic orders")->delimiter(',');
  ag->add_option("--p", o.p, "Characteristic for the amenable family")->check(CLI::Range(3u, 251u));

  auto* de = app.add_subcommand("density", "Density criterion over product factors");
  de->add_option("chain", c.input, "Chain file");
  de->add_option("--labels", o.labels, "Factor labels d:p")->delimiter(',');
  de->add_option("--bfs-cap", o.bfs_cap, "Largest |SL| decided by BFS")->check(CLI::PositiveNumber);

  auto* ir = app.add_subcommand("irreducible", "Heart representation of the six-marking over Z/size");
  ir->add_option("--size", o.size, "#L")->check(CLI::Range(3u, 64u));
  ir->add_option("--p", o.p, "Characteristic")->check(CLI::Range(3u, 251u));
  ir->add_option("--s1", o.s1);
  ir->add_option("--s2", o.s2);
  ir->add_option("--s3", o.s3);
  ir->add_option("--samples", o.samples, "Multiplicativity samples")->check(CLI::PositiveNumber);

  auto* wr = app.add_subcommand("wreath", "Separation, Hall and coprime extraction");
  wr->add_option("chain", c.input, "Chain file; extraction runs on its levels");
  wr->add_option("--k", o.k, "Base 2^k of the cyclic top group")->check(CLI::Range(2u, 62u));
  wr->add_option("--J", o.J, "Number of commutator pairs")->check(CLI::Range(1u, 9u));
  wr->add_option("--convention", o.convention, "right or left");

  auto* sp = app.add_subcommand("spectral", "Spectral gaps of Schreier graphs");
  sp->add_option("chain", c.input, "Chain file; gaps of both markings per level");
  sp->add_option("--cycles", o.cycles, "Cycle lengths")->delimiter(',');
  sp->add_option("--amenable", o.amenable, "Dimensions N of amenable two-markings")->delimiter(',');
  sp->add_option("--nine", o.nine, "Sizes n of unit nine-markings over F_p")->delimiter(',');
  sp->add_option("--p", o.p, "Characteristic for the families")->check(CLI::Range(3u, 251u));
  sp->add_option("--action", o.action, "projective or vectors");

  auto* ex = app.add_subcommand("export", "Write a level's marking as text matrices");
  ex->add_option("chain", c.input, "Chain file")->required();
  ex->add_option("--level", o.level, "Level index");
  ex->add_option("--what", o.what, "two, nine or heart");
  ex->add_option("--matrices", o.matrices, "Destination of the matrices")->required();

  // Name the offending word when the first positional is not a subcommand.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "-h" || a == "--help") break;
    if (!a.empty() && a.front() == '-') {
      if (a.find('=') == std::string::npos) ++i;  // every global option takes a value
      continue;
    }
    if (!app.get_subcommand_no_throw(a)) {
      err << "error: unknown subcommand '" << a << "'\n";
      return kExitBadInput;
    }
    break;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "density" && !c.input.empty() && !o.labels.empty()) {
    err << "error: density takes a chain file or --labels, not both\n";
    return kExitBadInput;
  }

  Report report;
  try {
    if (c.subcommand == "verify-identities") report = verify_identities(o);
    else if (c.subcommand == "run-chain") report = run_chain(o);
    else if (c.subcommand == "agreement") report = agreement_cmd(o);
    else if (c.subcommand == "density") report = density_cmd(o);
    else if (c.subcommand == "irreducible") report = irreducible_cmd(o);
    else if (c.subcommand == "wreath") report = wreath_cmd(o);
    else if (c.subcommand == "spectral") report = spectral_cmd(o);
    else report = export_cmd(o);
  } catch (const ParseError& e) {
    err << "error: " << c.input << ": " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    err << "error: " << c.subcommand << " aborted: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  // Inputs digest: every argument that can change the outcome, plus the input file.
  std::string canon;
  for (const CLI::App* sub : std::vector<const CLI::App*>{&app, app.get_subcommands().front()})
    for (const auto* opt : sub->get_options())
      if (opt->get_name() != "--out" && opt->get_name() != "--help" && opt->get_name() != "--matrices")
        canon += opt->get_name() + "=" + join(opt->results()) + ";";
  if (!c.input.empty()) canon += "file=" + hex64(fnv1a(read_file(c.input)));
  add_standard_meta(report, c.seed, c.subcommand == "wreath" ? o.convention : "right");
  report.meta("subcommand", c.subcommand);
  report.meta("rmax", std::to_string(c.rmax));
  report.meta("caps", caps_string(c));
  report.set_input_digest(hex64(fnv1a(c.subcommand + ";" + canon)));

  const auto text = report.render();
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f || !(f << text)) {
      err << "error: cannot write '" << c.out << "'\n";
      return kExitCheckFailed;
    }
  }
  if (!report.passed()) {
    for (const auto& name : report.failures()) err << "failed check: " << name << "\n";
    return kExitCheckFailed;
  }
  return kExitPass;
}

}  // namespace lef
