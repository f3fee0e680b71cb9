#include "lef/certificate.hpp"

#include <map>

#include "lef/echelon.hpp"
#include "lef/errors.hpp"

namespace lef {

std::optional<BlockElementary> as_block_elementary(const MatFp& m, std::size_t n, std::size_t l) {
  if (m.dim() != n * l) throw DimensionMismatch("as_block_elementary: shape mismatch");
  std::optional<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const std::uint32_t want = i == j ? 1 : 0;
      if (m(i, j) == want) continue;
      const std::pair<std::size_t, std::size_t> blk{i / l, j / l};
      if (blk.first == blk.second) return std::nullopt;
      if (pos && *pos != blk) return std::nullopt;
      pos = blk;
    }
  if (!pos) return std::nullopt;
  return BlockElementary{pos->first, pos->second, block(m, pos->first, pos->second, l)};
}

namespace {

std::vector<std::uint8_t> flat(const MatFp& x) { return {x.data().begin(), x.data().end()}; }

std::optional<std::uint32_t> scalar_unit(const MatFp& x) {
  const auto c = x(0, 0);
  if (c == 0) return std::nullopt;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (x(i, j) != (i == j ? c : 0)) return std::nullopt;
  return c;
}

/// True when y = c x for a nonzero scalar c.
bool proportional(const MatFp& x, const MatFp& y) {
  std::uint32_t c = 0;
  const auto p = x.modulus();
  for (std::size_t k = 0; k < x.data().size(); ++k) {
    const std::uint32_t a = x.data()[k], b = y.data()[k];
    if (a == 0 && b == 0) continue;
    if (a == 0 || b == 0) return false;
    const auto ratio = b * inv_mod_prime(a, p) % p;
    if (c == 0) c = ratio;
    else if (c != ratio) return false;
  }
  return c != 0;
}

class Builder {
 public:
  Builder(const MarkingBundle& b, GenerationCertificate& out) : b_(b), out_(out), n_(b.n), l_(b.l), p_(b.p) {}

  void run() {
    for (std::size_t g = 0; g < b_.mats.size(); ++g) {
      const auto s = push({SlpStep::Op::Generator, g, 0}, b_.mats[g]);
      if (!elem_[s]) conjugators_.push_back(s);
    }
    if (!phase_units()) return;
    if (!phase_span()) return;
    if (!phase_transport()) return;
    out_.success = true;
  }

 private:
  std::size_t push(SlpStep st, MatFp value) {
    out_.steps.push_back(st);
    elem_.push_back(as_block_elementary(value, n_, l_));
    values_.push_back(std::move(value));
    return values_.size() - 1;
  }

  /// Discards the most recent step; only valid when nothing refers to it.
  void drop_last() {
    out_.steps.pop_back();
    elem_.pop_back();
    values_.pop_back();
  }

  MatFp inverse_of(std::size_t s) {
    if (elem_[s]) return MatFp::identity(values_[s].dim(), p_).scaled(2) - values_[s];
    auto it = inverse_cache_.find(s);
    if (it == inverse_cache_.end()) it = inverse_cache_.emplace(s, inverse(values_[s])).first;
    return it->second;
  }

  std::size_t commutator(std::size_t a, std::size_t b) {
    auto v = inverse_of(a) * inverse_of(b) * values_[a] * values_[b];
    ++out_.verified_steps;
    return push({SlpStep::Op::Commutator, a, b}, std::move(v));
  }

  std::size_t conjugate(std::size_t a, std::size_t by, bool inverse_conj) {
    std::size_t c = by;
    if (inverse_conj) {
      auto key = inv_step_.find(by);
      if (key == inv_step_.end()) key = inv_step_.emplace(by, push({SlpStep::Op::Inverse, by, 0}, inverse_of(by))).first;
      c = key->second;
    }
    auto v = values_[c] * values_[a] * inverse_of(c);
    ++out_.verified_steps;
    return push({SlpStep::Op::Conjugate, a, c}, std::move(v));
  }

  /// Elementary commutator [e_{uv}^X, e_{vw}^Y] = e_{uw}^{XY}, checked.
  std::size_t elem_commutator(std::size_t a, std::size_t b) {
    const auto ea = *elem_[a];
    const auto eb = *elem_[b];
    if (ea.v != eb.u || ea.u == eb.v) throw ConsistencyError("certificate: commutator positions do not chain");
    const auto expect = ea.entry * eb.entry;
    const auto s = commutator(a, b);
    if (expect.is_zero()) {
      if (!values_[s].is_identity()) throw ConsistencyError("certificate: commutator relation fails");
      return s;
    }
    const auto& e = elem_[s];
    if (!e || e->u != ea.u || e->v != eb.v || !(e->entry == expect))
      throw ConsistencyError("certificate: commutator relation fails");
    return s;
  }

  bool fail(std::string why) {
    out_.failure = std::move(why);
    return false;
  }

  bool phase_units() {
    if (n_ < 3) return fail("need at least 3 blocks");
    // Seeds: elementary generators and their conjugates by powers of the
    // other generators.
    std::vector<std::size_t> frontier;
    std::map<std::string, std::size_t> seen;
    auto key = [&](std::size_t s) {
      const auto& e = *elem_[s];
      return std::to_string(e.u) + "," + std::to_string(e.v) + ":" + e.entry.encode();
    };
    for (std::size_t s = 0; s < b_.mats.size(); ++s)
      if (elem_[s] && seen.emplace(key(s), s).second) frontier.push_back(s);
    if (frontier.empty()) return fail("no block-elementary generator");
    for (std::size_t round = 0; round < 2 * n_ && !frontier.empty(); ++round) {
      std::vector<std::size_t> next;
      for (auto s : frontier)
        for (auto c : conjugators_)
          for (bool inv : {false, true}) {
            const auto t = conjugate(s, c, inv);
            if (elem_[t] && seen.emplace(key(t), t).second) next.push_back(t);
            else drop_last();
          }
      frontier = std::move(next);
    }
    for (const auto& [k, s] : seen) seeds_.push_back(s);
    for (auto s : seeds_)
      if (scalar_unit(elem_[s]->entry)) note_unit(s);
    for (auto a : seeds_)
      for (auto b : seeds_) {
        const auto &ea = *elem_[a], &eb = *elem_[b];
        if (ea.v != eb.u || ea.u == eb.v || unit_.count({ea.u, eb.v})) continue;
        if (scalar_unit(ea.entry * eb.entry)) note_unit(elem_commutator(a, b));
      }
    // Saturate with a queue: each new unit is conjugated by the generators
    // and combined with the units it chains with.
    std::vector<std::size_t> queue;
    for (const auto& [pos, s] : unit_) queue.push_back(s);
    for (std::size_t qi = 0; qi < queue.size() && unit_.size() < n_ * (n_ - 1); ++qi) {
      const auto s = queue[qi];
      const auto [u, v] = std::make_pair(elem_[s]->u, elem_[s]->v);
      for (auto c : conjugators_)
        for (bool inv : {false, true}) {
          const auto t = conjugate(s, c, inv);
          if (elem_[t] && scalar_unit(elem_[t]->entry) && add_unit(t)) queue.push_back(t);
          else drop_last();
        }
      for (std::size_t w = 0; w < n_; ++w) {
        if (w == u || w == v) continue;
        if (auto it = unit_.find({v, w}); it != unit_.end() && !unit_.count({u, w})) {
          const auto t = elem_commutator(s, it->second);
          if (add_unit(t)) queue.push_back(t);
        }
        if (auto it = unit_.find({w, u}); it != unit_.end() && !unit_.count({w, v})) {
          const auto t = elem_commutator(it->second, s);
          if (add_unit(t)) queue.push_back(t);
        }
      }
    }
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v)
        if (u != v && !unit_.count({u, v}))
          return fail("no scalar-unit elementary element at position (" + std::to_string(u + 1) + "," +
                      std::to_string(v + 1) + ")");
    return true;
  }

  void note_unit(std::size_t s) { unit_.emplace(std::make_pair(elem_[s]->u, elem_[s]->v), s); }

  bool add_unit(std::size_t s) { return unit_.emplace(std::make_pair(elem_[s]->u, elem_[s]->v), s).second; }

  std::size_t unit(std::size_t u, std::size_t v) const { return unit_.at({u, v}); }

  /// Moves an elementary step to position (u, v) with unit commutators; the
  /// entry is multiplied by unit scalars on either side.
  std::size_t transport(std::size_t s, std::size_t u, std::size_t v) {
    auto pos = [&](std::size_t t) { return std::make_pair(elem_[t]->u, elem_[t]->v); };
    auto [a, b] = pos(s);
    if (a != u) {
      if (u == b) {
        std::size_t w = 0;
        while (w == a || w == u) ++w;
        s = elem_commutator(s, unit(b, w));
        b = w;
      }
      s = elem_commutator(unit(u, a), s);
      a = u;
    }
    if (b != v) s = elem_commutator(s, unit(b, v));
    if (pos(s) != std::make_pair(u, v)) throw ConsistencyError("certificate: transport missed its target");
    return s;
  }

  bool phase_span() {
    const std::size_t dim = l_ * l_;
    EchelonBasis span(dim, p_);
    const auto base = unit(0, 1);
    basis_.push_back(base);
    span.insert(flat(elem_[base]->entry));
    // Seeds moved to (1,3), one per independent entry.
    EchelonBasis seed_span(dim, p_);
    for (auto s : seeds_) {
      if (!seed_span.insert(flat(elem_[s]->entry))) continue;
      left_.push_back(transport(s, 0, 2));
    }
    for (std::size_t k = 0; k < basis_.size() && span.rank() < dim; ++k) {
      for (auto x : left_) {
        const auto predicted = elem_[x]->entry * elem_[basis_[k]]->entry;
        auto v = flat(predicted);
        if (!span.reduce(v)) continue;
        const auto moved = transport(basis_[k], 2, 1);
        const auto s = elem_commutator(x, moved);
        if (!proportional(predicted, elem_[s]->entry)) throw ConsistencyError("certificate: realized entry differs");
        span.insert(flat(elem_[s]->entry));
        basis_.push_back(s);
        if (span.rank() == dim) break;
      }
    }
    if (span.rank() < dim)
      return fail("entry algebra at position (1,2) has dimension " + std::to_string(span.rank()) + " < " +
                  std::to_string(dim));
    return true;
  }

  bool phase_transport() {
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v) {
        if (u == v) continue;
        std::vector<std::size_t> here;
        if (u == 0 && v == 1) here = basis_;
        else
          for (auto s : basis_) here.push_back(transport(s, u, v));
        // Columns of B are the flattened entries; B^{-1} e_{ab} holds the
        // coefficients of the matrix unit E_ab.
        const std::size_t dim = l_ * l_;
        if (here.size() != dim) return fail("basis at (1,2) has the wrong size");
        MatFp B(dim, p_);
        for (std::size_t k = 0; k < dim; ++k)
          for (std::size_t r = 0; r < dim; ++r) B.set(r, k, elem_[here[k]]->entry.data()[r]);
        if (!is_invertible(B))
          return fail("matrix units not reached at position (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
        const auto Binv = inverse(B);
        for (std::size_t a = 0; a < l_; ++a)
          for (std::size_t b = 0; b < l_; ++b) {
            const auto col = a * l_ + b;
            CertificateTarget t{u, v, a, b, {}};
            MatFp sum(l_, p_);
            for (std::size_t k = 0; k < dim; ++k) {
              const auto coef = Binv(k, col);
              if (!coef) continue;
              t.factors.emplace_back(here[k], coef);
              sum = sum + elem_[here[k]]->entry.scaled(coef);
            }
            std::vector<std::uint8_t> target(dim, 0);
            target[col] = 1;
            if (flat(sum) != target) throw ConsistencyError("certificate: target sum differs from matrix unit");
            ++out_.verified_targets;
            out_.targets.push_back(std::move(t));
          }
      }
    return true;
  }

  const MarkingBundle& b_;
  GenerationCertificate& out_;
  std::size_t n_, l_;
  std::uint32_t p_;
  std::vector<MatFp> values_;
  std::vector<std::optional<BlockElementary>> elem_;
  std::vector<std::size_t> conjugators_;
  std::map<std::size_t, MatFp> inverse_cache_;
  std::map<std::size_t, std::size_t> inv_step_;
  std::vector<std::size_t> seeds_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unit_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> left_;
};

}  // namespace

GenerationCertificate generation_certificate(const MarkingBundle& bundle, const CertificateOptions& opts) {
  GenerationCertificate c;
  c.n = bundle.n;
  c.l = bundle.l;
  c.p = bundle.p;
  if (bundle.mats.empty()) {
    c.failure = "empty bundle";
    return c;
  }
  for (const auto& m : bundle.mats)
    if (m.dim() != bundle.dim() || m.modulus() != bundle.p) throw DimensionMismatch("generation_certificate: bundle shape");
  if (bundle.l > opts.max_block || bundle.n > opts.max_blocks || bundle.dim() > opts.max_dim) {
    c.failure = "cap: block size " + std::to_string(bundle.l) + ", block count " + std::to_string(bundle.n) +
                " or dimension " + std::to_string(bundle.dim()) + " exceeds the certificate limits";
    return c;
  }
  Builder(bundle, c).run();
  return c;
}

Word expand_step(const GenerationCertificate& c, std::size_t i, std::size_t max_length) {
  std::vector<Word> memo(i + 1);
  auto inv = [](const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& x : r) x = -x;
    return r;
  };
  auto cat = [&](std::initializer_list<const Word*> parts) {
    Word w;
    std::size_t total = 0;
    for (auto* part : parts) total += part->size();
    if (total > max_length) throw CapExceeded("expand_step word length", total);
    for (auto* part : parts) w.insert(w.end(), part->begin(), part->end());
    return w;
  };
  for (std::size_t k = 0; k <= i; ++k) {
    const auto& st = c.steps[k];
    switch (st.op) {
      case SlpStep::Op::Generator: memo[k] = {static_cast<int>(st.a) + 1}; break;
      case SlpStep::Op::Inverse: memo[k] = inv(memo[st.a]); break;
      case SlpStep::Op::Product: memo[k] = cat({&memo[st.a], &memo[st.b]}); break;
      case SlpStep::Op::Conjugate: {
        const auto bi = inv(memo[st.b]);
        memo[k] = cat({&memo[st.b], &memo[st.a], &bi});
        break;
      }
      case SlpStep::Op::Commutator: {
        const auto ai = inv(memo[st.a]), bi = inv(memo[st.b]);
        memo[k] = cat({&ai, &bi, &memo[st.a], &memo[st.b]});
        break;
      }
    }
  }
  return memo[i];
}

}  // namespace lef
