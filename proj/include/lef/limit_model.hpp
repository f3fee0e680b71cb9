#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "lef/marked_group.hpp"

namespace lef {

/// Element (U, a) of N(Z, F_p) x| Z: U is the identity plus finitely many
/// strictly lower entries (row > col), a is a translation.
struct LimitElement {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint32_t> lower;
  std::int64_t shift = 0;

  friend bool operator==(const LimitElement&, const LimitElement&) = default;
};

/// Group law (U, a)(V, b) = (U T_a(V), a + b) with T_a(V)_{i,j} = V_{i-a,j-a}.
/// Supports must stay within |index| <= window; otherwise WindowExceeded.
struct LimitModel {
  using element_type = LimitElement;

  std::uint32_t p = 3;
  std::int64_t window = 64;

  LimitElement identity() const { return {}; }
  LimitElement multiply(const LimitElement& x, const LimitElement& y) const;
  LimitElement inverse(const LimitElement& x) const;
  std::string encode(const LimitElement& x) const;
};

LimitElement translate(const LimitElement& x, std::int64_t a);

/// Generators (I + E_{1,0}, 0) and (I, 1).
MarkedGroup<LimitModel> limit_model_marked(std::uint32_t p, std::int64_t window = 64);

}  // namespace lef
