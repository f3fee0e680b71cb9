#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lef/ring.hpp"

namespace lef {

/// Expression tree over named ring generators.
struct RingExpr {
  enum class Kind { Generator, Constant, Add, Sub, Mul, Neg, Pow };

  Kind kind = Kind::Constant;
  std::string name;         // Generator
  std::int64_t value = 0;   // Constant, or exponent for Pow
  std::vector<std::shared_ptr<const RingExpr>> args;

  static std::shared_ptr<const RingExpr> generator(std::string name);
  static std::shared_ptr<const RingExpr> constant(std::int64_t v);
  static std::shared_ptr<const RingExpr> binary(Kind k, std::shared_ptr<const RingExpr> a,
                                                std::shared_ptr<const RingExpr> b);
  static std::shared_ptr<const RingExpr> negate(std::shared_ptr<const RingExpr> a);
  static std::shared_ptr<const RingExpr> power(std::shared_ptr<const RingExpr> a, std::int64_t e);
};

using RingExprPtr = std::shared_ptr<const RingExpr>;
using RingAssignment = std::map<std::string, RingElement>;

/// Parses infix text: identifiers, integers, + - * ^ and parentheses.
/// Juxtaposition multiplies. The UTF-8 forms of middle dot, minus sign,
/// superscript digits and subscript digits are accepted as well.
RingExprPtr parse_ring_expr(const std::string& text);

std::string to_string(const RingExprPtr& e);

/// Evaluates e. The ring is taken from the assignment, or from `ring` when
/// the expression has no generators. Throws InvalidArgument on unassigned
/// generators or on values from different rings.
RingElement ring_eval(const RingExprPtr& e, const RingAssignment& assignment,
                      const std::optional<RingDescriptor>& ring = std::nullopt);

}  // namespace lef
