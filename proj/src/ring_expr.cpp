#include "lef/ring_expr.hpp"

#include <cctype>
#include <sstream>

#include "lef/errors.hpp"

namespace lef {

RingExprPtr RingExpr::generator(std::string name) {
  auto e = std::make_shared<RingExpr>();
  e->kind = Kind::Generator;
  e->name = std::move(name);
  return e;
}

RingExprPtr RingExpr::constant(std::int64_t v) {
  auto e = std::make_shared<RingExpr>();
  e->kind = Kind::Constant;
  e->value = v;
  return e;
}

RingExprPtr RingExpr::binary(Kind k, RingExprPtr a, RingExprPtr b) {
  auto e = std::make_shared<RingExpr>();
  e->kind = k;
  e->args = {std::move(a), std::move(b)};
  return e;
}

RingExprPtr RingExpr::negate(RingExprPtr a) {
  auto e = std::make_shared<RingExpr>();
  e->kind = Kind::Neg;
  e->args = {std::move(a)};
  return e;
}

RingExprPtr RingExpr::power(RingExprPtr a, std::int64_t exp) {
  auto e = std::make_shared<RingExpr>();
  e->kind = Kind::Pow;
  e->value = exp;
  e->args = {std::move(a)};
  return e;
}

namespace {

std::string normalize(const std::string& in) {
  static const std::pair<const char*, const char*> table[] = {
      {"\xC2\xB7", "*"},     {"\xE2\x88\x92", "-"}, {"\xC2\xB2", "^2"},    {"\xC2\xB3", "^3"},
      {"\xE2\x8B\x85", "*"}, {"\xC3\x97", "*"},     {"\xE2\x81\xBB", "^-"},
  };
  std::string out;
  for (std::size_t i = 0; i < in.size();) {
    bool hit = false;
    for (const auto& [from, to] : table) {
      const std::string f(from);
      if (in.compare(i, f.size(), f) == 0) {
        out += to;
        i += f.size();
        hit = true;
        break;
      }
    }
    if (hit) continue;
    // subscript digits U+2080..U+2089
    if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
        static_cast<unsigned char>(in[i + 1]) == 0x82 && static_cast<unsigned char>(in[i + 2]) >= 0x80 &&
        static_cast<unsigned char>(in[i + 2]) <= 0x89) {
      out += static_cast<char>('0' + (static_cast<unsigned char>(in[i + 2]) - 0x80));
      i += 3;
      continue;
    }
    // superscript digits U+2070, U+2074..U+2079
    if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
        static_cast<unsigned char>(in[i + 1]) == 0x81) {
      auto c = static_cast<unsigned char>(in[i + 2]);
      if (c == 0xB0 || (c >= 0xB4 && c <= 0xB9)) {
        out += '^';
        out += static_cast<char>(c == 0xB0 ? '0' : '0' + (c - 0xB0));
        i += 3;
        continue;
      }
    }
    out += in[i++];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string s) : s_(std::move(s)) {}

  RingExprPtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, "ring expression: " + what + " at column " + std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  RingExprPtr expr() {
    auto e = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        e = RingExpr::binary(RingExpr::Kind::Add, e, term());
      } else if (peek('-')) {
        ++pos_;
        e = RingExpr::binary(RingExpr::Kind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  RingExprPtr term() {
    auto e = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        e = RingExpr::binary(RingExpr::Kind::Mul, e, unary());
      } else if (starts_primary()) {
        e = RingExpr::binary(RingExpr::Kind::Mul, e, unary());
      } else {
        return e;
      }
    }
  }

  RingExprPtr unary() {
    if (peek('-')) {
      ++pos_;
      return RingExpr::negate(unary());
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    auto e = primary();
    while (peek('^')) {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      auto k = integer();
      e = RingExpr::power(e, neg ? -k : k);
    }
    return e;
  }

  std::int64_t integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
    }
    return v;
  }

  RingExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RingExpr::constant(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return RingExpr::generator(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

void collect(const RingExprPtr& e, std::optional<RingDescriptor>& ring, const RingAssignment& a) {
  if (e->kind == RingExpr::Kind::Generator) {
    auto it = a.find(e->name);
    if (it == a.end()) throw InvalidArgument("ring_eval: unassigned generator '" + e->name + "'");
    auto r = ring_of(it->second);
    if (!ring) ring = r;
    else if (!same_ring(*ring, r))
      throw InvalidArgument("ring_eval: mixed rings " + describe(*ring) + " and " + describe(r));
  }
  for (const auto& c : e->args) collect(c, ring, a);
}

RingElement eval(const RingExprPtr& e, const RingAssignment& a, const RingDescriptor& ring) {
  using K = RingExpr::Kind;
  switch (e->kind) {
    case K::Generator: return a.at(e->name);
    case K::Constant: return ring_scalar(ring, e->value);
    case K::Add: return ring_add(eval(e->args[0], a, ring), eval(e->args[1], a, ring));
    case K::Sub: return ring_sub(eval(e->args[0], a, ring), eval(e->args[1], a, ring));
    case K::Mul: return ring_mul(eval(e->args[0], a, ring), eval(e->args[1], a, ring));
    case K::Neg: return ring_neg(eval(e->args[0], a, ring));
    case K::Pow: return ring_pow(eval(e->args[0], a, ring), e->value);
  }
  throw ConsistencyError("ring_eval: unknown node");
}

}  // namespace

RingExprPtr parse_ring_expr(const std::string& text) { return Parser(normalize(text)).parse(); }

std::string to_string(const RingExprPtr& e) {
  using K = RingExpr::Kind;
  switch (e->kind) {
    case K::Generator: return e->name;
    case K::Constant: return std::to_string(e->value);
    case K::Add: return "(" + to_string(e->args[0]) + " + " + to_string(e->args[1]) + ")";
    case K::Sub: return "(" + to_string(e->args[0]) + " - " + to_string(e->args[1]) + ")";
    case K::Mul: return "(" + to_string(e->args[0]) + " * " + to_string(e->args[1]) + ")";
    case K::Neg: return "(-" + to_string(e->args[0]) + ")";
    case K::Pow: return to_string(e->args[0]) + "^" + std::to_string(e->value);
  }
  return "?";
}

RingElement ring_eval(const RingExprPtr& e, const RingAssignment& assignment,
                      const std::optional<RingDescriptor>& ring) {
  std::optional<RingDescriptor> r = ring;
  if (r) {
    for (const auto& [name, value] : assignment)
      if (!same_ring(*r, ring_of(value)))
        throw InvalidArgument("ring_eval: generator '" + name + "' lies outside " + describe(*r));
  }
  collect(e, r, assignment);
  if (!r) throw InvalidArgument("ring_eval: ring unknown for a constant expression");
  return eval(e, assignment, *r);
}

}  // namespace lef
