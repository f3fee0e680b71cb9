#include "lef/chain.hpp"

#include <sstream>

#include "lef/errors.hpp"
#include "lef/fp.hpp"

namespace lef {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::size_t to_size(const std::string& s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw ParseError(line, "expected a nonnegative integer, got '" + s + "'");
  return std::stoul(s);
}

Permutation parse_images(const std::vector<std::string>& t, std::size_t degree, std::size_t line) {
  if (t.size() != degree + 1) throw ParseError(line, "expected " + std::to_string(degree) + " images");
  std::vector<std::uint32_t> img;
  for (std::size_t i = 1; i < t.size(); ++i) img.push_back(static_cast<std::uint32_t>(to_size(t[i], line)));
  try {
    return Permutation(std::move(img));
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

Word parse_word(const std::string& text) {
  Word w;
  if (tokens(text) == std::vector<std::string>{"e"}) return w;
  for (char c : text) {
    switch (c) {
      case 'a': w.push_back(1); break;
      case 'A': w.push_back(-1); break;
      case 'b': w.push_back(2); break;
      case 'B': w.push_back(-2); break;
      case ' ': case '\t': break;
      default: throw InvalidArgument(std::string("word letter must be one of aAbB, got '") + c + "'");
    }
  }
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int x : w) s += x == 1 ? 'a' : x == -1 ? 'A' : x == 2 ? 'b' : 'B';
  return s;
}

MarkedGroup<PermutationModel> quotient_marked(const QuotientSpec& q) {
  return {PermutationModel{q.degree}, {q.s1, q.s2}};
}

ChainSpec parse_chain(const std::string& text) {
  ChainSpec spec;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0, stage = 0, depth = 0;
  std::array<bool, 4> have_xi{};
  QuotientSpec* cur = nullptr;
  bool want_s1 = false, want_s2 = false;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    auto t = tokens(raw);
    if (t.empty()) continue;
    const auto& key = t[0];
    auto want_args = [&](std::size_t k) {
      if (t.size() != k + 1) throw ParseError(line, "'" + key + "' takes " + std::to_string(k) + " argument(s)");
    };
    if (stage < 3) {
      static const char* order[] = {"p", "n", "depth"};
      if (key != order[stage]) throw ParseError(line, std::string("expected '") + order[stage] + "'");
      want_args(1);
      const auto v = to_size(t[1], line);
      if (stage == 0) spec.p = static_cast<std::uint32_t>(v);
      else if (stage == 1) spec.n = v;
      else depth = v;
      ++stage;
      continue;
    }
    if (want_s1 || want_s2) {
      const char* expect = want_s1 ? "s1" : "s2";
      if (key != expect) throw ParseError(line, std::string("expected '") + expect + "'");
      (want_s1 ? cur->s1 : cur->s2) = parse_images(t, cur->degree, line);
      if (want_s1) want_s1 = false, want_s2 = true;
      else want_s2 = false;
      continue;
    }
    if (key == "quotient") {
      if (t.size() != 4 || t[2] != "degree") throw ParseError(line, "expected 'quotient <m> degree <d>'");
      const auto m = to_size(t[1], line);
      if (m != spec.quotients.size()) throw ParseError(line, "quotients must be numbered 0, 1, ... in order");
      const auto d = to_size(t[3], line);
      if (d == 0) throw ParseError(line, "degree must be positive");
      spec.quotients.push_back({m, d, Permutation::identity(d), Permutation::identity(d)});
      cur = &spec.quotients.back();
      want_s1 = true;
      continue;
    }
    if (key.size() == 3 && key.rfind("xi", 0) == 0 && key[2] >= '1' && key[2] <= '4') {
      const std::size_t i = key[2] - '1';
      if (have_xi[i]) throw ParseError(line, "duplicate " + key);
      std::string rest;
      for (std::size_t k = 1; k < t.size(); ++k) rest += t[k];
      if (rest.empty()) throw ParseError(line, key + " needs a word (use 'e' for the identity)");
      try {
        spec.xi[i] = parse_word(rest);
      } catch (const InvalidArgument& e) {
        throw ParseError(line, e.what());
      }
      have_xi[i] = true;
      continue;
    }
    throw ParseError(line, "unknown keyword '" + key + "'");
  }
  if (stage < 3) throw ParseError(line, "missing header lines p, n, depth");
  if (want_s1 || want_s2) throw ParseError(line, "quotient block is incomplete");
  if (spec.quotients.size() != depth)
    throw ParseError(line, "depth " + std::to_string(depth) + " but " + std::to_string(spec.quotients.size()) +
                               " quotient blocks");
  for (std::size_t i = 0; i < 4; ++i)
    if (!have_xi[i]) throw ParseError(line, "missing xi" + std::to_string(i + 1));
  const auto problems = validate_chain(spec);
  if (!problems.empty()) {
    std::string msg = "invalid chain:";
    for (const auto& p : problems) msg += " [" + p + "]";
    throw InvalidArgument(msg);
  }
  return spec;
}

std::vector<std::string> validate_chain(const ChainSpec& spec) {
  std::vector<std::string> out;
  if (spec.p == 2 || !is_prime(spec.p) || spec.p > kMaxModulus) out.push_back("p must be an odd prime <= 251");
  if (spec.n < 3) out.push_back("n must be at least 3");
  if (spec.quotients.empty()) out.push_back("depth must be at least 1");
  std::vector<std::size_t> orders;
  for (const auto& q : spec.quotients) {
    auto g = quotient_marked(q);
    std::size_t order = 0;
    try {
      order = enumerate_subgroup(g);
    } catch (const CapExceeded&) {
      out.push_back("quotient " + std::to_string(q.m) + " too large to enumerate");
    }
    orders.push_back(order);
    if (2 * spec.p * order < 5) out.push_back("quotient " + std::to_string(q.m) + ": #L < 5");
    for (std::size_t i = 0; i < 4; ++i) {
      const auto x = g.eval(spec.xi[i]);
      if (!compose(x, x).is_identity())
        out.push_back("xi" + std::to_string(i + 1) + " is not an involution in quotient " + std::to_string(q.m));
    }
  }
  for (std::size_t m = 0; m + 1 < spec.quotients.size(); ++m) {
    if (orders[m + 1] <= orders[m])
      out.push_back("quotient orders not strictly increasing at level " + std::to_string(m + 1));
    const auto why = check_marked_quotient(quotient_marked(spec.quotients[m + 1]), quotient_marked(spec.quotients[m]));
    if (!why.empty())
      out.push_back("level " + std::to_string(m) + " is not a marked quotient of level " + std::to_string(m + 1) + ": " + why);
  }
  return out;
}

}  // namespace lef
