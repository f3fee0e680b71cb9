#include "lef/limit_model.hpp"

#include <vector>

#include "lef/errors.hpp"
#include "lef/fp.hpp"

namespace lef {

namespace {

using Sparse = std::map<std::pair<std::int64_t, std::int64_t>, std::uint32_t>;

// (I + A)(I + B) = I + A + B + AB for strictly lower A, B.
Sparse unipotent_product(const Sparse& a, const Sparse& b, std::uint32_t p) {
  Sparse out = a;
  auto add = [&](std::pair<std::int64_t, std::int64_t> key, std::uint32_t v) {
    auto& slot = out[key];
    slot = (slot + v) % p;
    if (slot == 0) out.erase(key);
  };
  for (const auto& [k, v] : b) add(k, v);
  std::multimap<std::int64_t, std::pair<std::int64_t, std::uint32_t>> b_rows;
  for (const auto& [k, v] : b) b_rows.emplace(k.first, std::make_pair(k.second, v));
  for (const auto& [ka, va] : a) {
    auto range = b_rows.equal_range(ka.second);
    for (auto it = range.first; it != range.second; ++it) add({ka.first, it->second.first}, va * it->second.second % p);
  }
  return out;
}

void check_window(const LimitElement& x, std::int64_t window) {
  for (const auto& [k, v] : x.lower)
    if (k.first > window || k.first < -window || k.second > window || k.second < -window)
      throw WindowExceeded("limit model: support escapes the window of size " + std::to_string(window));
}

}  // namespace

LimitElement translate(const LimitElement& x, std::int64_t a) {
  LimitElement y;
  y.shift = x.shift;
  for (const auto& [k, v] : x.lower) y.lower.emplace(std::make_pair(k.first + a, k.second + a), v);
  return y;
}

LimitElement LimitModel::multiply(const LimitElement& x, const LimitElement& y) const {
  LimitElement z;
  z.lower = unipotent_product(x.lower, translate(y, x.shift).lower, p);
  z.shift = x.shift + y.shift;
  check_window(z, window);
  return z;
}

LimitElement LimitModel::inverse(const LimitElement& x) const {
  // (I + N)^{-1} = I - N + N^2 - ...; N is nilpotent on its finite support.
  Sparse neg;
  for (const auto& [k, v] : x.lower) neg[k] = (p - v) % p;
  Sparse inv, power = neg;
  while (!power.empty()) {
    for (const auto& [k, v] : power) {
      auto& slot = inv[k];
      slot = (slot + v) % p;
      if (slot == 0) inv.erase(k);
    }
    // power <- power * neg, keeping only the product term
    Sparse next;
    std::multimap<std::int64_t, std::pair<std::int64_t, std::uint32_t>> rows;
    for (const auto& [k, v] : neg) rows.emplace(k.first, std::make_pair(k.second, v));
    for (const auto& [k, v] : power) {
      auto range = rows.equal_range(k.second);
      for (auto it = range.first; it != range.second; ++it) {
        auto& slot = next[{k.first, it->second.first}];
        slot = (slot + v * it->second.second) % p;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    power = std::move(next);
  }
  LimitElement u;
  u.lower = std::move(inv);
  auto y = translate(u, -x.shift);
  y.shift = -x.shift;
  check_window(y, window);
  return y;
}

std::string LimitModel::encode(const LimitElement& x) const {
  std::string s;
  auto put = [&s](std::int64_t v) {
    for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xff));
  };
  put(x.shift);
  for (const auto& [k, v] : x.lower) {
    put(k.first);
    put(k.second);
    s.push_back(static_cast<char>(v));
  }
  return s;
}

MarkedGroup<LimitModel> limit_model_marked(std::uint32_t p, std::int64_t window) {
  require_prime_modulus(p);
  if (window < 2) throw InvalidArgument("limit_model_marked: window must be at least 2");
  LimitElement u;
  u.lower[{1, 0}] = 1;
  LimitElement s;
  s.shift = 1;
  return MarkedGroup<LimitModel>(LimitModel{p, window}, {u, s});
}

}  // namespace lef
