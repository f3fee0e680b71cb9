#include "lef/permutation.hpp"

#include <numeric>
#include <sstream>

#include "lef/errors.hpp"

namespace lef {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidArgument("Permutation: image array is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::transposition(std::size_t degree, std::uint32_t a, std::uint32_t b) {
  if (a >= degree || b >= degree || a == b) throw InvalidArgument("transposition: bad points");
  auto p = identity(degree);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::cycle(std::size_t degree, const std::vector<std::uint32_t>& points) {
  auto img = identity(degree).images_;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= degree) throw InvalidArgument("cycle: point out of range");
    img[points[i]] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::encode() const {
  std::string s(images_.size() * 4, '\0');
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (int b = 0; b < 4; ++b) s[4 * i + b] = static_cast<char>((images_[i] >> (8 * b)) & 0xff);
  return s;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw DimensionMismatch("compose: degree mismatch");
  std::vector<std::uint32_t> img(s.degree());
  for (std::uint32_t x = 0; x < img.size(); ++x) img[x] = s(t(x));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& s) {
  std::vector<std::uint32_t> img(s.degree());
  for (std::uint32_t x = 0; x < img.size(); ++x) img[s(x)] = x;
  return Permutation(std::move(img));
}

std::vector<std::vector<std::uint32_t>> cycles(const Permutation& s) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(s.degree(), 0);
  for (std::uint32_t x = 0; x < s.degree(); ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t y = x; !seen[y]; y = s(y)) {
      seen[y] = 1;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t order(const Permutation& s) {
  std::uint64_t o = 1;
  for (const auto& c : cycles(s)) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

int sign(const Permutation& s) {
  std::size_t even_cycles = 0;
  for (const auto& c : cycles(s)) even_cycles += (c.size() % 2 == 0);
  return even_cycles % 2 ? -1 : 1;
}

std::string to_string(const Permutation& s) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles(s)) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace lef
