#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lef {

/// Bijection of {0, ..., N-1} stored as its image array.
///
/// Composition is right-to-left throughout the project:
/// compose(s, t)(x) = s(t(x)), i.e. t is applied first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, std::uint32_t a, std::uint32_t b);
  /// Cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0.
  static Permutation cycle(std::size_t degree, const std::vector<std::uint32_t>& points);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const;
  std::string encode() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);
std::uint64_t order(const Permutation& s);
/// +1 for even, -1 for odd permutations.
int sign(const Permutation& s);
std::vector<std::vector<std::uint32_t>> cycles(const Permutation& s);
std::string to_string(const Permutation& s);

}  // namespace lef
