#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lef/marked_group.hpp"
#include "lef/permutation.hpp"

namespace lef {

/// A finite quotient of H given by the images of s1 and s2 in Sym(degree).
struct QuotientSpec {
  std::size_t m = 0;
  std::size_t degree = 0;
  Permutation s1;
  Permutation s2;
};

struct ChainSpec {
  std::uint32_t p = 3;
  std::size_t n = 3;
  std::vector<QuotientSpec> quotients;  // index m = 0..depth-1
  /// Words over s1 = 1, s2 = 2 (negative for inverses).
  std::array<Word, 4> xi;

  std::size_t depth() const noexcept { return quotients.size(); }
};

/// Line-oriented format, '#' starts a comment:
///   p <odd prime>
///   n <int >= 3>
///   depth <count>
///   quotient <m> degree <d>      (then)  s1 <d images>  /  s2 <d images>
///   xi1 .. xi4 <word over a A b B, or e>
/// Throws ParseError on malformed text and InvalidArgument listing every
/// violated chain condition.
ChainSpec parse_chain(const std::string& text);

/// Violated conditions: p odd prime, n >= 3, quotient orders strictly
/// increasing, level m a marked quotient of level m+1, every xi of order
/// at most 2 in every quotient.
std::vector<std::string> validate_chain(const ChainSpec& spec);

/// Word letters a, A, b, B (whitespace ignored; "e" is the empty word).
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

/// The permutation group generated by a quotient's s1 and s2.
MarkedGroup<PermutationModel> quotient_marked(const QuotientSpec& q);

}  // namespace lef
