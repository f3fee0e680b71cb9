#include "lef/perm_groups.hpp"

#include <array>

#include "lef/errors.hpp"

namespace lef {

Permutation chi(std::uint32_t g, const LabeledSet& L) {
  if (g >= L.order()) throw InvalidArgument("chi: index out of range");
  if (g == 0) throw InvalidArgument("chi: undefined at the identity element");
  return Permutation::transposition(L.order(), 0, g);
}

Permutation theta(std::uint32_t g, const LabeledSet& L) {
  if (g >= L.order()) throw InvalidArgument("theta: index out of range");
  std::vector<std::uint32_t> img(L.order());
  for (std::uint32_t x = 0; x < img.size(); ++x) img[x] = L.mul(x, g);
  return Permutation(std::move(img));
}

std::vector<Permutation> six_tuple(const LabeledSet& L, std::uint32_t s1, std::uint32_t s2, std::uint32_t s3) {
  const std::array<std::uint32_t, 3> s{s1, s2, s3};
  if (!L.generated_by(s)) throw InvalidArgument("sym_six_marking: s1, s2, s3 do not generate L");
  return {chi(s1, L), chi(s2, L), chi(s3, L), theta(s1, L), theta(s2, L), theta(s3, L)};
}

MarkedGroup<PermutationModel> sym_six_marking(const LabeledSet& L, std::uint32_t s1, std::uint32_t s2,
                                              std::uint32_t s3) {
  if (L.order() < 5) throw InvalidArgument("sym_six_marking: #L must be at least 5");
  return MarkedGroup<PermutationModel>(PermutationModel{L.order()}, six_tuple(L, s1, s2, s3));
}

}  // namespace lef
