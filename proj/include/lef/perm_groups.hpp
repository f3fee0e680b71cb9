#pragma once

#include <cstdint>
#include <vector>

#include "lef/finite_group.hpp"
#include "lef/marked_group.hpp"
#include "lef/permutation.hpp"

namespace lef {

/// The finite group L acting on its own elements; points are the indices
/// of L's table, with 0 the identity.
using LabeledSet = FiniteGroup;

/// Transposition of the identity point and g. Throws for g = identity.
Permutation chi(std::uint32_t g, const LabeledSet& L);

/// Right multiplication x -> x * g.
Permutation theta(std::uint32_t g, const LabeledSet& L);

/// (chi_{s1}, chi_{s2}, chi_{s3}, theta_{s1}, theta_{s2}, theta_{s3}) in
/// Sym(L). Requires #L >= 5, nontrivial s_j, and <s1, s2, s3> = L.
MarkedGroup<PermutationModel> sym_six_marking(const LabeledSet& L, std::uint32_t s1, std::uint32_t s2,
                                              std::uint32_t s3);

/// Same tuple without the #L >= 5 precondition, for small oracle cases.
std::vector<Permutation> six_tuple(const LabeledSet& L, std::uint32_t s1, std::uint32_t s2, std::uint32_t s3);

}  // namespace lef
