#include "lef/markings.hpp"

#include "lef/errors.hpp"

namespace lef {

std::string tag_name(MarkingTag t) {
  switch (t) {
    case MarkingTag::TwoMarking: return "two-marking";
    case MarkingTag::NineMarking: return "nine-marking";
    case MarkingTag::FourMarkingMu: return "four-marking-mu";
    case MarkingTag::ThirteenMarking: return "thirteen-marking";
    case MarkingTag::SigmaMarking: return "sigma-marking";
    case MarkingTag::Wreath: return "wreath";
    case MarkingTag::InvolutionEmbedding: return "involution-embedding";
  }
  return "?";
}

std::size_t tag_arity(MarkingTag t) {
  switch (t) {
    case MarkingTag::TwoMarking: return 2;
    case MarkingTag::NineMarking: return 9;
    case MarkingTag::FourMarkingMu: return 4;
    case MarkingTag::ThirteenMarking: return 13;
    case MarkingTag::SigmaMarking: return 4;
    case MarkingTag::Wreath: return 0;
    case MarkingTag::InvolutionEmbedding: return 0;
  }
  return 0;
}

void validate_bundle(const MarkingBundle& b) {
  if (tag_arity(b.tag) && b.mats.size() != tag_arity(b.tag))
    throw RelationViolation(tag_name(b.tag) + ": expected " + std::to_string(tag_arity(b.tag)) + " generators, got " +
                            std::to_string(b.mats.size()));
  for (std::size_t i = 0; i < b.mats.size(); ++i) {
    const auto& m = b.mats[i];
    if (m.dim() != b.dim() || m.modulus() != b.p)
      throw RelationViolation(tag_name(b.tag) + ": generator " + std::to_string(i + 1) + " has the wrong shape");
    if (determinant(m) != 1)
      throw RelationViolation(tag_name(b.tag) + ": generator " + std::to_string(i + 1) + " has determinant != 1");
  }
}

MatFp mu_y(std::size_t i, std::uint32_t p) {
  if (i == 0) throw InvalidArgument("mu: block count must be positive");
  if (i == 1) return MatFp::identity(1, p);
  MatFp y(i, p);
  y.set(0, 1, 1);
  return y;
}

MatFp mu_z(std::size_t i, std::uint32_t p) {
  if (i == 0) throw InvalidArgument("mu: block count must be positive");
  MatFp z(i, p);
  for (std::size_t k = 0; k + 1 < i; ++k) z.set(k + 1, k, 1);
  z.set(0, i - 1, 1);
  return z;
}

MarkingBundle mu_images(std::size_t i, std::size_t n, std::uint32_t p, std::optional<bool> signed_override) {
  require_prime_modulus(p);
  if (n < 2) throw InvalidArgument("mu_images: n must be at least 2");
  const RingDescriptor R = MatrixRing{i, p};
  const RingElement one = MatFp::identity(i, p);
  MarkingBundle b{MarkingTag::FourMarkingMu, {}, n, i, p};
  b.mats.push_back(elem(1, 2, one, n).flatten());
  b.mats.push_back(elem(1, 2, RingElement(mu_y(i, p)), n).flatten());
  b.mats.push_back(elem(1, 2, RingElement(mu_z(i, p)), n).flatten());
  b.mats.push_back(beta(n, signed_override.value_or(beta_signed_for(n)), R).flatten());
  validate_bundle(b);
  return b;
}

MarkingBundle amenable_two_marking(std::size_t N, std::uint32_t p, std::optional<bool> signed_override) {
  require_prime_modulus(p);
  if (N < 3) throw InvalidArgument("amenable_two_marking: N must be at least 3");
  const RingDescriptor R = PrimeField{p};
  MarkingBundle b{MarkingTag::TwoMarking, {}, N, 1, p};
  b.mats.push_back(elem(1, 2, ring_one(R), N).flatten());
  b.mats.push_back(beta(N, signed_override.value_or(beta_signed_for(N)), R).flatten());
  validate_bundle(b);
  return b;
}

MarkingBundle nine_marking_images(const RingAssignment& x, std::size_t n, std::optional<bool> signed_override) {
  if (n < 3) throw InvalidArgument("nine_marking_images: n must be at least 3");
  for (const char* key : {"x1", "x2", "x3", "x4", "x5", "x6"})
    if (!x.count(key)) throw InvalidArgument(std::string("nine_marking_images: missing ") + key);
  const auto R = ring_of(x.at("x1"));
  for (const auto& [k, v] : x)
    if (!same_ring(R, ring_of(v))) throw InvalidArgument("nine_marking_images: mixed rings at " + k);
  const auto p = characteristic(R);
  for (const char* key : {"x1", "x2", "x3"})
    if (!ring_is_one(ring_mul(x.at(key), x.at(key))))
      throw RelationViolation(std::string("nine_marking_images: ") + key + "^2 != 1");
  if (!ring_is_one(ring_pow(x.at("x6"), 2 * static_cast<std::int64_t>(p))))
    throw RelationViolation("nine_marking_images: x6^(2p) != 1");
  for (const char* key : {"x4", "x5"})
    if (!ring_is_unit(x.at(key))) throw RelationViolation(std::string("nine_marking_images: ") + key + " is not a unit");
  MarkingBundle b{MarkingTag::NineMarking, {}, n, rep_dim(R), p};
  const std::vector<RingElement> entries{x.at("x1"), x.at("x2"), x.at("x3"),
                                         x.at("x4"), ring_inverse(x.at("x4")), x.at("x5"),
                                         ring_inverse(x.at("x5")), x.at("x6")};
  for (const auto& r : entries) b.mats.push_back(elem(1, 2, r, n).flatten());
  b.mats.push_back(beta(n, signed_override.value_or(beta_signed_for(n)), R).flatten());
  validate_bundle(b);
  return b;
}

MarkingBundle thirteen_marking(std::size_t i, const MarkingBundle* nine, const MarkingBundle* four) {
  if ((nine == nullptr) == (four == nullptr))
    throw InvalidArgument("thirteen_marking: exactly one of the nine- and four-tuples must be active at i = " +
                          std::to_string(i));
  const auto& active = nine ? *nine : *four;
  const auto expected = nine ? MarkingTag::NineMarking : MarkingTag::FourMarkingMu;
  if (active.tag != expected) throw InvalidArgument("thirteen_marking: active tuple has the wrong tag");
  MarkingBundle b{MarkingTag::ThirteenMarking, {}, active.n, active.l, active.p};
  const auto e = MatFp::identity(active.dim(), active.p);
  if (nine) {
    b.mats = nine->mats;
    b.mats.insert(b.mats.end(), 4, e);
  } else {
    b.mats.assign(9, e);
    b.mats.insert(b.mats.end(), four->mats.begin(), four->mats.end());
  }
  validate_bundle(b);
  return b;
}

MarkingBundle sigma_marking(std::size_t i, std::size_t n, std::uint32_t p) {
  if (n % 2 == 0) throw InvalidArgument("sigma_marking: n must be odd");
  if (i == 0) throw InvalidArgument("sigma_marking: i must be positive");
  const auto N = n * i;
  const bool even_i = i % 2 == 0;
  // signed for even i (N even), unsigned for odd i (N odd)
  const auto two = amenable_two_marking(N, p, even_i);
  const auto e = MatFp::identity(N, p);
  MarkingBundle b{MarkingTag::SigmaMarking, {}, N, 1, p};
  if (even_i) b.mats = {two.mats[0], two.mats[1], e, e};
  else b.mats = {e, e, two.mats[0], two.mats[1]};
  validate_bundle(b);
  return b;
}

MarkingBundle embed_involution_group(const std::vector<RingElement>& omega, std::size_t n) {
  if (omega.empty()) throw InvalidArgument("embed_involution_group: empty set");
  const auto R = ring_of(omega.front());
  MarkingBundle b{MarkingTag::InvolutionEmbedding, {}, n, rep_dim(R), characteristic(R)};
  for (const auto& w : omega) {
    if (!same_ring(R, ring_of(w))) throw InvalidArgument("embed_involution_group: mixed rings");
    if (!ring_is_one(ring_mul(w, w))) throw RelationViolation("embed_involution_group: element is not an involution");
    b.mats.push_back(dmat(w, w, n).flatten());
  }
  return b;
}

}  // namespace lef
