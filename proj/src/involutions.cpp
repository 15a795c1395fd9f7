#include "almostsym/involutions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace almostsym {

std::uint32_t SignCharacter::mask() const {
  std::uint32_t m = 0;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) m |= 1u << i;
  return m;
}

SignCharacter SignCharacter::from_mask(std::uint32_t mask, int rank) {
  SignCharacter s;
  s.c.resize(rank);
  for (int i = 0; i < rank; ++i) s.c[i] = (mask >> i) & 1u;
  return s;
}

std::string SignCharacter::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i] ? "1" : "0";
  }
  return s + ")";
}

int evaluate_character(const RootSystem& rs, const SignCharacter& c, const Root& alpha) {
  if (static_cast<int>(c.c.size()) != rs.rank())
    throw std::invalid_argument("character length does not match rank");
  int parity = 0;
  for (int i = 0; i < rs.rank(); ++i)
    parity += c.c[i] * alpha.simple_coeffs[i];
  return parity % 2 == 0 ? 1 : -1;
}

SignCharacter canonical_involution(const Marking& marking, int rank) {
  marking.validate(rank);
  return SignCharacter::from_mask(marking.mask(), rank);
}

FixedProfile fixed_profile(const SymmetricSpace& space, const Marking& marking,
                           const SignCharacter& c) {
  marking.validate(space.rank());
  if (static_cast<int>(c.c.size()) != space.rank())
    throw std::invalid_argument("character length does not match rank");
  const auto& pos = space.roots().positive_roots();
  std::uint32_t supp = marking.mask();
  std::uint32_t cm = c.mask();
  FixedProfile out;
  for (size_t i = 0; i < pos.size(); ++i) {
    const auto& n = pos[i].simple_coeffs;
    std::uint32_t nonzero = 0, odd = 0;
    for (int k = 0; k < space.rank(); ++k) {
      if (n[k] > 0) nonzero |= 1u << k;
      if (n[k] % 2) odd |= 1u << k;
    }
    bool tangent = (nonzero & supp) != 0;
    bool minus = std::popcount(odd & cm) % 2 == 1;
    if (minus) out.neg_mult_total += space.mult(static_cast<int>(i));
    if (tangent) {
      if (!minus) out.fixed_tangent_dim += space.mult(static_cast<int>(i));
    } else if (minus) {
      out.normal_identity = false;
    }
  }
  return out;
}

const char* finding_class_name(FindingClass c) {
  return c == FindingClass::symmetry ? "symmetry" : "almost_symmetry";
}
const char* certification_name(Certification c) {
  return c == Certification::canonical_certified ? "canonical_certified"
                                                 : "torus_candidate";
}
const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::normal_not_fixed: return "normal_not_fixed";
    case RejectReason::trivial_character: return "trivial_character";
    case RejectReason::orientation: return "orientation";
    case RejectReason::coindex: return "coindex";
  }
  return "?";
}

Classification classify_character(const SymmetricSpace& space, const Marking& marking,
                                  const SignCharacter& c) {
  auto profile = fixed_profile(space, marking, c);
  auto geom = orbit_geometry(space, marking);
  Classification out;
  if (!profile.normal_identity) {
    out.rejection = RejectReason::normal_not_fixed;
    return out;
  }
  if (profile.fixed_tangent_dim == geom.tangent_dim) {
    out.rejection = RejectReason::trivial_character;
    return out;
  }
  bool canonical = c.mask() == marking.mask();
  if (!canonical && profile.neg_mult_total % 2 == 1) {
    out.rejection = RejectReason::orientation;
    return out;
  }
  if (profile.fixed_tangent_dim >= 2) {
    out.rejection = RejectReason::coindex;
    out.coindex = profile.fixed_tangent_dim;
    return out;
  }
  Finding f;
  f.space = space.label();
  f.marking = marking;
  f.character = c;
  f.cls = profile.fixed_tangent_dim == 0 ? FindingClass::symmetry
                                         : FindingClass::almost_symmetry;
  f.certification = canonical ? Certification::canonical_certified
                              : Certification::torus_candidate;
  f.fixed_tangent_dim = profile.fixed_tangent_dim;
  f.neg_mult_total = profile.neg_mult_total;
  f.orbit_dim = geom.tangent_dim;
  out.finding = std::move(f);
  return out;
}

std::vector<Finding> torus_search(const SymmetricSpace& space, const Marking& marking) {
  marking.validate(space.rank());
  std::vector<Finding> out;
  std::uint32_t all = (1u << space.rank()) - 1;
  for (std::uint32_t cm = 1; cm <= all; ++cm) {
    auto cls = classify_character(space, marking,
                                  SignCharacter::from_mask(cm, space.rank()));
    if (cls.finding) out.push_back(std::move(*cls.finding));
  }
  std::sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
    return a.character.c < b.character.c;
  });
  return out;
}

}  // namespace almostsym
