#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "almostsym/orbits.hpp"

namespace almostsym {

// Diagonal model of the candidate involutions: a parity coweight c in
// {0,1}^rank acts on the root space of alpha by the sign
// (-1)^(sum_i c_i n_i(alpha)). The canonical involution of a marked orbit is
// the case c = indicator of the support.
struct SignCharacter {
  std::vector<std::uint8_t> c;

  std::uint32_t mask() const;
  static SignCharacter from_mask(std::uint32_t mask, int rank);
  std::string str() const;
  friend bool operator==(const SignCharacter&, const SignCharacter&) = default;
};

// (-1)^(sum c_i n_i(alpha)) as +1/-1. Throws on a rank mismatch.
int evaluate_character(const RootSystem& rs, const SignCharacter& c, const Root& alpha);

// The sign action of e^(pi ad a0) for the marked basepoint a0; realizability
// as a global involutive isometry is guaranteed by construction.
SignCharacter canonical_involution(const Marking& marking, int rank);

struct FixedProfile {
  int fixed_tangent_dim = 0;   // sum of m over tangent roots with sign +1
  bool normal_identity = true; // sign +1 on every normal root
  int neg_mult_total = 0;      // sum of m over all positive roots with sign -1
};

FixedProfile fixed_profile(const SymmetricSpace& space, const Marking& marking,
                           const SignCharacter& c);

enum class FindingClass { symmetry, almost_symmetry };
enum class Certification { canonical_certified, torus_candidate };
enum class RejectReason { normal_not_fixed, trivial_character, orientation, coindex };

const char* finding_class_name(FindingClass c);
const char* certification_name(Certification c);
const char* reject_reason_name(RejectReason r);

struct Finding {
  std::string space;
  Marking marking;
  SignCharacter character;
  FindingClass cls;
  Certification certification;
  int fixed_tangent_dim = 0;
  int neg_mult_total = 0;
  int orbit_dim = 0;
};

struct Classification {
  std::optional<Finding> finding;
  std::optional<RejectReason> rejection;
  int coindex = 0;  // fixed_tangent_dim when rejected with reason coindex
};

// Classify one candidate character on one marked orbit:
//  - normal_not_fixed if the character moves some normal root space;
//  - trivial_character if it is the identity on the whole tangent space;
//  - orientation for a non-canonical candidate of odd negative-sign
//    multiplicity (such a candidate cannot come from the connected isotropy
//    group); canonical characters skip this filter, their realization does
//    not pass through the isotropy group;
//  - otherwise a Finding (symmetry at fixed dimension 0, almost symmetry at
//    1) or a coindex rejection carrying the fixed dimension.
Classification classify_character(const SymmetricSpace& space, const Marking& marking,
                                  const SignCharacter& c);

// Exhaustive sweep of all non-trivial characters for one marking, findings
// sorted by character mask. The canonical character is flagged
// canonical_certified, every other finding is a torus candidate.
std::vector<Finding> torus_search(const SymmetricSpace& space, const Marking& marking);

}  // namespace almostsym
