#pragma once

#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "almostsym/rational.hpp"

namespace almostsym {

// The ten families of (restricted) root systems that occur for irreducible
// compact symmetric spaces. BC is the non-reduced family; everything else is
// reduced. Exact integer/rational arithmetic throughout, no floating point.

enum class RootFamily { A, B, C, D, BC, E6, E7, E8, F4, G2 };

const char* family_name(RootFamily f);
RootFamily family_from_name(const std::string& name);  // throws on unknown name
bool family_has_fixed_rank(RootFamily f);

struct RootSystemKind {
  RootFamily family;
  int rank;

  // Throws InvalidRankError unless the rank is admissible for the family:
  // A, BC need rank >= 1; B, C rank >= 2; D rank >= 3; exceptional families
  // have their fixed rank.
  void validate() const;
  std::string str() const;
  friend bool operator==(const RootSystemKind&, const RootSystemKind&) = default;
  friend bool operator<(const RootSystemKind& a, const RootSystemKind& b) {
    return a.family < b.family || (a.family == b.family && a.rank < b.rank);
  }
};

struct InvalidRankError : std::invalid_argument {
  InvalidRankError(RootFamily f, int rank);
};
struct NotARootError : std::invalid_argument {
  explicit NotARootError(const std::string& what) : std::invalid_argument(what) {}
};

struct Root {
  std::vector<int> simple_coeffs;        // (n_1(a), ..., n_q(a))
  std::vector<Rational> ortho_coords;    // coordinates in the ambient model
};

// Closed-form positive root count for the family (A_q: q(q+1)/2, B_q/C_q: q^2,
// D_q: q(q-1), BC_q: q^2+q, G2: 6, F4: 24, E6: 36, E7: 63, E8: 120).
int expected_positive_count(const RootSystemKind& kind);

class RootSystem {
 public:
  static RootSystem build(RootSystemKind kind);

  const RootSystemKind& kind() const { return kind_; }
  int rank() const { return kind_.rank; }
  const std::vector<Root>& simple_roots() const { return simple_roots_; }
  // Positive roots in a fixed order: lexicographic on simple coefficients.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& highest_root() const { return positive_roots_[highest_idx_]; }
  int highest_index() const { return highest_idx_; }

  // Pairing <a_i, a_j> of simple roots in the ambient inner product.
  const std::vector<std::vector<Rational>>& cartan_pairings() const {
    return cartan_pairings_;
  }

  // Simple coefficients of a root of this system; throws NotARootError if the
  // argument is not one of our roots.
  std::vector<int> coefficients(const Root& r) const;

  // Coefficients m_i with r = sum m_i lambda_i in the fundamental-weight
  // basis, m_j = 2<r, a_j> / <a_j, a_j>.
  std::vector<Rational> weight_decomposition(const Root& r) const;

  // True iff v is the coefficient vector of a positive root or the negative
  // of one.
  bool is_root(std::span<const int> v) const;

  // Index of the positive root with these coefficients, or -1.
  int index_of(std::span<const int> v) const;

  // Squared length of a root; roots of equal length form one multiplicity
  // class. Integral in all ten ambient models used here.
  int length2(const Root& r) const;

  std::vector<int> distinct_lengths2() const;

  // Deterministic debug serialization: array of {simple_coeffs, ortho_coords}.
  std::string debug_dump() const;

 private:
  RootSystemKind kind_;
  std::vector<Root> simple_roots_;
  std::vector<Root> positive_roots_;
  std::vector<std::vector<Rational>> cartan_pairings_;
  int highest_idx_ = -1;
  std::map<std::vector<int>, int> index_;
};

// Shared immutable cache: root systems are pure values and safe to share
// across threads once built.
std::shared_ptr<const RootSystem> get_root_system(RootSystemKind kind);

}  // namespace almostsym
