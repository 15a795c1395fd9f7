#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "almostsym/symspace.hpp"

namespace almostsym {

// Support pattern of the orbit basepoint on the simple restricted roots: the
// basepoint is normalized so each simple root takes the value 0 or sqrt(-1)
// on it, and only the support matters for the orbit geometry.
struct Marking {
  std::vector<int> support;  // 1-based node indices, strictly increasing

  static Marking from_mask(std::uint32_t mask);
  std::uint32_t mask() const;
  void validate(int rank) const;  // throws on empty or out-of-range support
  std::string str() const;
  friend bool operator==(const Marking&, const Marking&) = default;
};

enum class OrbitKind { most_singular, two_node, intermediate, principal };
const char* orbit_kind_name(OrbitKind k);

struct OrbitGeometry {
  std::vector<int> tangent_roots;  // indices into positive_roots()
  std::vector<int> normal_roots;
  int tangent_dim = 0;             // sum of multiplicities over tangent roots
  int normal_dim_in_ambient = 0;   // rank + sum over normal roots
  OrbitKind kind = OrbitKind::most_singular;
};

// Tangent/normal split of the s-orbit through the marked basepoint: a root
// space is tangent iff the root is nonzero on the basepoint, i.e. iff the
// root has a positive coefficient on some supported node.
OrbitGeometry orbit_geometry(const SymmetricSpace& space, const Marking& marking);

// A most singular orbit is extrinsically symmetric iff its node is dual to a
// simple restricted root with coefficient 1 in the highest restricted root.
bool is_extrinsically_symmetric(const SymmetricSpace& space, const Marking& marking);

// Sanity oracle: growing the support can only grow the tangent set.
// Precondition: m1.support is a subset of m2.support.
bool monotonicity_check(const SymmetricSpace& space, const Marking& m1,
                        const Marking& m2);

}  // namespace almostsym
