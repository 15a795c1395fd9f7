#include "almostsym/orbits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace almostsym {

Marking Marking::from_mask(std::uint32_t mask) {
  Marking m;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) m.support.push_back(i + 1);
  return m;
}

std::uint32_t Marking::mask() const {
  std::uint32_t m = 0;
  for (int i : support) m |= 1u << (i - 1);
  return m;
}

void Marking::validate(int rank) const {
  if (support.empty())
    throw std::invalid_argument("marking must have non-empty support");
  int prev = 0;
  for (int i : support) {
    if (i <= prev || i > rank)
      throw std::invalid_argument("marking support must be increasing node indices in 1.." +
                                  std::to_string(rank));
    prev = i;
  }
}

std::string Marking::str() const {
  std::string s = "{";
  for (size_t i = 0; i < support.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(support[i]);
  }
  return s + "}";
}

const char* orbit_kind_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::most_singular: return "most_singular";
    case OrbitKind::two_node: return "two_node";
    case OrbitKind::intermediate: return "intermediate";
    case OrbitKind::principal: return "principal";
  }
  return "?";
}

OrbitGeometry orbit_geometry(const SymmetricSpace& space, const Marking& marking) {
  marking.validate(space.rank());
  const auto& pos = space.roots().positive_roots();
  OrbitGeometry g;
  for (size_t i = 0; i < pos.size(); ++i) {
    bool tangent = false;
    for (int node : marking.support)
      if (pos[i].simple_coeffs[node - 1] > 0) { tangent = true; break; }
    if (tangent) {
      g.tangent_roots.push_back(static_cast<int>(i));
      g.tangent_dim += space.mult(static_cast<int>(i));
    } else {
      g.normal_roots.push_back(static_cast<int>(i));
      g.normal_dim_in_ambient += space.mult(static_cast<int>(i));
    }
  }
  g.normal_dim_in_ambient += space.rank();
  size_t n = marking.support.size();
  if (n == 1) g.kind = OrbitKind::most_singular;
  else if (static_cast<int>(n) == space.rank()) g.kind = OrbitKind::principal;
  else if (n == 2) g.kind = OrbitKind::two_node;
  else g.kind = OrbitKind::intermediate;
  return g;
}

bool is_extrinsically_symmetric(const SymmetricSpace& space, const Marking& marking) {
  marking.validate(space.rank());
  if (marking.support.size() != 1) return false;
  int node = marking.support[0];
  return space.roots().highest_root().simple_coeffs[node - 1] == 1;
}

bool monotonicity_check(const SymmetricSpace& space, const Marking& m1,
                        const Marking& m2) {
  m1.validate(space.rank());
  m2.validate(space.rank());
  if ((m1.mask() & m2.mask()) != m1.mask())
    throw std::invalid_argument("monotonicity_check needs nested supports");
  auto g1 = orbit_geometry(space, m1);
  auto g2 = orbit_geometry(space, m2);
  return std::includes(g2.tangent_roots.begin(), g2.tangent_roots.end(),
                       g1.tangent_roots.begin(), g1.tangent_roots.end());
}

}  // namespace almostsym
