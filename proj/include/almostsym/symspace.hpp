#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "almostsym/rootsys.hpp"
#include "almostsym/satake.hpp"

namespace almostsym {

// Restricted root multiplicities, one value per root-length class. For BC
// systems the three classes (theta_i +- theta_j, theta_i, 2theta_i) have the
// three distinct squared lengths 2, 1, 4, so keying by squared length covers
// the non-reduced case as well.
struct MultiplicityMap {
  std::map<int, int> by_len2;

  int at(int len2) const;
  bool all_even() const;
  bool all_equal(int value) const;
};

struct SpaceFlags {
  bool maximal_rank = false;   // uniform multiplicity 1
  bool group_case = false;     // uniform multiplicity 2
  bool splitting_rank = false; // all multiplicities even
  bool hermitian = false;
  friend bool operator==(const SpaceFlags&, const SpaceFlags&) = default;
};

struct DataIntegrityError : std::runtime_error {
  explicit DataIntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// One catalog record: an irreducible simply-connected compact symmetric space
// of rank >= 2, described through its restricted root system, multiplicities,
// Satake diagram and structural flags. Immutable after construction.
class SymmetricSpace {
 public:
  SymmetricSpace(std::string label, std::string g_name, std::string k_name,
                 RootSystemKind restricted, MultiplicityMap mults,
                 SatakeDiagram satake, int known_dim, SpaceFlags flags,
                 std::map<std::string, int> parameters);

  const std::string& label() const { return label_; }
  const std::string& g_name() const { return g_name_; }
  const std::string& k_name() const { return k_name_; }
  const RootSystemKind& restricted() const { return restricted_; }
  const MultiplicityMap& mults() const { return mults_; }
  const SatakeDiagram& satake() const { return satake_; }
  int known_dim() const { return known_dim_; }
  const SpaceFlags& flags() const { return flags_; }
  const std::map<std::string, int>& parameters() const { return parameters_; }

  int rank() const { return restricted_.rank; }
  const RootSystem& roots() const { return *rs_; }

  // Multiplicity of one positive root (by index into positive_roots()).
  int mult(int root_index) const { return mult_by_root_[root_index]; }

  // rank + sum of multiplicities over the positive roots. Checked against
  // known_dim at construction; a mismatch is a data-integrity error naming
  // the entry.
  int dimension() const;

  // Flags recomputed from the multiplicities (hermitian is stored data).
  SpaceFlags recompute_flags() const;

 private:
  std::string label_, g_name_, k_name_;
  RootSystemKind restricted_;
  MultiplicityMap mults_;
  SatakeDiagram satake_;
  int known_dim_;
  SpaceFlags flags_;
  std::map<std::string, int> parameters_;
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> mult_by_root_;
};

// All catalog entries of restricted rank in [2, max_rank]. Unbounded
// parameters are instantiated at the representative values {q, q+1, q+3}.
// Every entry is validated (dimension identity, Satake rank law) before the
// catalog is returned; any failure aborts construction.
std::vector<SymmetricSpace> catalog(int max_rank);

// Direct constructors for parametrized families, usable outside the
// representative parameter grid (classical families only).
SymmetricSpace make_AI(int q);
SymmetricSpace make_AII(int q);
SymmetricSpace make_AIII(int p, int q);
SymmetricSpace make_BDI(int p, int q);
SymmetricSpace make_DIII(int n);
SymmetricSpace make_CI(int q);
SymmetricSpace make_CII(int p, int q);

std::vector<std::vector<int>> satake_automorphisms(const SymmetricSpace& space);
std::vector<std::vector<int>> admissible_automorphisms(const SymmetricSpace& space);
bool inner_only(const SymmetricSpace& space);

}  // namespace almostsym
