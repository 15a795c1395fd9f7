#pragma once

#include <optional>
#include <string>
#include <vector>

namespace almostsym {

// Satake diagram: the ambient Dynkin diagram with black nodes (simple roots
// vanishing on the Cartan subspace) and curved arrows pairing white nodes
// whose restrictions coincide. Node lengths carry the bond direction, so an
// automorphism here is a genuine Dynkin diagram automorphism.

struct SatakeNode {
  int len2;    // relative squared length of the simple root (1, 2, 3, 4, or 6)
  bool black;
};

class SatakeDiagram {
 public:
  SatakeDiagram() = default;
  SatakeDiagram(std::vector<SatakeNode> nodes,
                std::vector<std::pair<int, int>> edges,
                std::vector<std::pair<int, int>> arrows);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<SatakeNode>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

  bool adjacent(int a, int b) const { return adj_[a][b]; }
  std::optional<int> arrow_partner(int node) const;

  // Number of white-node equivalence classes under the arrow relation; this
  // must equal the restricted rank of the space carrying the diagram.
  int white_class_count() const;

  // All node permutations preserving adjacency, node lengths (hence bond
  // multiplicity and direction), colors, and the arrow relation.
  std::vector<std::vector<int>> automorphisms() const;

  // The subset of automorphisms sending every white node to itself or to its
  // arrow partner. Always contains the identity.
  std::vector<std::vector<int>> admissible_automorphisms() const;

 private:
  void extend(std::vector<int>& perm, std::vector<bool>& used, int next,
              std::vector<std::vector<int>>& out) const;
  bool compatible(const std::vector<int>& perm, int a, int image) const;

  std::vector<SatakeNode> nodes_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::vector<bool>> adj_;
};

// Plain ambient Dynkin diagrams (all white, no arrows) for the standard
// families; `ambient_*` helpers are used by the catalog to assemble Satake
// data per entry.
SatakeDiagram dynkin_A(int n);
SatakeDiagram dynkin_B(int n);
SatakeDiagram dynkin_C(int n);
SatakeDiagram dynkin_D(int n);
SatakeDiagram dynkin_E(int n);
SatakeDiagram dynkin_F4();
SatakeDiagram dynkin_G2();

SatakeDiagram paint(SatakeDiagram d, const std::vector<int>& black_nodes,
                    const std::vector<std::pair<int, int>>& arrows);  // 1-based

// Two disjoint copies of a diagram with arrows pairing the copies (the group
// manifold case).
SatakeDiagram doubled(const SatakeDiagram& d);

}  // namespace almostsym
