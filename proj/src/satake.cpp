#include "almostsym/satake.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace almostsym {

SatakeDiagram::SatakeDiagram(std::vector<SatakeNode> nodes,
                             std::vector<std::pair<int, int>> edges,
                             std::vector<std::pair<int, int>> arrows)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), arrows_(std::move(arrows)) {
  int n = size();
  adj_.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges_) {
    adj_[a][b] = adj_[b][a] = true;
  }
  std::vector<int> seen(n, 0);
  for (auto [a, b] : arrows_) {
    if (a == b || nodes_[a].black || nodes_[b].black)
      throw std::invalid_argument("arrow must pair two distinct white nodes");
    if (seen[a]++ || seen[b]++)
      throw std::invalid_argument("node appears in more than one arrow");
  }
}

std::optional<int> SatakeDiagram::arrow_partner(int node) const {
  for (auto [a, b] : arrows_) {
    if (a == node) return b;
    if (b == node) return a;
  }
  return std::nullopt;
}

int SatakeDiagram::white_class_count() const {
  int whites = 0;
  for (const auto& nd : nodes_)
    if (!nd.black) ++whites;
  return whites - static_cast<int>(arrows_.size());
}

bool SatakeDiagram::compatible(const std::vector<int>& perm, int a, int image) const {
  if (nodes_[a].black != nodes_[image].black) return false;
  if (nodes_[a].len2 != nodes_[image].len2) return false;
  for (int b = 0; b < size(); ++b) {
    if (perm[b] < 0) continue;
    if (adj_[a][b] != adj_[image][perm[b]]) return false;
  }
  return true;
}

void SatakeDiagram::extend(std::vector<int>& perm, std::vector<bool>& used,
                           int next, std::vector<std::vector<int>>& out) const {
  int n = size();
  if (next == n) {
    // arrow relation: arrow pairs map to arrow pairs and nothing maps into one
    for (auto [a, b] : arrows_) {
      auto p = arrow_partner(perm[a]);
      if (!p || *p != perm[b]) return;
    }
    for (int w = 0; w < n; ++w)
      if (!nodes_[w].black && arrow_partner(perm[w]) && !arrow_partner(w))
        return;
    out.push_back(perm);
    return;
  }
  for (int img = 0; img < n; ++img) {
    if (used[img] || !compatible(perm, next, img)) continue;
    perm[next] = img;
    used[img] = true;
    extend(perm, used, next + 1, out);
    perm[next] = -1;
    used[img] = false;
  }
}

std::vector<std::vector<int>> SatakeDiagram::automorphisms() const {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(size(), -1);
  std::vector<bool> used(size(), false);
  extend(perm, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> SatakeDiagram::admissible_automorphisms() const {
  std::vector<std::vector<int>> out;
  for (const auto& perm : automorphisms()) {
    bool ok = true;
    for (int w = 0; w < size() && ok; ++w) {
      if (nodes_[w].black) continue;
      if (perm[w] == w) continue;
      auto p = arrow_partner(w);
      ok = p && *p == perm[w];
    }
    if (ok) out.push_back(perm);
  }
  return out;
}

namespace {
SatakeDiagram path(int n, const std::vector<int>& len2) {
  std::vector<SatakeNode> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back({len2[i], false});
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return SatakeDiagram(std::move(nodes), std::move(edges), {});
}
}  // namespace

SatakeDiagram dynkin_A(int n) { return path(n, std::vector<int>(n, 2)); }

SatakeDiagram dynkin_B(int n) {
  std::vector<int> l(n, 2);
  l[n - 1] = 1;
  return path(n, l);
}

SatakeDiagram dynkin_C(int n) {
  std::vector<int> l(n, 2);
  l[n - 1] = 4;
  return path(n, l);
}

SatakeDiagram dynkin_D(int n) {
  if (n < 3) throw std::invalid_argument("D diagram needs >= 3 nodes");
  std::vector<SatakeNode> nodes(n, SatakeNode{2, false});
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n - 1; ++i) edges.push_back({i, i + 1});
  edges.push_back({n - 3, n - 1});
  return SatakeDiagram(std::move(nodes), std::move(edges), {});
}

SatakeDiagram dynkin_E(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("E diagram rank must be 6..8");
  std::vector<SatakeNode> nodes(n, SatakeNode{2, false});
  // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
  std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
  if (n >= 7) edges.push_back({5, 6});
  if (n >= 8) edges.push_back({6, 7});
  return SatakeDiagram(std::move(nodes), std::move(edges), {});
}

SatakeDiagram dynkin_F4() {
  std::vector<SatakeNode> nodes = {{2, false}, {2, false}, {1, false}, {1, false}};
  return SatakeDiagram(std::move(nodes), {{0, 1}, {1, 2}, {2, 3}}, {});
}

SatakeDiagram dynkin_G2() {
  std::vector<SatakeNode> nodes = {{2, false}, {6, false}};
  return SatakeDiagram(std::move(nodes), {{0, 1}}, {});
}

SatakeDiagram paint(SatakeDiagram d, const std::vector<int>& black_nodes,
                    const std::vector<std::pair<int, int>>& arrows) {
  std::vector<SatakeNode> nodes = d.nodes();
  for (int b : black_nodes) nodes[b - 1].black = true;
  std::vector<std::pair<int, int>> arr;
  for (auto [a, b] : arrows) arr.push_back({a - 1, b - 1});
  return SatakeDiagram(std::move(nodes), d.edges(), std::move(arr));
}

SatakeDiagram doubled(const SatakeDiagram& d) {
  int n = d.size();
  std::vector<SatakeNode> nodes = d.nodes();
  nodes.insert(nodes.end(), d.nodes().begin(), d.nodes().end());
  std::vector<std::pair<int, int>> edges = d.edges();
  for (auto [a, b] : d.edges()) edges.push_back({a + n, b + n});
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back({i, i + n});
  return SatakeDiagram(std::move(nodes), std::move(edges), std::move(arrows));
}

}  // namespace almostsym
