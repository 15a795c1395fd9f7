#pragma once

// Test-only independent generator of positive roots: closure from the simple
// roots using root strings and the pairing matrix, valid for the reduced
// families. Deliberately shares no code with the per-family formulas in the
// library; it is the oracle those formulas are checked against.

#include <algorithm>
#include <set>
#include <vector>

#include "almostsym/rootsys.hpp"

namespace almostsym::testing {

inline std::set<std::vector<int>> closure_positive_roots(const RootSystem& rs) {
  const int q = rs.rank();
  const auto& pair = rs.cartan_pairings();

  auto ip_with_simple = [&](const std::vector<int>& coeffs, int j) {
    Rational s(0);
    for (int i = 0; i < q; ++i) s += Rational(coeffs[i]) * pair[i][j];
    return s;
  };

  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < q; ++i) {
    std::vector<int> e(q, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier) {
      for (int i = 0; i < q; ++i) {
        // p = how far the alpha_i-string continues below a
        int p = 0;
        std::vector<int> down = a;
        while (true) {
          down[i] -= 1;
          bool nonneg = true;
          for (int v : down) nonneg = nonneg && v >= 0;
          if (!nonneg || !roots.count(down)) break;
          ++p;
        }
        // string length upward: p - 2<a, a_i>/<a_i, a_i>
        Rational cartan = Rational(2) * ip_with_simple(a, i) / pair[i][i];
        Rational up = Rational(p) - cartan;
        if (up > Rational(0)) {
          std::vector<int> b = a;
          b[i] += 1;
          if (roots.insert(b).second) next.push_back(b);
        }
      }
    }
    frontier = std::move(next);
  }
  return roots;
}

}  // namespace almostsym::testing
