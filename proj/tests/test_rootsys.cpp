#include "doctest.h"

#include <set>

#include "almostsym/rootsys.hpp"
#include "closure_oracle.hpp"

using namespace almostsym;

namespace {

std::vector<std::pair<RootFamily, std::pair<int, int>>> all_families() {
  return {{RootFamily::A, {1, 8}},  {RootFamily::B, {2, 8}},
          {RootFamily::C, {2, 8}},  {RootFamily::D, {3, 8}},
          {RootFamily::BC, {1, 8}}, {RootFamily::E6, {6, 6}},
          {RootFamily::E7, {7, 7}}, {RootFamily::E8, {8, 8}},
          {RootFamily::F4, {4, 4}}, {RootFamily::G2, {2, 2}}};
}

}  // namespace

TEST_CASE("positive root counts match the closed forms") {
  for (auto [fam, range] : all_families()) {
    for (int q = range.first; q <= range.second; ++q) {
      RootSystemKind kind{fam, q};
      auto rs = get_root_system(kind);
      CHECK(static_cast<int>(rs->positive_roots().size()) ==
            expected_positive_count(kind));
    }
  }
}

TEST_CASE("smallest cases") {
  auto a1 = RootSystem::build({RootFamily::A, 1});
  CHECK(a1.positive_roots().size() == 1);

  auto g2 = RootSystem::build({RootFamily::G2, 2});
  CHECK(g2.positive_roots().size() == 6);

  auto bc2 = RootSystem::build({RootFamily::BC, 2});
  CHECK(bc2.positive_roots().size() == 6);
  std::set<std::vector<int>> got;
  for (const auto& r : bc2.positive_roots()) got.insert(r.simple_coeffs);
  // theta1-theta2, theta2, theta1, theta1+theta2, 2theta2, 2theta1
  std::set<std::vector<int>> want = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {0, 2}, {2, 2}};
  CHECK(got == want);
}

TEST_CASE("invalid ranks are rejected naming family and rank") {
  CHECK_THROWS_AS(RootSystem::build({RootFamily::B, 1}), InvalidRankError);
  CHECK_THROWS_AS(RootSystem::build({RootFamily::D, 2}), InvalidRankError);
  CHECK_THROWS_AS(RootSystem::build({RootFamily::E6, 5}), InvalidRankError);
  CHECK_THROWS_AS(RootSystem::build({RootFamily::A, 0}), InvalidRankError);
  try {
    RootSystem::build({RootFamily::B, 1});
  } catch (const InvalidRankError& e) {
    std::string msg = e.what();
    CHECK(msg.find("B") != std::string::npos);
    CHECK(msg.find("1") != std::string::npos);
  }
}

TEST_CASE("closure generation agrees with the formulas on reduced families") {
  for (auto [fam, range] : all_families()) {
    if (fam == RootFamily::BC) continue;  // non-reduced, closure not applicable
    for (int q = range.first; q <= std::min(range.second, 5); ++q) {
      auto rs = get_root_system({fam, q});
      auto oracle = testing::closure_positive_roots(*rs);
      std::set<std::vector<int>> built;
      for (const auto& r : rs->positive_roots()) built.insert(r.simple_coeffs);
      CHECK(built == oracle);
    }
  }
}

TEST_CASE("coefficients") {
  auto a3 = get_root_system({RootFamily::A, 3});
  Root a12;
  a12.simple_coeffs = {1, 1, 0};
  CHECK(a3->coefficients(a3->positive_roots()[a3->index_of(a12.simple_coeffs)]) ==
        std::vector<int>{1, 1, 0});

  auto g2 = get_root_system({RootFamily::G2, 2});
  CHECK(g2->highest_root().simple_coeffs == std::vector<int>{3, 2});

  auto f4 = get_root_system({RootFamily::F4, 4});
  CHECK(f4->highest_root().simple_coeffs == std::vector<int>{2, 3, 4, 2});

  Root bogus;
  bogus.simple_coeffs = {2, 1, 0};
  CHECK_THROWS_AS(a3->coefficients(bogus), NotARootError);
}

TEST_CASE("highest roots") {
  for (int q = 2; q <= 6; ++q) {
    auto aq = get_root_system({RootFamily::A, q});
    CHECK(aq->highest_root().simple_coeffs == std::vector<int>(q, 1));
  }
  auto c3 = get_root_system({RootFamily::C, 3});
  CHECK(c3->highest_root().simple_coeffs == std::vector<int>{2, 2, 1});
  // dominance over every positive root
  for (auto [fam, range] : all_families()) {
    auto rs = get_root_system({fam, range.first});
    const auto& hi = rs->highest_root().simple_coeffs;
    for (const auto& r : rs->positive_roots())
      for (int i = 0; i < rs->rank(); ++i)
        CHECK(hi[i] >= r.simple_coeffs[i]);
  }
}

TEST_CASE("weight decomposition of the highest root") {
  auto weights_of_delta = [](RootFamily fam, int q) {
    auto rs = get_root_system({fam, q});
    auto w = rs->weight_decomposition(rs->highest_root());
    std::vector<int> out;
    for (const auto& x : w) {
      REQUIRE(x.is_integer());
      out.push_back(static_cast<int>(x.num()));
    }
    return out;
  };
  CHECK(weights_of_delta(RootFamily::F4, 4) == std::vector<int>{1, 0, 0, 0});
  CHECK(weights_of_delta(RootFamily::C, 5) == std::vector<int>{2, 0, 0, 0, 0});
  CHECK(weights_of_delta(RootFamily::A, 5) == std::vector<int>{1, 0, 0, 0, 1});
  CHECK(weights_of_delta(RootFamily::BC, 4) == std::vector<int>{2, 0, 0, 0});
  CHECK(weights_of_delta(RootFamily::B, 5) == std::vector<int>{0, 1, 0, 0, 0});
  // low-rank degenerations of the generic table
  CHECK(weights_of_delta(RootFamily::B, 2) == std::vector<int>{0, 2});
  CHECK(weights_of_delta(RootFamily::D, 3) == std::vector<int>{0, 1, 1});
  // all coefficients non-negative in every family
  for (auto [fam, range] : all_families()) {
    auto rs = get_root_system({fam, range.second});
    for (const auto& x : rs->weight_decomposition(rs->highest_root()))
      CHECK(x >= Rational(0));
  }
}

TEST_CASE("is_root") {
  auto a2 = get_root_system({RootFamily::A, 2});
  CHECK(a2->is_root(std::vector<int>{1, 1}));
  CHECK_FALSE(a2->is_root(std::vector<int>{2, 1}));
  CHECK(a2->is_root(std::vector<int>{-1, -1}));
  auto g2 = get_root_system({RootFamily::G2, 2});
  CHECK(g2->is_root(std::vector<int>{2, 1}));
  CHECK_FALSE(g2->is_root(std::vector<int>{2, 2}));
}

TEST_CASE("closure property of the stored positive roots") {
  for (auto kind : {RootSystemKind{RootFamily::G2, 2}, {RootFamily::F4, 4},
                    {RootFamily::BC, 3}, {RootFamily::D, 4}}) {
    auto rs = get_root_system(kind);
    const auto& pos = rs->positive_roots();
    for (const auto& a : pos)
      for (const auto& b : pos) {
        std::vector<int> sum(rs->rank());
        for (int i = 0; i < rs->rank(); ++i)
          sum[i] = a.simple_coeffs[i] + b.simple_coeffs[i];
        if (rs->is_root(sum)) CHECK(rs->index_of(sum) >= 0);
      }
  }
}

TEST_CASE("root strings are unbroken in reduced families") {
  for (auto kind : {RootSystemKind{RootFamily::G2, 2}, {RootFamily::F4, 4},
                    {RootFamily::A, 4}, {RootFamily::B, 3}}) {
    auto rs = get_root_system(kind);
    const auto& pos = rs->positive_roots();
    for (const auto& a : pos)
      for (const auto& b : pos) {
        if (a.simple_coeffs == b.simple_coeffs) continue;
        // walk the a-string through b: indices k with b + k a a root
        int lo = 0, hi = 0;
        auto shifted = [&](int k) {
          std::vector<int> v(rs->rank());
          for (int i = 0; i < rs->rank(); ++i)
            v[i] = b.simple_coeffs[i] + k * a.simple_coeffs[i];
          bool zero = true;
          for (int x : v) zero = zero && x == 0;
          return !zero && rs->is_root(v);
        };
        while (shifted(lo - 1)) --lo;
        while (shifted(hi + 1)) ++hi;
        for (int k = lo; k <= hi; ++k) CHECK(shifted(k));
      }
  }
}

TEST_CASE("ortho coordinates and simple coefficients are consistent") {
  for (auto [fam, range] : all_families()) {
    auto rs = get_root_system({fam, range.first});
    for (const auto& r : rs->positive_roots()) {
      std::vector<Rational> rebuilt(r.ortho_coords.size(), Rational(0));
      for (int i = 0; i < rs->rank(); ++i)
        for (size_t k = 0; k < rebuilt.size(); ++k)
          rebuilt[k] += Rational(r.simple_coeffs[i]) *
                        rs->simple_roots()[i].ortho_coords[k];
      CHECK(rebuilt == r.ortho_coords);
    }
  }
}

TEST_CASE("deterministic ordering and dump") {
  auto a = RootSystem::build({RootFamily::E6, 6});
  auto b = RootSystem::build({RootFamily::E6, 6});
  CHECK(a.debug_dump() == b.debug_dump());
  for (size_t i = 1; i < a.positive_roots().size(); ++i)
    CHECK(a.positive_roots()[i - 1].simple_coeffs <
          a.positive_roots()[i].simple_coeffs);
}
