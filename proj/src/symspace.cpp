#include "almostsym/symspace.hpp"

#include <algorithm>

namespace almostsym {

int MultiplicityMap::at(int len2) const {
  auto it = by_len2.find(len2);
  if (it == by_len2.end())
    throw DataIntegrityError("no multiplicity for length class " +
                             std::to_string(len2));
  return it->second;
}

bool MultiplicityMap::all_even() const {
  for (auto [l, m] : by_len2)
    if (m % 2 != 0) return false;
  return true;
}

bool MultiplicityMap::all_equal(int value) const {
  for (auto [l, m] : by_len2)
    if (m != value) return false;
  return true;
}

SymmetricSpace::SymmetricSpace(std::string label, std::string g_name,
                               std::string k_name, RootSystemKind restricted,
                               MultiplicityMap mults, SatakeDiagram satake,
                               int known_dim, SpaceFlags flags,
                               std::map<std::string, int> parameters)
    : label_(std::move(label)),
      g_name_(std::move(g_name)),
      k_name_(std::move(k_name)),
      restricted_(restricted),
      mults_(std::move(mults)),
      satake_(std::move(satake)),
      known_dim_(known_dim),
      flags_(flags),
      parameters_(std::move(parameters)),
      rs_(get_root_system(restricted)) {
  for (const auto& r : rs_->positive_roots()) {
    int m = mults_.at(rs_->length2(r));
    if (m < 1)
      throw DataIntegrityError(label_ + ": multiplicity below 1");
    mult_by_root_.push_back(m);
  }
  if (dimension() != known_dim_)
    throw DataIntegrityError(label_ + ": dimension identity fails (" +
                             std::to_string(dimension()) + " vs known " +
                             std::to_string(known_dim_) + ")");
  if (satake_.white_class_count() != rank())
    throw DataIntegrityError(label_ + ": Satake white-class count " +
                             std::to_string(satake_.white_class_count()) +
                             " != rank " + std::to_string(rank()));
  if (recompute_flags() != flags_)
    throw DataIntegrityError(label_ + ": stored flags disagree with multiplicities");
}

int SymmetricSpace::dimension() const {
  int d = rank();
  for (int m : mult_by_root_) d += m;
  return d;
}

SpaceFlags SymmetricSpace::recompute_flags() const {
  SpaceFlags f;
  f.maximal_rank = mults_.all_equal(1);
  f.group_case = mults_.all_equal(2);
  f.splitting_rank = mults_.all_even();
  f.hermitian = flags_.hermitian;  // structural, not derivable from mults
  return f;
}

namespace {

std::map<std::string, int> params_pq(int p, int q) { return {{"p", p}, {"q", q}}; }

std::string num(int n) { return std::to_string(n); }

SatakeDiagram satake_AII(int q) {
  // ambient A_{2q+1}: odd positions black
  std::vector<int> black;
  for (int i = 1; i <= 2 * q + 1; i += 2) black.push_back(i);
  return paint(dynkin_A(2 * q + 1), black, {});
}

SatakeDiagram satake_AIII(int p, int q) {
  int n = p + q - 1;
  std::vector<int> black;
  for (int i = q + 1; i <= p - 1; ++i) black.push_back(i);
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= q; ++i)
    if (i != n + 1 - i) arrows.push_back({i, n + 1 - i});
  return paint(dynkin_A(n), black, arrows);
}

SatakeDiagram satake_BDI(int p, int q) {
  int n = p + q;
  if (n % 2 == 1) {
    int m = (n - 1) / 2;
    std::vector<int> black;
    for (int i = q + 1; i <= m; ++i) black.push_back(i);
    return paint(dynkin_B(m), black, {});
  }
  int m = n / 2;
  if (p == q) return paint(dynkin_D(m), {}, {});
  if (q == m - 1)  // p = q + 2: the fork restricts to one root twice
    return paint(dynkin_D(m), {}, {{m - 1, m}});
  std::vector<int> black;
  for (int i = q + 1; i <= m; ++i) black.push_back(i);
  return paint(dynkin_D(m), black, {});
}

SatakeDiagram satake_DIII(int n) {
  // ambient D_n with odd nodes black; for odd n the fork pair restricts to
  // the same root and is arrowed
  std::vector<int> black;
  for (int i = 1; i <= (n % 2 == 0 ? n - 1 : n - 2); i += 2) black.push_back(i);
  if (n % 2 == 0) return paint(dynkin_D(n), black, {});
  return paint(dynkin_D(n), black, {{n - 1, n}});
}

SatakeDiagram satake_CII(int p, int q) {
  int n = p + q;
  std::vector<int> black;
  for (int i = 1; i <= n; ++i)
    if (i % 2 == 1 || i > 2 * q) black.push_back(i);
  return paint(dynkin_C(n), black, {});
}

}  // namespace

SymmetricSpace make_AI(int q) {
  return SymmetricSpace("AI(" + num(q) + ")", "su(" + num(q + 1) + ")",
                        "so(" + num(q + 1) + ")", {RootFamily::A, q},
                        {{{2, 1}}}, paint(dynkin_A(q), {}, {}), q * (q + 3) / 2,
                        {.maximal_rank = true, .splitting_rank = false},
                        {{"q", q}});
}

SymmetricSpace make_AII(int q) {
  return SymmetricSpace("AII(" + num(q) + ")", "su(" + num(2 * q + 2) + ")",
                        "sp(" + num(q + 1) + ")", {RootFamily::A, q},
                        {{{2, 4}}}, satake_AII(q), q * (2 * q + 3),
                        {.splitting_rank = true}, {{"q", q}});
}

SymmetricSpace make_AIII(int p, int q) {
  if (p < q) std::swap(p, q);
  std::string g = "su(" + num(p + q) + ")";
  std::string k = "s(u(" + num(p) + ")+u(" + num(q) + "))";
  std::string label = "AIII(" + num(p) + "," + num(q) + ")";
  if (p == q)
    return SymmetricSpace(label, g, k, {RootFamily::C, q}, {{{2, 2}, {4, 1}}},
                          satake_AIII(p, q), 2 * p * q, {.hermitian = true},
                          params_pq(p, q));
  return SymmetricSpace(label, g, k, {RootFamily::BC, q},
                        {{{2, 2}, {1, 2 * (p - q)}, {4, 1}}}, satake_AIII(p, q),
                        2 * p * q, {.hermitian = true}, params_pq(p, q));
}

SymmetricSpace make_BDI(int p, int q) {
  if (p < q) std::swap(p, q);
  std::string g = "so(" + num(p + q) + ")";
  std::string k = "so(" + num(p) + ")+so(" + num(q) + ")";
  std::string label = "BDI(" + num(p) + "," + num(q) + ")";
  SpaceFlags flags;
  flags.maximal_rank = (p == q || p == q + 1);
  flags.hermitian = (q == 2);
  if (p == q)
    return SymmetricSpace(label, g, k, {RootFamily::D, q}, {{{2, 1}}},
                          satake_BDI(p, q), p * q, flags, params_pq(p, q));
  return SymmetricSpace(label, g, k, {RootFamily::B, q},
                        {{{2, 1}, {1, p - q}}}, satake_BDI(p, q), p * q, flags,
                        params_pq(p, q));
}

SymmetricSpace make_DIII(int n) {
  int q = n / 2;
  std::string label = "DIII(" + num(n) + ")";
  std::string g = "so(" + num(2 * n) + ")";
  std::string k = "u(" + num(n) + ")";
  if (n % 2 == 0)
    return SymmetricSpace(label, g, k, {RootFamily::C, q}, {{{2, 4}, {4, 1}}},
                          satake_DIII(n), n * (n - 1), {.hermitian = true},
                          {{"n", n}});
  return SymmetricSpace(label, g, k, {RootFamily::BC, q},
                        {{{2, 4}, {1, 4}, {4, 1}}}, satake_DIII(n), n * (n - 1),
                        {.hermitian = true}, {{"n", n}});
}

SymmetricSpace make_CI(int q) {
  return SymmetricSpace("CI(" + num(q) + ")", "sp(" + num(q) + ")",
                        "u(" + num(q) + ")", {RootFamily::C, q},
                        {{{2, 1}, {4, 1}}}, paint(dynkin_C(q), {}, {}),
                        q * (q + 1), {.maximal_rank = true, .hermitian = true},
                        {{"q", q}});
}

SymmetricSpace make_CII(int p, int q) {
  if (p < q) std::swap(p, q);
  std::string g = "sp(" + num(p + q) + ")";
  std::string k = "sp(" + num(p) + ")+sp(" + num(q) + ")";
  std::string label = "CII(" + num(p) + "," + num(q) + ")";
  if (p == q)
    return SymmetricSpace(label, g, k, {RootFamily::C, q}, {{{2, 4}, {4, 3}}},
                          satake_CII(p, q), 4 * p * q, {}, params_pq(p, q));
  return SymmetricSpace(label, g, k, {RootFamily::BC, q},
                        {{{2, 4}, {1, 4 * (p - q)}, {4, 3}}}, satake_CII(p, q),
                        4 * p * q, {}, params_pq(p, q));
}

namespace {

SymmetricSpace make_group(RootFamily fam, int q, const std::string& lname,
                          int dim_l, const SatakeDiagram& dynkin) {
  MultiplicityMap mm;
  RootSystemKind kind{fam, q};
  auto rs = get_root_system(kind);
  for (int l : rs->distinct_lengths2()) mm.by_len2[l] = 2;
  return SymmetricSpace("Group(" + lname + ")", lname + "+" + lname, lname,
                        kind, mm, doubled(dynkin), dim_l,
                        {.group_case = true, .splitting_rank = true}, {});
}

std::vector<SymmetricSpace> exceptional_entries() {
  std::vector<SymmetricSpace> out;
  out.push_back(SymmetricSpace("EI", "e6", "sp(4)", {RootFamily::E6, 6},
                               {{{2, 1}}}, paint(dynkin_E(6), {}, {}), 42,
                               {.maximal_rank = true}, {}));
  out.push_back(SymmetricSpace("EII", "e6", "su(6)+su(2)", {RootFamily::F4, 4},
                               {{{2, 1}, {1, 2}}},
                               paint(dynkin_E(6), {}, {{1, 6}, {3, 5}}), 40, {}, {}));
  // EIII: BC2 with classes (theta1+-theta2, theta_i, 2theta_i) of dimensions
  // (6, 8, 1); the node-1 orbit is the 21-dimensional singular orbit. Some
  // descriptions list its tangent summands with the theta indices swapped;
  // the decomposition here is computed from the marking.
  out.push_back(SymmetricSpace("EIII", "e6", "so(10)+u(1)", {RootFamily::BC, 2},
                               {{{2, 6}, {1, 8}, {4, 1}}},
                               paint(dynkin_E(6), {3, 4, 5}, {{1, 6}}), 32,
                               {.hermitian = true}, {}));
  out.push_back(SymmetricSpace("EIV", "e6", "f4", {RootFamily::A, 2},
                               {{{2, 8}}}, paint(dynkin_E(6), {2, 3, 4, 5}, {}),
                               26, {.splitting_rank = true}, {}));
  out.push_back(SymmetricSpace("EV", "e7", "su(8)", {RootFamily::E7, 7},
                               {{{2, 1}}}, paint(dynkin_E(7), {}, {}), 70,
                               {.maximal_rank = true}, {}));
  out.push_back(SymmetricSpace("EVI", "e7", "so(12)+su(2)", {RootFamily::F4, 4},
                               {{{2, 1}, {1, 4}}},
                               paint(dynkin_E(7), {2, 5, 7}, {}), 64, {}, {}));
  // EVII: restricted C3. The one-dimensional classes are the long roots
  // 2theta_i (sometimes written theta_i in the literature); mid class has
  // dimension 8.
  out.push_back(SymmetricSpace("EVII", "e7", "e6+u(1)", {RootFamily::C, 3},
                               {{{2, 8}, {4, 1}}},
                               paint(dynkin_E(7), {2, 3, 4, 5}, {}), 54,
                               {.hermitian = true}, {}));
  out.push_back(SymmetricSpace("EVIII", "e8", "so(16)", {RootFamily::E8, 8},
                               {{{2, 1}}}, paint(dynkin_E(8), {}, {}), 128,
                               {.maximal_rank = true}, {}));
  out.push_back(SymmetricSpace("EIX", "e8", "e7+su(2)", {RootFamily::F4, 4},
                               {{{2, 1}, {1, 8}}},
                               paint(dynkin_E(8), {2, 3, 4, 5}, {}), 112, {}, {}));
  out.push_back(SymmetricSpace("FI", "f4", "sp(3)+sp(1)", {RootFamily::F4, 4},
                               {{{2, 1}, {1, 1}}}, paint(dynkin_F4(), {}, {}),
                               28, {.maximal_rank = true}, {}));
  out.push_back(SymmetricSpace("G", "g2", "so(4)", {RootFamily::G2, 2},
                               {{{2, 1}, {6, 1}}}, paint(dynkin_G2(), {}, {}),
                               8, {.maximal_rank = true}, {}));
  return out;
}

}  // namespace

std::vector<SymmetricSpace> catalog(int max_rank) {
  if (max_rank < 2)
    throw std::invalid_argument("catalog needs max_rank >= 2");
  std::vector<SymmetricSpace> out;
  for (int q = 2; q <= max_rank; ++q) {
    out.push_back(make_AI(q));
    out.push_back(make_AII(q));
    for (int p : {q, q + 1, q + 3}) out.push_back(make_AIII(p, q));
    for (int p : {q, q + 1, q + 3}) {
      if (p == q && q < 3) continue;  // BDI(2,2) is reducible
      out.push_back(make_BDI(p, q));
    }
    for (int n : {2 * q, 2 * q + 1}) out.push_back(make_DIII(n));
    out.push_back(make_CI(q));
    for (int p : {q, q + 1, q + 3}) out.push_back(make_CII(p, q));
  }
  for (auto& s : exceptional_entries())
    if (s.rank() <= max_rank) out.push_back(s);
  // group manifolds, represented by their root system with m = 2
  for (int q = 2; q <= max_rank; ++q)
    out.push_back(make_group(RootFamily::A, q, "su(" + num(q + 1) + ")",
                             q * q + 2 * q, dynkin_A(q)));
  for (int q = 2; q <= max_rank; ++q)
    out.push_back(make_group(RootFamily::B, q, "so(" + num(2 * q + 1) + ")",
                             q * (2 * q + 1), dynkin_B(q)));
  for (int q = 3; q <= max_rank; ++q)  // sp(2) = so(5) already listed as B2
    out.push_back(make_group(RootFamily::C, q, "sp(" + num(q) + ")",
                             q * (2 * q + 1), dynkin_C(q)));
  for (int q = 4; q <= max_rank; ++q)  // so(6) = su(4), so(4) reducible
    out.push_back(make_group(RootFamily::D, q, "so(" + num(2 * q) + ")",
                             q * (2 * q - 1), dynkin_D(q)));
  if (max_rank >= 2)
    out.push_back(make_group(RootFamily::G2, 2, "g2", 14, dynkin_G2()));
  if (max_rank >= 4)
    out.push_back(make_group(RootFamily::F4, 4, "f4", 52, dynkin_F4()));
  if (max_rank >= 6)
    out.push_back(make_group(RootFamily::E6, 6, "e6", 78, dynkin_E(6)));
  if (max_rank >= 7)
    out.push_back(make_group(RootFamily::E7, 7, "e7", 133, dynkin_E(7)));
  if (max_rank >= 8)
    out.push_back(make_group(RootFamily::E8, 8, "e8", 248, dynkin_E(8)));

  std::stable_sort(out.begin(), out.end(),
                   [](const SymmetricSpace& a, const SymmetricSpace& b) {
                     return a.label() < b.label();
                   });
  return out;
}

std::vector<std::vector<int>> satake_automorphisms(const SymmetricSpace& space) {
  return space.satake().automorphisms();
}

std::vector<std::vector<int>> admissible_automorphisms(const SymmetricSpace& space) {
  return space.satake().admissible_automorphisms();
}

bool inner_only(const SymmetricSpace& space) {
  return admissible_automorphisms(space).size() == 1;
}

}  // namespace almostsym
