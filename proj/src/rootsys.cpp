#include "almostsym/rootsys.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace almostsym {

const char* family_name(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::D: return "D";
    case RootFamily::BC: return "BC";
    case RootFamily::E6: return "E6";
    case RootFamily::E7: return "E7";
    case RootFamily::E8: return "E8";
    case RootFamily::F4: return "F4";
    case RootFamily::G2: return "G2";
  }
  return "?";
}

RootFamily family_from_name(const std::string& name) {
  static const std::map<std::string, RootFamily> table = {
      {"A", RootFamily::A},   {"B", RootFamily::B},   {"C", RootFamily::C},
      {"D", RootFamily::D},   {"BC", RootFamily::BC}, {"E6", RootFamily::E6},
      {"E7", RootFamily::E7}, {"E8", RootFamily::E8}, {"F4", RootFamily::F4},
      {"G2", RootFamily::G2}};
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown root system family: " + name);
  return it->second;
}

bool family_has_fixed_rank(RootFamily f) {
  switch (f) {
    case RootFamily::E6:
    case RootFamily::E7:
    case RootFamily::E8:
    case RootFamily::F4:
    case RootFamily::G2: return true;
    default: return false;
  }
}

InvalidRankError::InvalidRankError(RootFamily f, int rank)
    : std::invalid_argument("invalid rank " + std::to_string(rank) +
                            " for family " + family_name(f)) {}

void RootSystemKind::validate() const {
  switch (family) {
    case RootFamily::A:
    case RootFamily::BC:
      if (rank < 1) throw InvalidRankError(family, rank);
      return;
    case RootFamily::B:
    case RootFamily::C:
      if (rank < 2) throw InvalidRankError(family, rank);
      return;
    case RootFamily::D:
      if (rank < 3) throw InvalidRankError(family, rank);
      return;
    case RootFamily::E6:
      if (rank != 6) throw InvalidRankError(family, rank);
      return;
    case RootFamily::E7:
      if (rank != 7) throw InvalidRankError(family, rank);
      return;
    case RootFamily::E8:
      if (rank != 8) throw InvalidRankError(family, rank);
      return;
    case RootFamily::F4:
      if (rank != 4) throw InvalidRankError(family, rank);
      return;
    case RootFamily::G2:
      if (rank != 2) throw InvalidRankError(family, rank);
      return;
  }
}

std::string RootSystemKind::str() const {
  std::string s = family_name(family);
  if (!family_has_fixed_rank(family)) s += std::to_string(rank);
  return s;
}

int expected_positive_count(const RootSystemKind& kind) {
  int q = kind.rank;
  switch (kind.family) {
    case RootFamily::A: return q * (q + 1) / 2;
    case RootFamily::B:
    case RootFamily::C: return q * q;
    case RootFamily::D: return q * (q - 1);
    case RootFamily::BC: return q * q + q;
    case RootFamily::G2: return 6;
    case RootFamily::F4: return 24;
    case RootFamily::E6: return 36;
    case RootFamily::E7: return 63;
    case RootFamily::E8: return 120;
  }
  return -1;
}

namespace {

using Vec = std::vector<Rational>;

Vec unit(int dim, int i) {
  Vec v(dim, Rational(0));
  v[i] = Rational(1);
  return v;
}
Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
Vec scale(const Vec& a, const Rational& s) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}
Rational dot(const Vec& a, const Vec& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Exact least-structure linear solve: coefficients x with
// sum_j x_j simples[j] = v, or nullopt if v is outside the span.
bool solve_in_basis(const std::vector<Vec>& simples, const Vec& v, Vec* out) {
  size_t n = simples.size(), m = v.size();
  std::vector<Vec> aug(m, Vec(n + 1, Rational(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = simples[j][i];
    aug[i][n] = v[i];
  }
  std::vector<int> pivots;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t sel = row;
    while (sel < m && aug[sel][col] == Rational(0)) ++sel;
    if (sel == m) continue;
    std::swap(aug[row], aug[sel]);
    Rational p = aug[row][col];
    for (auto& x : aug[row]) x /= p;
    for (size_t r = 0; r < m; ++r) {
      if (r == row || aug[r][col] == Rational(0)) continue;
      Rational f = aug[r][col];
      for (size_t k = 0; k <= n; ++k) aug[r][k] -= f * aug[row][k];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  Vec x(n, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  // residual check (v may be outside the span)
  for (size_t i = 0; i < m; ++i) {
    Rational s(0);
    for (size_t j = 0; j < n; ++j) s += x[j] * simples[j][i];
    if (s != v[i]) return false;
  }
  *out = x;
  return true;
}

struct RawSystem {
  std::vector<Vec> simples;
  std::vector<Vec> positives;
};

RawSystem make_classical(RootFamily fam, int q) {
  RawSystem rs;
  if (fam == RootFamily::A) {
    int dim = q + 1;
    for (int i = 0; i < q; ++i)
      rs.simples.push_back(sub(unit(dim, i), unit(dim, i + 1)));
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        rs.positives.push_back(sub(unit(dim, i), unit(dim, j)));
    return rs;
  }
  int dim = q;
  for (int i = 0; i + 1 < q; ++i)
    rs.simples.push_back(sub(unit(dim, i), unit(dim, i + 1)));
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      rs.positives.push_back(sub(unit(dim, i), unit(dim, j)));
      rs.positives.push_back(add(unit(dim, i), unit(dim, j)));
    }
  switch (fam) {
    case RootFamily::B:
      rs.simples.push_back(unit(dim, q - 1));
      for (int i = 0; i < q; ++i) rs.positives.push_back(unit(dim, i));
      break;
    case RootFamily::C:
      rs.simples.push_back(scale(unit(dim, q - 1), Rational(2)));
      for (int i = 0; i < q; ++i)
        rs.positives.push_back(scale(unit(dim, i), Rational(2)));
      break;
    case RootFamily::D:
      rs.simples.push_back(add(unit(dim, q - 2), unit(dim, q - 1)));
      break;
    case RootFamily::BC:
      rs.simples.push_back(unit(dim, q - 1));
      for (int i = 0; i < q; ++i) {
        rs.positives.push_back(unit(dim, i));
        rs.positives.push_back(scale(unit(dim, i), Rational(2)));
      }
      break;
    default: break;
  }
  return rs;
}

RawSystem make_g2() {
  // Bourbaki model in the sum-zero hyperplane of R^3; alpha_1 short.
  RawSystem rs;
  Vec a1 = {Rational(1), Rational(-1), Rational(0)};
  Vec a2 = {Rational(-2), Rational(1), Rational(1)};
  rs.simples = {a1, a2};
  rs.positives = {a1, a2, add(a1, a2), add(add(a1, a1), a2),
                  add(add(add(a1, a1), a1), a2),
                  add(add(add(add(a1, a1), a1), a2), a2)};
  return rs;
}

RawSystem make_f4() {
  RawSystem rs;
  Rational h(1, 2);
  rs.simples = {Vec{Rational(0), Rational(1), Rational(-1), Rational(0)},
                Vec{Rational(0), Rational(0), Rational(1), Rational(-1)},
                Vec{Rational(0), Rational(0), Rational(0), Rational(1)},
                Vec{h, -h, -h, -h}};
  for (int i = 0; i < 4; ++i) rs.positives.push_back(unit(4, i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      rs.positives.push_back(add(unit(4, i), unit(4, j)));
      rs.positives.push_back(sub(unit(4, i), unit(4, j)));
    }
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        rs.positives.push_back(
            Vec{h, h * Rational(s1), h * Rational(s2), h * Rational(s3)});
  return rs;
}

// E6 and E7 are the subsystems of E8 spanned by the first 6 resp. 7 Bourbaki
// simple roots; their simple coefficients are the leading coefficients in E8.
RawSystem make_e(int n) {
  RawSystem rs;
  Rational h(1, 2);
  std::vector<Vec> s8;
  s8.push_back(Vec{h, -h, -h, -h, -h, -h, -h, h});
  s8.push_back(Vec{Rational(1), Rational(1), Rational(0), Rational(0),
                   Rational(0), Rational(0), Rational(0), Rational(0)});
  for (int i = 1; i <= 6; ++i) s8.push_back(sub(unit(8, i), unit(8, i - 1)));
  std::vector<Vec> all;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          all.push_back(add(scale(unit(8, i), Rational(si)),
                            scale(unit(8, j), Rational(sj))));
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Vec v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? -h : h;
    all.push_back(v);
  }
  rs.simples.assign(s8.begin(), s8.begin() + n);
  for (const auto& r : all) {
    Vec c;
    if (!solve_in_basis(s8, r, &c)) continue;
    bool pos = false, ok = true;
    for (int i = 0; i < 8; ++i) {
      if (c[i] < Rational(0)) { ok = false; break; }
      if (c[i] > Rational(0)) {
        if (i >= n) { ok = false; break; }
        pos = true;
      }
    }
    if (ok && pos) rs.positives.push_back(r);
  }
  return rs;
}

}  // namespace

RootSystem RootSystem::build(RootSystemKind kind) {
  kind.validate();
  RawSystem raw;
  switch (kind.family) {
    case RootFamily::A:
    case RootFamily::B:
    case RootFamily::C:
    case RootFamily::D:
    case RootFamily::BC: raw = make_classical(kind.family, kind.rank); break;
    case RootFamily::G2: raw = make_g2(); break;
    case RootFamily::F4: raw = make_f4(); break;
    case RootFamily::E6: raw = make_e(6); break;
    case RootFamily::E7: raw = make_e(7); break;
    case RootFamily::E8: raw = make_e(8); break;
  }

  RootSystem out;
  out.kind_ = kind;
  for (const auto& s : raw.simples) {
    Root r;
    r.ortho_coords = s;
    Vec c;
    solve_in_basis(raw.simples, s, &c);
    for (const auto& x : c) r.simple_coeffs.push_back(static_cast<int>(x.num()));
    out.simple_roots_.push_back(std::move(r));
  }
  for (const auto& p : raw.positives) {
    Root r;
    r.ortho_coords = p;
    Vec c;
    if (!solve_in_basis(raw.simples, p, &c))
      throw std::logic_error("root outside simple-root span");
    for (const auto& x : c) {
      if (!x.is_integer() || x < Rational(0))
        throw std::logic_error("non-integral or negative simple coefficient");
      r.simple_coeffs.push_back(static_cast<int>(x.num()));
    }
    out.positive_roots_.push_back(std::move(r));
  }
  std::sort(out.positive_roots_.begin(), out.positive_roots_.end(),
            [](const Root& a, const Root& b) {
              return a.simple_coeffs < b.simple_coeffs;
            });
  for (size_t i = 0; i < out.positive_roots_.size(); ++i)
    out.index_[out.positive_roots_[i].simple_coeffs] = static_cast<int>(i);
  if (static_cast<int>(out.positive_roots_.size()) !=
      expected_positive_count(kind))
    throw std::logic_error("positive root count mismatch for " + kind.str());

  int q = kind.rank;
  out.cartan_pairings_.assign(q, std::vector<Rational>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      out.cartan_pairings_[i][j] =
          dot(out.simple_roots_[i].ortho_coords, out.simple_roots_[j].ortho_coords);

  // highest root: the unique positive root dominating every other one
  for (size_t i = 0; i < out.positive_roots_.size(); ++i) {
    const auto& hi = out.positive_roots_[i].simple_coeffs;
    bool dom = true;
    for (const auto& other : out.positive_roots_) {
      for (int k = 0; k < q; ++k)
        if (hi[k] < other.simple_coeffs[k]) { dom = false; break; }
      if (!dom) break;
    }
    if (dom) { out.highest_idx_ = static_cast<int>(i); break; }
  }
  if (out.highest_idx_ < 0)
    throw std::logic_error("no dominating highest root in " + kind.str());
  return out;
}

std::vector<int> RootSystem::coefficients(const Root& r) const {
  if (static_cast<int>(r.simple_coeffs.size()) == rank() &&
      index_.count(r.simple_coeffs))
    return r.simple_coeffs;
  throw NotARootError("not a root of " + kind_.str());
}

std::vector<Rational> RootSystem::weight_decomposition(const Root& r) const {
  std::vector<Rational> out(rank());
  for (int j = 0; j < rank(); ++j) {
    Rational num(0);
    // <r, a_j> expressed through simple coefficients and cartan pairings
    for (int i = 0; i < rank(); ++i)
      num += Rational(r.simple_coeffs[i]) * cartan_pairings_[i][j];
    out[j] = Rational(2) * num / cartan_pairings_[j][j];
  }
  return out;
}

bool RootSystem::is_root(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != rank()) return false;
  std::vector<int> key(v.begin(), v.end());
  if (index_.count(key)) return true;
  for (auto& x : key) x = -x;
  return index_.count(key) > 0;
}

int RootSystem::index_of(std::span<const int> v) const {
  std::vector<int> key(v.begin(), v.end());
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::length2(const Root& r) const {
  Rational l = Rational(0);
  for (const auto& x : r.ortho_coords) l += x * x;
  if (!l.is_integer())
    throw std::logic_error("non-integral squared length");
  return static_cast<int>(l.num());
}

std::vector<int> RootSystem::distinct_lengths2() const {
  std::vector<int> out;
  for (const auto& r : positive_roots_) {
    int l = length2(r);
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string RootSystem::debug_dump() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& r : positive_roots_) {
    if (!first) os << ",";
    first = false;
    os << "{\"simple_coeffs\":[";
    for (size_t i = 0; i < r.simple_coeffs.size(); ++i)
      os << (i ? "," : "") << r.simple_coeffs[i];
    os << "],\"ortho_coords\":[";
    for (size_t i = 0; i < r.ortho_coords.size(); ++i)
      os << (i ? "," : "") << '"' << r.ortho_coords[i].str() << '"';
    os << "]}";
  }
  os << "]";
  return os.str();
}

std::shared_ptr<const RootSystem> get_root_system(RootSystemKind kind) {
  static std::mutex mu;
  static std::map<RootSystemKind, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(kind);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(kind));
  cache.emplace(kind, rs);
  return rs;
}

}  // namespace almostsym
