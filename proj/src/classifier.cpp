#include "almostsym/classifier.hpp"

#include <algorithm>
#include <map>

namespace almostsym {

bool operator==(const Finding& a, const Finding& b) {
  return a.space == b.space && a.marking == b.marking &&
         a.character == b.character && a.cls == b.cls &&
         a.certification == b.certification &&
         a.fixed_tangent_dim == b.fixed_tangent_dim &&
         a.neg_mult_total == b.neg_mult_total && a.orbit_dim == b.orbit_dim;
}

bool operator==(const Exclusion& a, const Exclusion& b) {
  return a.marking == b.marking && a.reason == b.reason;
}

namespace {

// no tangent length class of multiplicity one: a diagonal almost symmetry
// needs a fixed class of total dimension exactly 1
bool has_unit_tangent_class(const SymmetricSpace& space, const Marking& marking) {
  const auto& pos = space.roots().positive_roots();
  for (size_t i = 0; i < pos.size(); ++i) {
    bool tangent = false;
    for (int node : marking.support)
      if (pos[i].simple_coeffs[node - 1] > 0) { tangent = true; break; }
    if (tangent && space.mult(static_cast<int>(i)) == 1) return true;
  }
  return false;
}

}  // namespace

Verdict classify_space(const SymmetricSpace& space) {
  Verdict v;
  v.label = space.label();
  v.inner_only = inner_only(space);
  std::uint32_t all = (1u << space.rank()) - 1;
  for (std::uint32_t sm = 1; sm <= all; ++sm) {
    Marking marking = Marking::from_mask(sm);
    ++v.markings_swept;
    auto findings = torus_search(space, marking);
    bool any_finding = !findings.empty();
    for (auto& f : findings) {
      if (f.cls == FindingClass::symmetry &&
          f.certification == Certification::canonical_certified)
        v.symmetric_markings.push_back(marking);
      v.findings.push_back(std::move(f));
    }
    if (!any_finding && marking.support.size() <= 2) {
      Exclusion ex;
      ex.marking = marking;
      if (space.mults().all_even())
        ex.reason = "splitting_rank";
      else if (!has_unit_tangent_class(space, marking))
        ex.reason = "no_unit_multiplicity_class";
      else
        ex.reason = "none_found";
      v.exclusions.push_back(std::move(ex));
    }
  }
  auto marking_key = [](const Marking& m) { return m.support; };
  std::sort(v.findings.begin(), v.findings.end(),
            [&](const Finding& a, const Finding& b) {
              if (marking_key(a.marking) != marking_key(b.marking))
                return marking_key(a.marking) < marking_key(b.marking);
              return a.character.c < b.character.c;
            });
  std::sort(v.symmetric_markings.begin(), v.symmetric_markings.end(),
            [&](const Marking& a, const Marking& b) {
              return a.support < b.support;
            });
  std::sort(v.exclusions.begin(), v.exclusions.end(),
            [&](const Exclusion& a, const Exclusion& b) {
              return a.marking.support < b.marking.support;
            });
  return v;
}

DiffReport verify_against_expected(const std::vector<SymmetricSpace>& spaces,
                                   const std::vector<Verdict>& verdicts) {
  ExpectedFindings expected = expected_findings(spaces);
  std::map<std::pair<std::string, std::vector<int>>, std::pair<int, std::string>> want;
  for (const auto& e : expected.positives)
    want[{e.label, e.marking.support}] = {e.count, e.anchor};

  DiffReport diff;
  for (const auto& v : verdicts) {
    std::map<std::vector<int>, int> got;
    for (const auto& f : v.findings)
      if (f.cls == FindingClass::almost_symmetry) ++got[f.marking.support];
    // findings present: expected?
    bool any = false;
    for (const auto& [supp, count] : got) {
      any = true;
      auto it = want.find({v.label, supp});
      if (it == want.end()) {
        diff.extra.push_back({v.label, Marking{supp}, 0, count, ""});
      } else if (it->second.first != count) {
        diff.mismatched.push_back(
            {v.label, Marking{supp}, it->second.first, count, it->second.second});
      } else {
        ++diff.confirmed_positive;
      }
    }
    if (!any) ++diff.confirmed_empty;
    // expected entries for this space: present?
    for (const auto& e : expected.positives) {
      if (e.label != v.label) continue;
      if (!got.count(e.marking.support))
        diff.missing.push_back({e.label, e.marking, e.count, 0, e.anchor});
    }
  }
  return diff;
}

std::vector<Verdict> sweep_catalog_serial(const std::vector<SymmetricSpace>& spaces);
std::vector<Verdict> sweep_catalog_parallel(const std::vector<SymmetricSpace>& spaces);

std::vector<Verdict> sweep_catalog(const std::vector<SymmetricSpace>& spaces,
                                   SweepMode mode) {
  return mode == SweepMode::serial ? sweep_catalog_serial(spaces)
                                   : sweep_catalog_parallel(spaces);
}

std::vector<TableBRow> verify_table_b() {
  // orbit dim = dim of the group minus dim of a principal isotropy group,
  // ambient dim from the representation space; the claim is codimension 3
  std::vector<TableBRow> rows;
  auto dim_so = [](int n) { return n * (n - 1) / 2; };
  bool stiefel_ok = true;
  for (int n = 3; n <= 12; ++n)
    stiefel_ok = stiefel_ok && (dim_so(n) - dim_so(n - 2) == 2 * n - 3);
  rows.push_back({16, "V_2(R^n), n>=3", "(SO(n), R^n+R^n)",
                  dim_so(3) - dim_so(1), 2 * 3,
                  stiefel_ok && dim_so(3) - dim_so(1) == 2 * 3 - 3});
  rows.push_back({17, "U(2)", "(U(2), C^2+R^3)", 4, 2 * 2 + 3, 4 == (2 * 2 + 3) - 3});
  rows.push_back({18, "T^2 x S^3", "(U(1)xSU(2)xU(1), C^2+C^2)", 1 + 3 + 1,
                  2 * 2 + 2 * 2, 1 + 3 + 1 == (2 * 2 + 2 * 2) - 3});
  return rows;
}

}  // namespace almostsym
