#include <algorithm>
#include <sstream>

#include "almostsym/classifier.hpp"

namespace almostsym {

namespace {

ordered_json support_json(const Marking& m) { return ordered_json(m.support); }

ordered_json character_json(const SignCharacter& c) {
  std::vector<int> v(c.c.begin(), c.c.end());
  return ordered_json(v);
}

}  // namespace

ordered_json finding_json(const Finding& f) {
  ordered_json j;
  j["space"] = f.space;
  j["support"] = support_json(f.marking);
  j["c"] = character_json(f.character);
  j["class"] = finding_class_name(f.cls);
  j["certification"] = certification_name(f.certification);
  j["fixed_tangent_dim"] = f.fixed_tangent_dim;
  j["orbit_dim"] = f.orbit_dim;
  return j;
}

ordered_json orbit_json(const SymmetricSpace& space, const Marking& marking) {
  auto g = orbit_geometry(space, marking);
  ordered_json j;
  j["space"] = space.label();
  j["support"] = support_json(marking);
  j["tangent_dim"] = g.tangent_dim;
  j["codim"] = g.normal_dim_in_ambient;
  j["kind"] = orbit_kind_name(g.kind);
  j["symmetric"] = is_extrinsically_symmetric(space, marking);
  return j;
}

ordered_json catalog_json(const std::vector<SymmetricSpace>& spaces) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : spaces) {
    ordered_json j;
    j["label"] = s.label();
    j["family"] = family_name(s.restricted().family);
    j["rank"] = s.rank();
    ordered_json mults = ordered_json::object();
    for (auto [len2, m] : s.mults().by_len2)
      mults[std::to_string(len2)] = m;
    j["mults"] = mults;
    ordered_json flags = ordered_json::object();
    flags["maximal_rank"] = s.flags().maximal_rank;
    flags["group_case"] = s.flags().group_case;
    flags["splitting_rank"] = s.flags().splitting_rank;
    flags["hermitian"] = s.flags().hermitian;
    j["flags"] = flags;
    j["known_dim"] = s.known_dim();
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : s.parameters()) params[k] = v;
    j["parameters"] = params;
    arr.push_back(j);
  }
  return arr;
}

ordered_json report_json(const std::vector<SymmetricSpace>& spaces,
                         const std::vector<Verdict>& verdicts) {
  ordered_json j;
  j["schema_version"] = 1;
  ordered_json arr = ordered_json::array();
  for (size_t i = 0; i < spaces.size(); ++i) {
    const auto& s = spaces[i];
    const auto& v = verdicts[i];
    ordered_json e;
    e["label"] = s.label();
    ordered_json params = ordered_json::object();
    for (const auto& [k, val] : s.parameters()) params[k] = val;
    e["parameters"] = params;
    ordered_json verdict;
    ordered_json findings = ordered_json::array();
    for (const auto& f : v.findings) findings.push_back(finding_json(f));
    verdict["findings"] = findings;
    ordered_json sym = ordered_json::array();
    for (const auto& m : v.symmetric_markings) sym.push_back(support_json(m));
    verdict["symmetric_markings"] = sym;
    ordered_json excl = ordered_json::array();
    for (const auto& ex : v.exclusions) {
      ordered_json x;
      x["support"] = support_json(ex.marking);
      x["reason"] = ex.reason;
      excl.push_back(x);
    }
    verdict["exclusions"] = excl;
    verdict["inner_only"] = v.inner_only;
    e["verdict"] = verdict;
    arr.push_back(e);
  }
  j["spaces"] = arr;
  return j;
}

ordered_json diff_json(const DiffReport& diff) {
  ordered_json j;
  j["schema_version"] = 1;
  j["clean"] = diff.empty();
  auto items = [](const std::vector<DiffItem>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : v) {
      ordered_json x;
      x["label"] = d.label;
      x["support"] = ordered_json(d.marking.support);
      x["expected"] = d.expected;
      x["actual"] = d.actual;
      x["anchor"] = d.anchor;
      arr.push_back(x);
    }
    return arr;
  };
  j["missing"] = items(diff.missing);
  j["extra"] = items(diff.extra);
  j["count_mismatch"] = items(diff.mismatched);
  j["confirmed_positive"] = diff.confirmed_positive;
  j["confirmed_empty"] = diff.confirmed_empty;
  return j;
}

std::string diff_text(const DiffReport& diff) {
  std::ostringstream os;
  if (diff.empty()) {
    os << "verify: clean (" << diff.confirmed_positive
       << " positive markings confirmed, " << diff.confirmed_empty
       << " spaces confirmed without almost symmetries)\n";
    return os.str();
  }
  for (const auto& d : diff.missing)
    os << "missing: " << d.label << " " << d.marking.str() << " expected "
       << d.expected << " [" << d.anchor << "]\n";
  for (const auto& d : diff.extra)
    os << "extra: " << d.label << " " << d.marking.str() << " found "
       << d.actual << " (none expected)\n";
  for (const auto& d : diff.mismatched)
    os << "count mismatch: " << d.label << " " << d.marking.str()
       << " expected " << d.expected << " found " << d.actual << " ["
       << d.anchor << "]\n";
  return os.str();
}

namespace {

struct TableRow {
  int nr;  // 0 when the finding has no row in the reference table
  std::string label, g, k, support, character, annotation;
};

std::vector<TableRow> table_a_rows(const std::vector<SymmetricSpace>& spaces,
                                   const std::vector<Verdict>& verdicts) {
  std::vector<TableRow> rows;
  for (size_t i = 0; i < spaces.size(); ++i) {
    const auto& s = spaces[i];
    for (const auto& f : verdicts[i].findings) {
      if (f.cls != FindingClass::almost_symmetry) continue;
      TableRow r;
      r.label = s.label();
      r.g = s.g_name();
      r.k = s.k_name();
      r.support = f.marking.str();
      r.character = f.character.str();
      const std::string& L = s.label();
      if (L.starts_with("CI(")) {
        if (f.marking.support.size() == 1) r.nr = 1;
        else { r.nr = 8; r.annotation = "via sp(2) = so(5)"; }
      } else if (L == "G") {
        r.nr = 2;
        if (f.marking.support[0] == 1)
          r.annotation = "second G2 orbit; congruence with the row-2 orbit undecided";
      } else if (L == "FI") r.nr = 3;
      else if (L == "EI") r.nr = 4;
      else if (L == "EV") r.nr = 5;
      else if (L == "EVIII") r.nr = 6;
      else if (L.starts_with("AI(")) r.nr = 7;
      else if (L.starts_with("BDI(")) {
        int p = s.parameters().at("p"), q = s.parameters().at("q");
        if (p == 3 && q == 2 && f.marking.support.size() == 2) r.nr = 8;
        else if (p == q && q == 3) { r.nr = 7; r.annotation = "via so(6) = su(4)"; }
        else r.nr = 12;
      } else if (L.starts_with("AIII(")) r.nr = 9;
      else if (L == "EVII") r.nr = 10;
      else if (L == "EIII") r.nr = 11;
      else if (L == "EII") r.nr = 13;
      else if (L == "EVI") r.nr = 14;
      else if (L == "EIX") r.nr = 15;
      else if (L.starts_with("DIII(")) {
        r.nr = 0;
        r.annotation = "no matching reference-table row";
      }
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace

std::string emit_table_a(const std::vector<SymmetricSpace>& spaces,
                         const std::vector<Verdict>& verdicts,
                         const std::string& format) {
  auto rows = table_a_rows(spaces, verdicts);
  if (format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json x;
      if (r.nr > 0) x["nr"] = r.nr; else x["nr"] = nullptr;
      x["label"] = r.label;
      x["g"] = r.g;
      x["k"] = r.k;
      x["support"] = r.support;
      x["c"] = r.character;
      x["annotation"] = r.annotation;
      arr.push_back(x);
    }
    j["rows"] = arr;
    return j.dump(2) + "\n";
  }
  if (format == "md") {
    std::ostringstream os;
    os << "| Nr | space | g | k | marking | character | notes |\n";
    os << "|----|-------|---|---|---------|-----------|-------|\n";
    for (const auto& r : rows) {
      os << "| " << (r.nr > 0 ? std::to_string(r.nr) : std::string("-"))
         << " | " << r.label << " | " << r.g << " | " << r.k << " | "
         << r.support << " | " << r.character << " | " << r.annotation << " |\n";
    }
    return os.str();
  }
  throw std::invalid_argument("unsupported table format: " + format);
}

}  // namespace almostsym
