#pragma once

#include <optional>
#include <string>
#include <vector>

#include "almostsym/involutions.hpp"

#include "json.hpp"

namespace almostsym {

using ordered_json = nlohmann::ordered_json;

// Per-marking exclusion annotation. A marking that carries a finding never
// carries an exclusion.
struct Exclusion {
  Marking marking;
  std::string reason;  // splitting_rank | no_unit_multiplicity_class |
                       // orientation | none_found
};

struct Verdict {
  std::string label;
  std::vector<Finding> findings;            // sorted: support lex, then c lex
  std::vector<Marking> symmetric_markings;  // markings whose canonical
                                            // involution is a symmetry
  std::vector<Exclusion> exclusions;        // for markings of support <= 2
  bool inner_only = false;
  int markings_swept = 0;                   // must equal 2^rank - 1

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

bool operator==(const Finding& a, const Finding& b);
bool operator==(const Exclusion& a, const Exclusion& b);

// Full sweep of one space: every non-empty marking, every character.
Verdict classify_space(const SymmetricSpace& space);

enum class SweepMode { serial, parallel };

// Catalog-wide sweep. The parallel path distributes (space, marking) cells
// over OpenMP threads and assembles results in a fixed order afterwards, so
// both modes produce identical verdicts.
std::vector<Verdict> sweep_catalog(const std::vector<SymmetricSpace>& spaces,
                                   SweepMode mode);

// ----- expected findings (the reference classification) -----

struct ExpectedEntry {
  std::string label;
  Marking marking;
  int count;           // expected number of almost-symmetry characters
  std::string anchor;  // which case of the reference classification
};

// Families asserted to have no almost-symmetric orbit at all, with reason.
struct ExpectedEmpty {
  std::string label;
  std::string anchor;
};

struct ExpectedFindings {
  std::vector<ExpectedEntry> positives;
  std::vector<ExpectedEmpty> empties;
};

// The reference classification instantiated over a concrete catalog.
ExpectedFindings expected_findings(const std::vector<SymmetricSpace>& spaces);

struct DiffItem {
  std::string label;
  Marking marking;
  int expected = 0;
  int actual = 0;
  std::string anchor;
};

struct DiffReport {
  std::vector<DiffItem> missing;     // expected > 0, fewer found
  std::vector<DiffItem> extra;       // found where none expected
  std::vector<DiffItem> mismatched;  // both nonzero, counts differ
  int confirmed_positive = 0;
  int confirmed_empty = 0;
  bool empty() const { return missing.empty() && extra.empty() && mismatched.empty(); }
};

DiffReport verify_against_expected(const std::vector<SymmetricSpace>& spaces,
                                   const std::vector<Verdict>& verdicts);

// ----- reports -----

// {schema_version: 1, spaces: [{label, parameters, verdict: {...}}]}
ordered_json report_json(const std::vector<SymmetricSpace>& spaces,
                         const std::vector<Verdict>& verdicts);

ordered_json catalog_json(const std::vector<SymmetricSpace>& spaces);

ordered_json orbit_json(const SymmetricSpace& space, const Marking& marking);

ordered_json finding_json(const Finding& f);

ordered_json diff_json(const DiffReport& diff);
std::string diff_text(const DiffReport& diff);

// Classification table: one row per finding, mapped to the reference table
// rows on a best-effort labeled basis. Formats: "json", "md".
std::string emit_table_a(const std::vector<SymmetricSpace>& spaces,
                         const std::vector<Verdict>& verdicts,
                         const std::string& format);

// The three reducible cohomogeneity-three representations whose principal
// orbits are almost symmetric: checks orbit dim = ambient dim - 3 per row.
struct TableBRow {
  int nr;
  std::string orbit;
  std::string representation;
  int orbit_dim;
  int ambient_dim;
  bool pass;
};
std::vector<TableBRow> verify_table_b();

}  // namespace almostsym
