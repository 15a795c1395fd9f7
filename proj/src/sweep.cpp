#include <bit>
#include <cstdint>

#include "almostsym/classifier.hpp"

#ifdef ALMOSTSYM_HAVE_OPENMP
#include <omp.h>
#endif

namespace almostsym {

// The catalog sweep is a dense grid of independent (marking, character)
// cells per space. The kernels below walk that grid over packed root data;
// the serial walker is the reference implementation, the OpenMP walker
// distributes (space, marking) tasks and must produce bit-identical results.

namespace {

struct PackedSpace {
  int rank = 0;
  std::vector<std::uint32_t> nonzero_mask;  // per positive root
  std::vector<std::uint32_t> odd_mask;
  std::vector<int> mult;

  explicit PackedSpace(const SymmetricSpace& s) : rank(s.rank()) {
    const auto& pos = s.roots().positive_roots();
    for (size_t i = 0; i < pos.size(); ++i) {
      std::uint32_t nz = 0, od = 0;
      for (int k = 0; k < rank; ++k) {
        if (pos[i].simple_coeffs[k] > 0) nz |= 1u << k;
        if (pos[i].simple_coeffs[k] % 2) od |= 1u << k;
      }
      nonzero_mask.push_back(nz);
      odd_mask.push_back(od);
      mult.push_back(s.mult(static_cast<int>(i)));
    }
  }
};

struct CellResult {
  std::uint32_t character;
  int fixed;
  int neg;
};

struct MarkingResult {
  std::uint32_t marking;
  int tangent_dim;
  std::vector<CellResult> kept;  // candidates with normal identity and a
                                 // nontrivial tangent action
};

MarkingResult sweep_marking(const PackedSpace& ps, std::uint32_t supp) {
  MarkingResult out;
  out.marking = supp;
  out.tangent_dim = 0;
  const size_t n = ps.mult.size();
  for (size_t i = 0; i < n; ++i)
    if (ps.nonzero_mask[i] & supp) out.tangent_dim += ps.mult[i];
  const std::uint32_t all = (1u << ps.rank) - 1;
  for (std::uint32_t cm = 1; cm <= all; ++cm) {
    int fixed = 0, neg = 0;
    bool normal_ok = true, nontrivial = false;
    for (size_t i = 0; i < n; ++i) {
      bool tangent = (ps.nonzero_mask[i] & supp) != 0;
      bool minus = std::popcount(ps.odd_mask[i] & cm) & 1;
      if (minus) neg += ps.mult[i];
      if (tangent) {
        if (minus) nontrivial = true;
        else fixed += ps.mult[i];
      } else if (minus) {
        normal_ok = false;
        break;
      }
    }
    if (!normal_ok || !nontrivial) continue;
    bool canonical = cm == supp;
    if (!canonical && neg % 2 == 1) continue;  // orientation filter
    if (fixed <= 1) out.kept.push_back({cm, fixed, neg});
  }
  return out;
}

// Assemble a Verdict from per-marking kernel results. Mirrors
// classify_space(): the kernel only reproduces its inner loop.
Verdict assemble(const SymmetricSpace& space, std::vector<MarkingResult> results) {
  Verdict v;
  v.label = space.label();
  v.inner_only = inner_only(space);
  for (auto& mr : results) {
    ++v.markings_swept;
    Marking marking = Marking::from_mask(mr.marking);
    bool any = !mr.kept.empty();
    for (auto& cell : mr.kept) {
      Finding f;
      f.space = space.label();
      f.marking = marking;
      f.character = SignCharacter::from_mask(cell.character, space.rank());
      f.cls = cell.fixed == 0 ? FindingClass::symmetry
                              : FindingClass::almost_symmetry;
      f.certification = cell.character == mr.marking
                            ? Certification::canonical_certified
                            : Certification::torus_candidate;
      f.fixed_tangent_dim = cell.fixed;
      f.neg_mult_total = cell.neg;
      f.orbit_dim = mr.tangent_dim;
      if (f.cls == FindingClass::symmetry &&
          f.certification == Certification::canonical_certified)
        v.symmetric_markings.push_back(marking);
      v.findings.push_back(std::move(f));
    }
    if (!any && marking.support.size() <= 2) {
      Exclusion ex;
      ex.marking = marking;
      if (space.mults().all_even()) {
        ex.reason = "splitting_rank";
      } else {
        bool unit = false;
        const auto& pos = space.roots().positive_roots();
        for (size_t i = 0; i < pos.size() && !unit; ++i) {
          if (space.mult(static_cast<int>(i)) != 1) continue;
          for (int node : marking.support)
            if (pos[i].simple_coeffs[node - 1] > 0) { unit = true; break; }
        }
        ex.reason = unit ? "none_found" : "no_unit_multiplicity_class";
      }
      v.exclusions.push_back(std::move(ex));
    }
  }
  std::sort(v.findings.begin(), v.findings.end(),
            [](const Finding& a, const Finding& b) {
              if (a.marking.support != b.marking.support)
                return a.marking.support < b.marking.support;
              return a.character.c < b.character.c;
            });
  std::sort(v.symmetric_markings.begin(), v.symmetric_markings.end(),
            [](const Marking& a, const Marking& b) { return a.support < b.support; });
  std::sort(v.exclusions.begin(), v.exclusions.end(),
            [](const Exclusion& a, const Exclusion& b) {
              return a.marking.support < b.marking.support;
            });
  return v;
}

}  // namespace

std::vector<Verdict> sweep_catalog_serial(const std::vector<SymmetricSpace>& spaces) {
  std::vector<Verdict> out;
  out.reserve(spaces.size());
  for (const auto& s : spaces) {
    PackedSpace ps(s);
    std::vector<MarkingResult> results;
    const std::uint32_t all = (1u << s.rank()) - 1;
    for (std::uint32_t sm = 1; sm <= all; ++sm)
      results.push_back(sweep_marking(ps, sm));
    out.push_back(assemble(s, std::move(results)));
  }
  return out;
}

std::vector<Verdict> sweep_catalog_parallel(const std::vector<SymmetricSpace>& spaces) {
  struct Task {
    int space;
    std::uint32_t marking;
  };
  std::vector<Task> tasks;
  std::vector<PackedSpace> packed;
  packed.reserve(spaces.size());
  std::vector<size_t> first_task(spaces.size() + 1);
  for (size_t si = 0; si < spaces.size(); ++si) {
    packed.emplace_back(spaces[si]);
    first_task[si] = tasks.size();
    const std::uint32_t all = (1u << spaces[si].rank()) - 1;
    for (std::uint32_t sm = 1; sm <= all; ++sm)
      tasks.push_back({static_cast<int>(si), sm});
  }
  first_task[spaces.size()] = tasks.size();

  std::vector<MarkingResult> cells(tasks.size());
#ifdef ALMOSTSYM_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long t = 0; t < static_cast<long>(tasks.size()); ++t)
    cells[t] = sweep_marking(packed[tasks[t].space], tasks[t].marking);

  // order-imposing assembly, single-threaded
  std::vector<Verdict> out;
  out.reserve(spaces.size());
  for (size_t si = 0; si < spaces.size(); ++si) {
    std::vector<MarkingResult> results(cells.begin() + first_task[si],
                                       cells.begin() + first_task[si + 1]);
    out.push_back(assemble(spaces[si], std::move(results)));
  }
  return out;
}

}  // namespace almostsym
