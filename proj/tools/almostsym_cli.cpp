// Command-line interface for the catalog, the orbit/involution queries, the
// catalog-wide classification sweep, and the verification against the
// reference classification.
//
// Exit codes: 0 on success and on a clean verify, 1 when verify reports a
// diff, 2 on usage errors.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "almostsym/classifier.hpp"

#ifdef ALMOSTSYM_HAVE_OPENMP
#include <omp.h>
#endif

using namespace almostsym;

namespace {

Marking parse_support(const std::string& text) {
  Marking m;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) m.support.push_back(std::stoi(cur));
      cur.clear();
    } else if (ch != ' ' && ch != '{' && ch != '}') {
      cur += ch;
    }
  }
  std::sort(m.support.begin(), m.support.end());
  return m;
}

const SymmetricSpace* find_space(const std::vector<SymmetricSpace>& spaces,
                                 const std::string& label) {
  for (const auto& s : spaces)
    if (s.label() == label) return &s;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification of almost-symmetric isotropy orbits"};
  app.require_subcommand(1);

  int max_rank = 8;
  int jobs = 0;
  bool serial = false;
  std::string format = "json";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-rank", max_rank, "largest restricted rank (default 8)");
    cmd->add_option("--jobs", jobs, "OpenMP thread count (0 = default)");
    cmd->add_flag("--serial", serial, "use the serial reference sweep");
  };

  auto* list = app.add_subcommand("list", "dump the catalog");
  list->alias("catalog");
  list->add_option("--format", format, "json");
  list->add_option("--max-rank", max_rank, "largest restricted rank (default 8)");

  std::string roots_family;
  int roots_rank = 0;
  auto* roots = app.add_subcommand("roots", "dump a root system");
  roots->add_option("family", roots_family, "A B C D BC E6 E7 E8 F4 G2")->required();
  roots->add_option("rank", roots_rank, "rank")->required();

  std::string orbit_space, orbit_support;
  auto* orbit = app.add_subcommand("orbit", "orbit geometry of one marking");
  orbit->add_option("space", orbit_space, "catalog label, e.g. EIII")->required();
  orbit->add_option("support", orbit_support, "marked nodes, e.g. 1,2")->required();
  orbit->add_option("--max-rank", max_rank, "largest restricted rank (default 8)");

  std::string classify_space_label;
  auto* classify = app.add_subcommand("classify", "sweep the catalog");
  classify->add_option("--space", classify_space_label, "restrict to one label");
  add_common(classify);

  auto* verify = app.add_subcommand("verify", "diff the sweep against the reference classification");
  add_common(verify);
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text or json");

  auto* tableb = app.add_subcommand("verify-table-b", "codimension-3 arithmetic of the three non-s-orbit rows");

  std::string emit_table = "a";
  auto* emit = app.add_subcommand("emit", "render the classification table");
  emit->add_option("--table", emit_table, "a")->required();
  emit->add_option("--format", format, "json or md");
  add_common(emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
#ifdef ALMOSTSYM_HAVE_OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif
    SweepMode mode = serial ? SweepMode::serial : SweepMode::parallel;

    if (*list) {
      if (format != "json") {
        std::cerr << "unsupported format: " << format << "\n";
        return 2;
      }
      std::cout << catalog_json(catalog(max_rank)).dump(2) << "\n";
      return 0;
    }
    if (*roots) {
      RootSystemKind kind{family_from_name(roots_family), roots_rank};
      auto rs = get_root_system(kind);
      std::cout << rs->debug_dump() << "\n";
      return 0;
    }
    if (*orbit) {
      auto spaces = catalog(max_rank);
      const auto* s = find_space(spaces, orbit_space);
      if (!s) {
        std::cerr << "no catalog entry labeled " << orbit_space << "\n";
        return 2;
      }
      std::cout << orbit_json(*s, parse_support(orbit_support)).dump(2) << "\n";
      return 0;
    }
    if (*classify) {
      auto spaces = catalog(max_rank);
      if (!classify_space_label.empty()) {
        const auto* s = find_space(spaces, classify_space_label);
        if (!s) {
          std::cerr << "no catalog entry labeled " << classify_space_label << "\n";
          return 2;
        }
        std::vector<SymmetricSpace> one = {*s};
        std::cout << report_json(one, sweep_catalog(one, mode)).dump(2) << "\n";
        return 0;
      }
      std::cout << report_json(spaces, sweep_catalog(spaces, mode)).dump(2) << "\n";
      return 0;
    }
    if (*verify) {
      auto spaces = catalog(max_rank);
      auto verdicts = sweep_catalog(spaces, mode);
      auto diff = verify_against_expected(spaces, verdicts);
      if (verify_format == "json")
        std::cout << diff_json(diff).dump(2) << "\n";
      else
        std::cout << diff_text(diff);
      return diff.empty() ? 0 : 1;
    }
    if (*tableb) {
      bool all = true;
      for (const auto& r : verify_table_b()) {
        all = all && r.pass;
        std::cout << "row " << r.nr << " " << r.orbit << ": orbit dim "
                  << r.orbit_dim << " = " << r.ambient_dim << " - 3 "
                  << (r.pass ? "ok" : "FAIL") << "\n";
      }
      return all ? 0 : 1;
    }
    if (*emit) {
      if (emit_table != "a") {
        std::cerr << "unsupported table: " << emit_table << "\n";
        return 2;
      }
      auto spaces = catalog(max_rank);
      std::cout << emit_table_a(spaces, sweep_catalog(spaces, mode), format);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
