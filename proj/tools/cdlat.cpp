#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdlat/analysis.hpp"
#include "cdlat/catalog.hpp"
#include "cdlat/classify.hpp"
#include "cdlat/config.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/presentation.hpp"
#include "cdlat/report.hpp"
#include "cdlat/verify.hpp"

namespace {

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw cdlat::UsageError("cannot write '" + output_path + "'");
  out << text;
  if (!out) throw cdlat::UsageError("failed writing '" + output_path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cdlat::UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<cdlat::Group> load_corpus(const std::string& catalog_path,
                                      int max_order, bool filter_catalog,
                                      std::string& description) {
  if (catalog_path.empty()) {
    description = "builtin corpus up to order " + std::to_string(max_order);
    return cdlat::builtin_corpus(max_order);
  }
  std::vector<cdlat::Group> groups = cdlat::load_catalog(catalog_path);
  if (filter_catalog) {
    std::erase_if(groups, [max_order](const cdlat::Group& g) {
      return g.order() > max_order;
    });
    description = "catalog '" + catalog_path + "' up to order " +
                  std::to_string(max_order) + " (" +
                  std::to_string(groups.size()) + " groups)";
  } else {
    description = "catalog '" + catalog_path + "' (" +
                  std::to_string(groups.size()) + " groups)";
  }
  return groups;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite-group engine: constructions, subgroup lattices, centralizer "
      "measures, two-value classification, and corpus-level checks"};
  app.require_subcommand(1);

  int order_cap = cdlat::limits::order_cap();
  int subgroup_cap = cdlat::limits::subgroup_cap();
  int max_cosets = cdlat::limits::default_max_cosets();
  app.add_option("--order-cap", order_cap, "largest allowed group order");
  app.add_option("--subgroup-cap", subgroup_cap,
                 "largest allowed subgroup count");
  app.add_option("--max-cosets", max_cosets,
                 "coset limit for presentation enumeration");

  // construct
  auto* construct = app.add_subcommand(
      "construct", "build a group from a named family: " +
                       cdlat::FamilySpec::help());
  std::string family;
  std::vector<std::string> params;
  std::string construct_out;
  construct->add_option("family", family, "family name")->required();
  construct->add_option("params", params, "family parameters");
  construct->add_option("-o,--output", construct_out,
                        "write the group as a one-entry catalog file");

  // present
  auto* present = app.add_subcommand(
      "present", "build groups from a presentation file (either one bare "
                 "presentation or '# name' blocks)");
  std::string pres_path;
  std::string present_out;
  present->add_option("file", pres_path, "presentation file")->required();
  present->add_option("-o,--output", present_out,
                      "write the groups as a catalog file");

  // subgroups
  auto* subgroups = app.add_subcommand(
      "subgroups", "enumerate the subgroup lattice of a group file");
  std::string subgroups_group;
  std::string subgroups_out;
  bool subgroups_dot = false;
  subgroups->add_option("group", subgroups_group, "one-entry catalog file")
      ->required();
  subgroups->add_flag("--dot", subgroups_dot, "emit the Hasse diagram as DOT");
  subgroups->add_option("-o,--output", subgroups_out, "write output here");

  // cd
  auto* cd = app.add_subcommand(
      "cd", "measure map, its image, and the maximal-measure sublattice");
  std::string cd_group;
  std::string cd_out;
  bool cd_as_json = false, cd_as_dot = false;
  cd->add_option("group", cd_group, "one-entry catalog file")->required();
  cd->add_flag("--json", cd_as_json, "emit JSON");
  cd->add_flag("--dot", cd_as_dot, "emit the highlighted Hasse diagram");
  cd->add_option("-o,--output", cd_out, "write output here");

  // classify
  auto* classify = app.add_subcommand(
      "classify", "structural flags and two-value membership for a group "
                  "file");
  std::string classify_group;
  std::string classify_out;
  bool classify_as_json = false;
  classify->add_option("group", classify_group, "one-entry catalog file")
      ->required();
  classify->add_flag("--json", classify_as_json, "emit JSON");
  classify->add_option("-o,--output", classify_out, "write output here");

  // verify
  std::string check_ids_help = [] {
    std::string s;
    for (cdlat::CheckId id : cdlat::all_check_ids()) {
      if (!s.empty()) s += ", ";
      s += cdlat::check_id_name(id);
    }
    return s;
  }();
  auto* verify = app.add_subcommand(
      "verify", "run one corpus-level check; ids: " + check_ids_help);
  std::string verify_id;
  std::string verify_catalog;
  int verify_max_order = 128;
  int verify_jobs = 1;
  bool verify_as_json = false;
  std::string verify_out;
  verify->add_option("id", verify_id, "check id")->required();
  verify->add_option("--catalog", verify_catalog,
                     "verify a catalog file instead of the builtin corpus");
  auto* verify_max_opt = verify->add_option(
      "--max-order", verify_max_order, "corpus order bound (default 128)");
  verify->add_option("--jobs", verify_jobs, "worker threads for analysis");
  verify->add_flag("--json", verify_as_json, "emit JSON");
  verify->add_option("-o,--output", verify_out, "write output here");

  // search
  auto* search = app.add_subcommand(
      "search", "list every two-value group in the corpus by (p, n)");
  std::string search_catalog;
  int search_max_order = 128;
  int search_jobs = 1;
  std::optional<int> search_p, search_n;
  std::string search_out;
  search->add_option("--catalog", search_catalog,
                     "search a catalog file instead of the builtin corpus");
  auto* search_max_opt = search->add_option(
      "--max-order", search_max_order, "corpus order bound (default 128)");
  search->add_option("-p", search_p, "restrict to prime p");
  search->add_option("-n", search_n, "restrict to exponent n");
  search->add_option("--jobs", search_jobs, "worker threads for analysis");
  search->add_option("-o,--output", search_out, "write output here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cdlat::limits::set_order_cap(order_cap);
    cdlat::limits::set_subgroup_cap(subgroup_cap);
    cdlat::limits::set_default_max_cosets(max_cosets);

    if (construct->parsed()) {
      cdlat::Group g = cdlat::FamilySpec{family, params}.build();
      std::cout << g.label() << ": order " << g.order() << "\n";
      if (!construct_out.empty()) cdlat::write_group_file(g, construct_out);
      return 0;
    }

    if (present->parsed()) {
      const std::string text = read_file(pres_path);
      std::vector<cdlat::Presentation> blocks;
      if (text.find('#') != std::string::npos) {
        blocks = cdlat::parse_presentation_file(text);
      } else {
        cdlat::Presentation p = cdlat::parse_presentation(text);
        if (p.name.empty())
          p.name = std::filesystem::path(pres_path).stem().string();
        blocks.push_back(std::move(p));
      }
      std::ostringstream catalog;
      for (const cdlat::Presentation& p : blocks) {
        cdlat::Group g = cdlat::enumerate(p).group;
        std::cout << g.label() << ": order " << g.order() << "\n";
        catalog << cdlat::group_entry_json(g) << "\n";
      }
      if (!present_out.empty()) emit(catalog.str(), present_out);
      return 0;
    }

    if (subgroups->parsed()) {
      cdlat::Analysis a =
          cdlat::Analysis::of(cdlat::load_group_file(subgroups_group));
      emit(subgroups_dot ? cdlat::lattice_dot(a) : cdlat::subgroups_text(a),
           subgroups_out);
      return 0;
    }

    if (cd->parsed()) {
      if (cd_as_json && cd_as_dot)
        throw cdlat::UsageError("choose one of --json and --dot");
      cdlat::Analysis a = cdlat::Analysis::of(cdlat::load_group_file(cd_group));
      const std::string text = cd_as_json  ? cdlat::cd_json(a)
                               : cd_as_dot ? cdlat::lattice_dot(a)
                                           : cdlat::cd_text(a);
      emit(text, cd_out);
      return 0;
    }

    if (classify->parsed()) {
      cdlat::Analysis a =
          cdlat::Analysis::of(cdlat::load_group_file(classify_group));
      cdlat::ClassificationReport r = cdlat::classify_full(a);
      emit(classify_as_json ? cdlat::classification_json(r)
                            : cdlat::classification_text(r),
           classify_out);
      return 0;
    }

    if (verify->parsed()) {
      std::optional<cdlat::CheckId> id = cdlat::parse_check_id(verify_id);
      if (!id)
        throw cdlat::UsageError("unknown check id '" + verify_id +
                                "'; expected one of: " + check_ids_help);
      std::string description;
      const auto t0 = std::chrono::steady_clock::now();
      std::vector<cdlat::Group> corpus = load_corpus(
          verify_catalog, verify_max_order,
          verify_catalog.empty() || verify_max_opt->count() > 0, description);
      std::vector<cdlat::Analysis> analyses =
          cdlat::analyze_all(std::move(corpus), verify_jobs);
      const auto analysis_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(
              std::chrono::steady_clock::now() - t0)
              .count();
      cdlat::VerificationReport report =
          cdlat::run_check(*id, analyses, description);
      report.elapsed_ms += analysis_ms;  // count corpus analysis, not just scan
      if (report.checked == 0)
        std::cerr << "warning: the hypothesis applied to no groups; the "
                     "check passes vacuously\n";
      emit(verify_as_json ? cdlat::verification_json(report)
                          : cdlat::verification_text(report),
           verify_out);
      return report.pass ? 0 : 1;
    }

    if (search->parsed()) {
      std::string description;
      std::vector<cdlat::Group> corpus = load_corpus(
          search_catalog, search_max_order,
          search_catalog.empty() || search_max_opt->count() > 0, description);
      std::vector<cdlat::Analysis> analyses =
          cdlat::analyze_all(std::move(corpus), search_jobs);
      std::vector<cdlat::SearchHit> hits =
          cdlat::search_class_c(analyses, search_p, search_n);
      emit(cdlat::search_text(hits, description), search_out);
      return 0;
    }

    throw cdlat::ContractError("no subcommand dispatched");
  } catch (const cdlat::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cdlat::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
