// fuscat: validate premodular input files, run the verification suite, and
// print summaries of built-in categories.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuscat/error.hpp"
#include "fuscat/suite.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t seed_from_env() {
  const char* s = std::getenv("FUSCAT_SEED");
  if (s == nullptr || *s == '\0') return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw fuscat::Error(fuscat::Errc::Validation, std::string("FUSCAT_SEED is not an unsigned integer: ") + s);
  }
}

std::vector<std::size_t> parse_members(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--subcategory", "expected comma-separated simple indices, got '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

// Schema problems and unknown keys are usage errors; everything else is a failed validation.
int exit_code_for(const fuscat::Error& e) {
  return e.code() == fuscat::Errc::Schema || e.code() == fuscat::Errc::UnknownKey ? kExitUsage : kExitFailure;
}

int cmd_validate(const std::string& path, std::uint64_t seed) {
  const fuscat::CatalogEntry entry = fuscat::load_entry_file(path);
  std::cout << "ok: " << path << " rank " << entry.ring.rank();
  if (entry.ring.has_exact_dims()) std::cout << ", FPdim " << fuscat::approx_string(fuscat::global_fpdim(entry.ring));
  if (entry.table) {
    const auto numeric = fuscat::characters_numeric(entry.ring, seed);
    if (fuscat::match_columns(*entry.table, numeric, 1e-8).empty()) {
      throw fuscat::Error(fuscat::Errc::Validation, "exact character table disagrees with the numeric characters");
    }
    std::cout << ", character table";
  }
  if (entry.smatrix) std::cout << ", S-matrix (" << fuscat::classify(entry) << ")";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of fusion-ring and premodular identities"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a JSON input file against every applicable axiom");
  validate->add_option("file", validate_path, "Input file")->required();

  std::string verify_target, subcategory_text, format = "json";
  std::vector<std::string> checks;
  bool all_subcategories = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suite on a built-in key or a JSON file");
  verify->add_option("target", verify_target, "Built-in key or input file")->required();
  auto* sub_opt = verify->add_option("--subcategory", subcategory_text, "Comma-separated simples of one subcategory D");
  verify->add_flag("--all-subcategories", all_subcategories, "Run D-dependent checks over every fusion subcategory")
      ->excludes(sub_opt);
  verify->add_option("--checks", checks, "Check ids or id prefixes")->delimiter(',');
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));

  std::string report_target;
  auto* report = app.add_subcommand("report", "Markdown summary of cosets, Hecke constants, fibers and class data");
  report->add_option("target", report_target, "Built-in key or input file")->required();

  app.add_subcommand("list-builtins", "List the built-in categories");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::uint64_t seed = seed_from_env();
    if (*validate) return cmd_validate(validate_path, seed);

    if (*verify) {
      fuscat::VerifyOptions opts;
      opts.checks = checks;
      opts.seed = seed;
      if (all_subcategories) {
        opts.mode = fuscat::VerifyOptions::Subcategories::All;
      } else if (!subcategory_text.empty()) {
        opts.mode = fuscat::VerifyOptions::Subcategories::Explicit;
        opts.members = parse_members(subcategory_text);
      }
      const fuscat::CatalogEntry entry = fuscat::resolve_target(verify_target);
      fuscat::VerificationReport result;
      try {
        result = fuscat::verify(entry, opts);
      } catch (const fuscat::Error& e) {
        if (e.code() != fuscat::Errc::Validation) throw;
        std::cerr << e.what() << "\n";
        return kExitUsage;
      }
      if (format == "md") {
        std::cout << fuscat::report_to_markdown(result);
      } else {
        std::cout << fuscat::report_to_json(result).dump(2) << "\n";
      }
      return result.ok() ? 0 : kExitFailure;
    }

    if (*report) {
      std::cout << fuscat::render_overview(fuscat::resolve_target(report_target));
      return 0;
    }

    std::cout << fuscat::render_builtin_list();
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const fuscat::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
}
