#pragma once

// The verification suite: every identity and divisibility statement run
// against one premodular input, collected into an ordered report that
// renders as JSON or markdown.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuscat/catalog.hpp"
#include "fuscat/serialize.hpp"

namespace fuscat {

struct CheckResult {
  std::string id;
  json params = json::object();
  json lhs;
  json rhs;
  bool pass = false;
  /// Set when a hypothesis of the statement does not hold for this input.
  std::optional<std::string> skipped_reason;

  bool skipped() const { return skipped_reason.has_value(); }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportSummary {
  std::size_t total = 0, passed = 0, failed = 0, skipped = 0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  std::string target;
  /// Derived data shown alongside the checks (dimensions, fibers, center, ...).
  json analysis = json::object();
  std::vector<CheckResult> checks;

  ReportSummary summary() const;
  bool ok() const { return summary().failed == 0; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// (id, statement) in report order.
const std::vector<std::pair<std::string, std::string>>& check_legend();

struct VerifyOptions {
  enum class Subcategories { Default, All, Explicit };
  Subcategories mode = Subcategories::Default;
  /// Members for Explicit mode; must already form a fusion subcategory.
  std::vector<std::size_t> members;
  /// Requested ids or id prefixes; empty selects everything.
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
};

/// Throws Error(Validation) on an unknown check id or an explicit member list
/// that is not a fusion subcategory.
VerificationReport verify(const CatalogEntry& entry, const VerifyOptions& options);

json report_to_json(const VerificationReport& report);
/// Inverse of report_to_json; throws Error(Schema).
VerificationReport report_from_json(const json& j);
std::string report_to_markdown(const VerificationReport& report);

/// Markdown overview for the report command: dimensions, class data, M-fibers,
/// coset decompositions with Hecke constants, and integrality values.
std::string render_overview(const CatalogEntry& entry);

/// One line per built-in key: key, rank, FPdim, center size, classification.
std::string render_builtin_list();

/// A built-in key (including "a*b" products) or a path to a JSON input file.
CatalogEntry resolve_target(const std::string& target);

/// "{0,4}"
std::string format_set(const std::vector<std::size_t>& s);

}  // namespace fuscat
