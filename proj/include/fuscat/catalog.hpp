#pragma once

// Built-in premodular test categories with exact closed-form data.
//
// Keys: "trivial", "svec", "ising", "fib", "rep-s3", "su2k-<k>",
// "su2k-4-ad", "pointed-z<n>-q<c>", and Deligne products "<a>*<b>".

#include <optional>
#include <string>
#include <vector>

#include "fuscat/chartab.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/premod.hpp"

namespace fuscat {

struct CatalogEntry {
  std::string key;
  FusionRing ring;
  std::optional<CharacterTable> table;
  std::optional<SMatrix> smatrix;
  /// Stored for reference only; no check reads them.
  std::optional<std::vector<CycNum>> twists;
  std::string provenance;
};

/// Validates every component that is present and assembles an entry.
CatalogEntry make_entry(std::string key, FusionData data, std::optional<Matrix> table, std::optional<Matrix> smatrix,
                        std::optional<std::vector<CycNum>> twists, std::string provenance);

/// Keys enumerated by list-builtins and swept by the test suites.
const std::vector<std::string>& builtin_keys();

/// Built once per key and cached; safe to call concurrently.  Throws UnknownKey.
const CatalogEntry& builtin(const std::string& key);

/// Deligne product: fusion by deligne_product, tables by tensor product,
/// S-matrices and twists entrywise.
CatalogEntry product(const CatalogEntry& a, const CatalogEntry& b);

/// "modular", "symmetric", "slightly-degenerate", "degenerate", or "no-smatrix".
std::string classify(const CatalogEntry& entry);

}  // namespace fuscat
