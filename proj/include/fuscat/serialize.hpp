#pragma once

// JSON encoding of exact values and of premodular input files.
//
// CycNum: {"conductor": N, "coeffs": [[num, den], ...]} with phi(N)
// coefficients in lowest terms.  Integers beyond 64 bits are written as
// decimal strings; either form is accepted on input.
//
// Input file: {"rank", "names", "tensor", "dual", "fpdims"?, "smatrix"?,
// "char_table"?, "twists"?, "conductor"?}.

#include <string>

#include <json.hpp>

#include "fuscat/catalog.hpp"

namespace fuscat {

using json = nlohmann::ordered_json;

json cycnum_to_json(const CycNum& x);
/// Throws Error(Schema) on malformed input.
CycNum cycnum_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// A CycNum with a float rendering alongside: {"exact": ..., "approx": "..."}.
json exact_value(const CycNum& x);
/// "%.12g", with an imaginary part when it is not negligible.
std::string approx_string(const CycNum& x);

json entry_to_json(const CatalogEntry& entry);
/// Schema problems raise Error(Schema); failed axioms propagate from the validators.
CatalogEntry entry_from_json(const json& j, std::string key);
CatalogEntry load_entry_file(const std::string& path);

}  // namespace fuscat
