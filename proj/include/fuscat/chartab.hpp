#pragma once

// Character theory of K(C) tensored with C: the algebra maps mu_j, their
// formal codegrees and the class dimensions dim(C^j), class functions in the
// character and idempotent bases, the cointegral of a subcategory and its
// idempotent support J_D.

#include <complex>
#include <cstdint>
#include <vector>

#include "fuscat/fusion.hpp"
#include "fuscat/report.hpp"

namespace fuscat {

using Matrix = std::vector<std::vector<CycNum>>;

class CharacterTable {
 public:
  std::size_t rank() const { return alpha_.size(); }
  /// mu_j(chi_i): rows are simples, columns are characters.
  const CycNum& alpha(std::size_t i, std::size_t j) const { return alpha_[i][j]; }
  const Matrix& matrix() const { return alpha_; }
  std::size_t fp_column() const { return fp_column_; }
  const std::vector<CycNum>& class_dims() const { return class_dims_; }
  const std::vector<CycNum>& codegrees() const { return codegrees_; }

 private:
  friend CharacterTable validate_character_table(const FusionRing& ring, Matrix table);

  Matrix alpha_;
  std::size_t fp_column_ = 0;
  std::vector<CycNum> class_dims_;
  std::vector<CycNum> codegrees_;
};

/// Checks that every column is an algebra map of the fusion ring, that the
/// table is invertible, and locates the Frobenius-Perron column.  Codegrees
/// are sum_i mu_j(chi_i) mu_j(chi_{dual i}); class dimensions are
/// FPdim(C) / codegree.
CharacterTable validate_character_table(const FusionRing& ring, Matrix table);

/// Approximate characters: values[i][j] = mu_j(chi_i).
struct NumericTable {
  std::vector<std::vector<std::complex<double>>> values;
  int attempts = 0;
};

/// Simultaneous eigenbasis of the commuting fusion matrices, from one random
/// real combination; retries with fresh coefficients on eigenvalue collisions.
NumericTable characters_numeric(const FusionRing& ring, std::uint64_t seed = 0);

/// perm[j] = numeric column matching exact column j within tol; empty if no
/// bijective match exists.
std::vector<std::size_t> match_columns(const CharacterTable& table, const NumericTable& numeric, double tol);

/// Class function held in both the character basis and the idempotent basis.
struct ClassFunction {
  std::vector<CycNum> chi_coords;
  std::vector<CycNum> f_coords;
};

ClassFunction class_function_from_chi(const CharacterTable& table, std::vector<CycNum> chi_coords);
/// Product in CF(C), computed through the fusion tensor on chi coordinates.
ClassFunction multiply(const FusionRing& ring, const CharacterTable& table, const ClassFunction& x,
                       const ClassFunction& y);

/// lambda_D = (1/FPdim(D)) sum_{i in D} d_i chi_i.
ClassFunction lambda_subcategory(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub);

/// Columns j with mu_j(lambda_D) = 1.  Throws NotIdempotent when some value
/// is neither 0 nor 1.
std::vector<std::size_t> support_JD(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub);

/// sum_{j in J_D} dim(C^j) against FPdim(C)/FPdim(D).
ScalarCheck check_class_dim_sum(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub);

/// lhs[l][k] = sum_i mu_l(chi_i) mu_k(chi_{dual i}), rhs[l][k] = delta FPdim(C)/dim(C^k).
MatrixCheck check_second_orthogonality(const FusionRing& ring, const CharacterTable& table);

}  // namespace fuscat
